// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any
// criterion fails or runs over its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "symtrace/fiber.hpp"
#include "symtrace/random.hpp"
#include "symtrace/traceid.hpp"

using namespace symtrace;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) note << "first failure: " << what << "; ";
    ok = ok && condition;
  }
};

Rational evaluate_poly(const oracle::Poly& p, const RationalVector& x) {
  Rational sum = 0;
  for (const auto& [alpha, c] : p) {
    Rational term = c;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (unsigned k = 0; k < alpha[i]; ++k) term *= x[i];
    sum += term;
  }
  return sum;
}

Decoration decoration_of(const OperatorWord& word) {
  Decoration dec;
  for (const auto& f : word.factors()) {
    (f.kind == FactorKind::multiply ? dec.v_tensors : dec.w_tensors).push_back(f.tensor);
  }
  dec.u = Matrix::identity(word.dim());
  return dec;
}

void trace_r1(Outcome& out) {
  Rng rng(1001);
  std::size_t cases = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& ordering : gen::all_orderings(m)) {
      for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t N = 0; N <= 5; ++N) {
          std::vector<SymTensor> v, w;
          for (std::size_t i = 0; i < m; ++i) {
            v.push_back(SymTensor::linear(rng.vector(d)));
            w.push_back(SymTensor::linear(rng.vector(d)));
          }
          const auto word = gen::word_from_ordering(ordering, 1, v, w);
          const auto report = verify_trace_identity(word, N, d);
          out.require(report.match, "graph sum differs from trace");
          out.require(report.direct_trace == oracle::poly_word_trace(word, N, d), "trace differs from oracle");
          ++cases;
        }
      }
    }
  }
  out.require(cases >= 100, "fewer than 100 decorations");
  out.note << cases << " decorated words";
}

void trace_r2(Outcome& out) {
  Rng rng(1002);
  std::size_t cases = 0, value_checks = 0;
  for (std::size_t m = 1; m <= 2; ++m) {
    for (const auto& ordering : gen::all_orderings(m)) {
      for (std::size_t d = 1; d <= 2; ++d) {
        for (std::size_t N : {2u, 4u, 6u}) {
          std::vector<SymTensor> v, w;
          for (std::size_t i = 0; i < m; ++i) {
            v.push_back(rng.sym_tensor(d, 2, 3, 2));
            w.push_back(rng.sym_tensor(d, 2, 3, 2));
          }
          const auto word = gen::word_from_ordering(ordering, 2, v, w);
          const auto report = verify_trace_identity(word, N, d);
          out.require(report.match, "graph sum differs from trace");
          out.require(report.direct_trace == oracle::poly_word_trace(word, N, d), "trace differs from oracle");
          if (N == 2) {
            const Decoration dec = decoration_of(word);
            for (const auto& term : report.per_graph) {
              out.require(term.value == oracle::dense_graph_value(term.graph, dec), "graph value differs from oracle");
              ++value_checks;
            }
          }
          ++cases;
        }
      }
    }
  }
  out.require(cases >= 50, "fewer than 50 cases");
  out.note << cases << " words with general decorations, " << value_checks << " graph values cross-checked";
}

void commutator(Outcome& out) {
  Rng rng(1003);
  std::size_t checks = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (int pair_index = 0; pair_index < 20; ++pair_index) {
      const auto v = rng.vector(d), w = rng.vector(d);
      const SymTensor sv = SymTensor::linear(v), sw = SymTensor::linear(w);
      for (std::size_t N = 0; N <= 6; ++N) {
        const Matrix lhs = contract_op(sw, N + 1) * mult_op(sv, N + 1) - mult_op(sv, N) * contract_op(sw, N);
        out.require(lhs == Matrix::identity(oracle::count_monomials(d, N)) * dot(w, v), "commutator");
        ++checks;
      }
    }
  }
  out.note << checks << " matrix identities";
}

void macaulay(Outcome& out) {
  Rng rng(1004);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t r = 1; r <= 3; ++r) {
      std::vector<SymTensor> full;
      for (const auto& alpha : monomials(d, r)) full.push_back(SymTensor::monomial(alpha));
      out.require(only_zero_test(full, r, d), "full basis");
    }
  }
  for (unsigned r = 1; r <= 2; ++r) {
    const std::vector<SymTensor> b{SymTensor::monomial(MultiIndex{r, 0}), SymTensor::monomial(MultiIndex{0, r})};
    out.require(only_zero_test(b, r, 2), "coordinate powers");
  }
  const std::vector<SymTensor> x2{SymTensor::monomial(MultiIndex{2, 0})};
  out.require(!only_zero_test(x2, 2, 2), "x^2");
  std::size_t singles = 0;
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t r = 1; r <= 3; ++r) {
      for (int k = 0; k < 5; ++k) {
        const std::vector<SymTensor> b{power_embed(rng.nonzero_vector(d), r)};
        out.require(!only_zero_test(b, r, d), "single power");
        ++singles;
      }
    }
  }
  out.note << "positive and negative controls, " << singles << " single powers rejected";
}

void certificate_end_to_end(Outcome& out) {
  Rng rng(1005);
  std::size_t deficient = 0, max_m = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t dv = rng.integer(1, 2), dw = rng.integer(1, 2), r = rng.integer(1, 2);
    const auto inst = gen::fiber_instance(rng, dv, dw, r, k % 3 == 0);
    const auto reduction = reduce_to_bijective(inst);
    if (reduction.reduced.dim_v < dv || reduction.reduced.dim_w < dw) ++deficient;
    const auto witness = product_witness(inst);
    const Certificate& c = witness.certificate;
    out.require(sgn(c.value) != 0, "zero certificate value");
    out.require(BigInt(c.m) <= nu_bound(r, reduction.reduced.dim_v), "certificate longer than nu");
    out.require(witness.pairing == c.value, "pairing differs from certificate value");
    Decoration dec{{}, {}, inst.u};
    for (auto i : c.a_idx) dec.v_tensors.push_back(inst.A[i]);
    for (auto j : c.b_idx) dec.w_tensors.push_back(inst.B[j]);
    out.require(oracle::dense_graph_value(c.graph, dec) == c.value, "certificate value differs from oracle");
    max_m = std::max(max_m, c.m);
  }
  out.require(deficient > 0, "no rank-deficient instance");
  out.note << "50 instances (" << deficient << " with a quotient reduction), largest m = " << max_m;
}

void phi_identity(Outcome& out) {
  Rng rng(1006);
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t r = 1; r <= 2; ++r) {
      for (std::size_t dv = 1; dv <= 2; ++dv) {
        for (std::size_t dw = 1; dw <= 2; ++dw) {
          for (int k = 0; k < 20; ++k) {
            Permutation sigma(n * r);
            for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
            rng.shuffle(sigma);
            std::vector<SymTensor> s, t;
            for (std::size_t i = 0; i < n; ++i) {
              s.push_back(rng.sym_tensor(dv, r, 3, 2));
              t.push_back(rng.sym_tensor(dw, r, 3, 2));
            }
            const Matrix u = gen::functional(rng, dv, dw, false);
            const auto check = verify_phi_identity(sigma, s, t, u);
            out.require(check.match, "phi identity");
            out.require(check.rhs == oracle::dense_graph_value(check.graph, {s, t, u}), "graph value differs from oracle");
            ++checks;
          }
        }
      }
    }
  }
  out.note << checks << " permutations";
}

void nu_values(Outcome& out) {
  for (const auto& [r, d, expected] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{1, 1, 1}, {1, 2, 2520}}) {
    const std::uint64_t dim = oracle::pascal_binomial(d + r * d - 1, r * d);
    const std::uint64_t reference = oracle::brute_lcm(static_cast<unsigned>(dim * dim));
    out.require(reference == expected, "oracle disagrees with the expected value");
    out.require(nu_bound(r, d) == reference, "nu_bound");
  }
  out.note << "nu(1,1) = " << nu_bound(1, 1).get_str() << ", nu(1,2) = " << nu_bound(1, 2).get_str();
}

void graph_combinatorics(Outcome& out) {
  for (const auto& [m, r, expected] :
       std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{{2, 1, 2}, {2, 2, 3}, {3, 1, 6}}) {
    const auto count = enumerate_graphs(m, r).size();
    out.require(count == oracle::brute_graphs(m, r).size(), "count differs from brute force");
    out.require(count == expected, "count differs from expected");
  }
  std::size_t graphs = 0;
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t r = 1; r <= 2; ++r) {
      BigInt full = 1;
      for (std::size_t k = 0; k < 2 * m; ++k) full *= factorial(r);
      for (const auto& g : enumerate_graphs(m, r)) {
        const auto ex = expand_graph(g);
        out.require(ex.symmetry_count * automorphism_order(g) == full, "symmetry count times s");
        out.require(ex.symmetry_count == BigInt(oracle::brute_matchings_onto(g)), "symmetry count vs matchings");
        ++graphs;
      }
    }
  }
  out.note << "counts 2, 3, 6; " << graphs << " expansions checked";
}

void sum_witness(Outcome& out) {
  Rng rng(1009);
  for (int k = 0; k < 30; ++k) {
    const std::size_t dv = rng.integer(1, 2), dw = rng.integer(1, 2), r = rng.integer(1, 2);
    const auto a = gen::only_zero_forms(rng, dv, r);
    const auto b = gen::only_zero_forms(rng, dw, r);
    const auto uv = rng.nonzero_vector(dv);
    const auto uw = rng.vector(dw);
    const auto w = direct_sum_witness(a, b, uv, uw, r);
    RationalVector full(uv);
    full.insert(full.end(), uw.begin(), uw.end());
    out.require(sgn(w.pairing) != 0, "zero pairing");
    out.require(evaluate_poly(oracle::to_poly(w.tensor), full) == w.pairing, "pairing differs from evaluation");
  }
  out.note << "30 instances";
}

void nil_link(Outcome& out) {
  Rng rng(1010);
  for (int k = 0; k < 10; ++k) {
    const std::size_t d = rng.integer(1, 2), r = rng.integer(1, 2);
    const auto a = gen::only_zero_forms(rng, d, r);
    const auto b = gen::only_zero_forms(rng, d, r);
    out.require(only_zero_test(b, r, d), "generator precondition");
    const std::size_t N = r * d;
    std::vector<Matrix> generators;
    for (const auto& x : a)
      for (const auto& y : b) generators.push_back(mult_op(x, N) * contract_op(y, N));
    out.require(!is_nil(generators), "generated algebra is nil");
  }
  out.note << "10 instances";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "trace identity, r = 1", 60, trace_r1},
      {2, "trace identity, r = 2", 120, trace_r2},
      {3, "commutator identity", 10, commutator},
      {4, "Macaulay criterion", 10, macaulay},
      {5, "certificate search end to end", 300, certificate_end_to_end},
      {6, "phi identity", 30, phi_identity},
      {7, "nu values", 1, nu_values},
      {8, "graph combinatorics", 10, graph_combinatorics},
      {9, "direct-sum witness", 10, sum_witness},
      {10, "nilalgebra link", 60, nil_link},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.note << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_s) {
      out.ok = false;
      out.note << "; over budget of " << c.budget_s << " s";
    }
    std::printf("%s %d %s: %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.note.str().c_str(), seconds);
    if (!out.ok) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
