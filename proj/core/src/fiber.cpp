#include "symtrace/fiber.hpp"

#include <optional>

#include "symtrace/errors.hpp"
#include "symtrace/operators.hpp"
#include "symtrace/traceid.hpp"

namespace symtrace {

void FiberInstance::validate() const {
  if (dim_v < 1 || dim_w < 1) throw InvalidInput("FiberInstance: dimensions must be positive");
  if (u.rows() != dim_v || u.cols() != dim_w) throw InvalidInput("FiberInstance: u must be dimV × dimW");
  for (const auto& a : A) {
    if (a.dim() != dim_v || a.degree() != r) throw InvalidInput("FiberInstance: element of A has wrong shape");
  }
  for (const auto& b : B) {
    if (b.dim() != dim_w || b.degree() != r) throw InvalidInput("FiberInstance: element of B has wrong shape");
  }
}

Matrix macaulay_matrix(std::span<const SymTensor> forms, std::size_t N) {
  if (forms.empty()) throw InvalidInput("macaulay_matrix: no forms");
  const std::size_t d = forms.front().dim();
  std::vector<Matrix> blocks;
  std::size_t cols = 0;
  for (const auto& f : forms) {
    if (f.dim() != d) throw InvalidInput("macaulay_matrix: forms of different dimension");
    blocks.push_back(mult_op(f, N));
    cols += blocks.back().cols();
  }
  Matrix m(sym_dim(d, N), cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return m;
}

bool only_zero_test(std::span<const SymTensor> forms, std::size_t r, std::size_t d) {
  if (forms.empty()) throw InvalidInput("only_zero_test: empty form list");
  for (const auto& f : forms) {
    if (f.dim() != d || f.degree() != r) throw InvalidInput("only_zero_test: form has wrong dimension or degree");
  }
  const std::size_t N = r * d;
  return rank(macaulay_matrix(forms, N)) == sym_dim(d, N);
}

BigInt nu_bound(std::size_t r, std::size_t d) {
  if (r < 1 || d < 1) throw InvalidInput("nu_bound requires r >= 1 and d >= 1");
  const BigInt s = sym_dim(d, r * d);
  return lcm_upto(s * s);
}

Reduction reduce_to_bijective(const FiberInstance& inst) {
  inst.validate();
  if (inst.u.is_zero()) throw DegenerateFunctional("the functional u is zero");
  // ker(û) = {v : vᵀu = 0}, ker(û*) = {w : u w = 0}
  const auto left = rank_kernel(inst.u.transpose());
  const auto right = rank_kernel(inst.u);
  Reduction red{{}, quotient_map(inst.dim_v, left.kernel_basis), quotient_map(inst.dim_w, right.kernel_basis)};
  FiberInstance& out = red.reduced;
  out.dim_v = left.rank;
  out.dim_w = right.rank;
  out.r = inst.r;
  for (const auto& a : inst.A) out.A.push_back(linear_image(a, red.v_map.projection));
  for (const auto& b : inst.B) out.B.push_back(linear_image(b, red.w_map.projection));
  // u(v⊗w) only sees the section components, so u' = sectionᵀ · u · section.
  out.u = red.v_map.section.transpose() * inst.u * red.w_map.section;
  return red;
}

namespace {

// Indices of a maximal independent subset, chosen greedily in list order.
std::vector<std::size_t> independent_indices(std::span<const SymTensor> list) {
  std::vector<std::size_t> out;
  if (list.empty()) return out;
  SpanBuilder span(list.front().size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (span.insert(list[i].coeffs())) out.push_back(i);
  }
  return out;
}

struct Word {
  std::vector<std::size_t> pairs;  // generator indices, left to right
  Matrix matrix;
};

}  // namespace

CertificateSearch search_certificate(const FiberInstance& inst) {
  inst.validate();
  if (inst.u.is_zero()) throw DegenerateFunctional("the functional u is zero");
  if (inst.A.empty() || inst.B.empty()) throw InvalidInput("certificate_search: A and B must be nonempty");
  if (!only_zero_test(inst.A, inst.r, inst.dim_v)) throw InvalidInput("certificate_search: A has a nonzero common zero");
  if (!only_zero_test(inst.B, inst.r, inst.dim_w)) throw InvalidInput("certificate_search: B has a nonzero common zero");

  CertificateSearch result;
  result.reduction = reduce_to_bijective(inst);
  const FiberInstance& red = result.reduction.reduced;
  const std::size_t k = red.dim_v;
  const std::size_t r = inst.r;
  const std::size_t N = r * k;
  result.N = N;

  const auto a_idx = independent_indices(inst.A);
  const auto b_idx = independent_indices(inst.B);
  // Identify W' with V'* through w ↦ u'w, so that u'(v⊗w) = ⟨v, u'w⟩.
  std::vector<SymTensor> a_red, b_dual;
  for (auto i : a_idx) a_red.push_back(red.A[i]);
  for (auto j : b_idx) b_dual.push_back(linear_image(red.B[j], red.u));

  std::vector<Matrix> generators;
  std::vector<Matrix> mults, contracts;
  for (const auto& a : a_red) mults.push_back(mult_op(a, N));
  for (const auto& b : b_dual) contracts.push_back(contract_op(b, N));
  for (const auto& mo : mults)
    for (const auto& co : contracts) generators.push_back(mo * co);
  const std::size_t nb = b_dual.size();

  const std::size_t space = sym_dim(k, N);
  const std::size_t length_cap = space * space;

  std::vector<Word> layer;
  std::optional<Word> found;
  for (std::size_t g = 0; g < generators.size(); ++g) layer.push_back({{g}, generators[g]});
  for (std::size_t m = 1; m <= length_cap && !found; ++m) {
    if (m > 1) {
      // Extend a basis of the length-(m−1) words; candidates stay in
      // lexicographic order of their generator sequences.
      std::vector<Word> candidates;
      for (const auto& w : layer) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
          Word next{w.pairs, w.matrix * generators[g]};
          next.pairs.push_back(g);
          candidates.push_back(std::move(next));
        }
      }
      layer = std::move(candidates);
    }
    for (const auto& w : layer) {
      ++result.words_examined;
      if (sgn(w.matrix.trace()) != 0) {
        found = w;
        break;
      }
    }
    if (found) break;
    SpanBuilder span(space * space);
    std::vector<Word> basis;
    for (auto& w : layer) {
      if (span.insert(w.matrix.entries())) basis.push_back(std::move(w));
    }
    if (basis.empty()) break;
    layer = std::move(basis);
  }
  if (!found) {
    throw IdentityViolation("certificate_search: no word of nonzero trace up to the stabilization length");
  }

  const std::size_t m = found->pairs.size();
  std::vector<Factor> factors;
  Certificate& cert = result.certificate;
  cert.m = m;
  for (auto g : found->pairs) {
    const std::size_t ai = g / nb;
    const std::size_t bi = g % nb;
    factors.push_back({FactorKind::multiply, a_red[ai]});
    factors.push_back({FactorKind::contract, b_dual[bi]});
    cert.a_idx.push_back(a_idx[ai]);
    cert.b_idx.push_back(b_idx[bi]);
  }
  const TraceReport report = verify_trace_identity(OperatorWord(r, std::move(factors)), N, k);
  if (!report.match) throw IdentityViolation("certificate_search: trace identity failed on the certifying word");
  result.word_trace = report.direct_trace;
  if (report.direct_trace != found->matrix.trace()) {
    throw IdentityViolation("certificate_search: word trace is not reproducible");
  }
  for (const auto& t : report.per_graph) {
    if (sgn(t.coefficient) != 0 && sgn(t.value) != 0) {
      cert.graph = t.graph;
      cert.value = t.value;
      return result;
    }
  }
  throw IdentityViolation("certificate_search: nonzero trace but every graph term vanishes");
}

Certificate certificate_search(const FiberInstance& inst) { return search_certificate(inst).certificate; }

SumWitness direct_sum_witness(std::span<const SymTensor> a, std::span<const SymTensor> b,
                              std::span<const Rational> u_v, std::span<const Rational> u_w, std::size_t r) {
  const bool use_v = !is_zero(u_v);
  if (!use_v && is_zero(u_w)) throw DegenerateFunctional("direct_sum_witness: uV and uW are both zero");
  const std::span<const SymTensor> list = use_v ? a : b;
  const std::span<const Rational> u_side = use_v ? u_v : u_w;
  if (list.empty()) throw InvalidInput("direct_sum_witness: no tensors on the side where u is nonzero");
  const SymTensor evaluation = power_embed(u_side, r);
  RationalVector u_full(u_v.begin(), u_v.end());
  u_full.insert(u_full.end(), u_w.begin(), u_w.end());
  const SymTensor full_power = power_embed(u_full, r);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].dim() != u_side.size() || list[i].degree() != r) {
      throw InvalidInput("direct_sum_witness: tensor shape does not match u");
    }
    if (sgn(pair(list[i], evaluation)) == 0) continue;
    const Summand side = use_v ? Summand::first : Summand::second;
    SymTensor injected = inject_sum(list[i], u_full.size(), side);
    Rational p = pair(injected, full_power);
    return {std::move(injected), side, i, std::move(p)};
  }
  throw PreconditionViolation("direct_sum_witness: every tensor vanishes at u; the list has a nonzero common zero");
}

TensorPow phi_assemble(const Permutation& sigma, std::span<const SymTensor> s, std::span<const SymTensor> t) {
  if (s.size() != t.size() || s.empty()) throw InvalidInput("phi_assemble: need n ≥ 1 tensors on each side");
  const std::size_t r = s.front().degree();
  TensorPow left(s.front().dim(), 0, RationalVector{Rational(1)});
  TensorPow right(t.front().dim(), 0, RationalVector{Rational(1)});
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].degree() != r || t[i].degree() != r || s[i].dim() != s.front().dim() || t[i].dim() != t.front().dim()) {
      throw InvalidInput("phi_assemble: inconsistent tensor shapes");
    }
    left = tensor_product(left, to_tensor(s[i]));
    right = tensor_product(right, to_tensor(t[i]));
  }
  if (sigma.size() != r * s.size()) throw InvalidInput("phi_assemble: permutation must act on r·n slots");
  return interleave(permute_tensor(left, sigma), right);
}

TensorPow functional_power(const Matrix& u, std::size_t k) {
  return TensorPow::power(u.entries(), k);
}

PhiCheck verify_phi_identity(const Permutation& sigma, std::span<const SymTensor> s, std::span<const SymTensor> t,
                             const Matrix& u) {
  if (s.empty() || s.front().dim() != u.rows() || t.front().dim() != u.cols()) {
    throw InvalidInput("verify_phi_identity: u does not match the tensor dimensions");
  }
  const std::size_t n = s.size();
  const std::size_t r = s.front().degree();
  PhiCheck out;
  const TensorPow phi = phi_assemble(sigma, s, t);
  out.lhs = tensor_pair(phi, functional_power(u, r * n));
  out.graph = perm_to_graph(sigma, n, r);
  Decoration dec{std::vector<SymTensor>(s.begin(), s.end()), std::vector<SymTensor>(t.begin(), t.end()), u};
  out.rhs = graph_value(out.graph, dec);
  out.match = out.lhs == out.rhs;
  return out;
}

ProductWitness product_witness(const FiberInstance& inst) {
  ProductWitness out;
  out.certificate = certificate_search(inst);
  const Certificate& cert = out.certificate;
  out.sigma = graph_to_perm(cert.graph);
  std::vector<SymTensor> s, t;
  for (auto i : cert.a_idx) s.push_back(inst.A[i]);
  for (auto j : cert.b_idx) t.push_back(inst.B[j]);
  out.element = phi_assemble(out.sigma, s, t);
  out.pairing = tensor_pair(out.element, functional_power(inst.u, inst.r * cert.m));
  if (out.pairing != cert.value) {
    throw IdentityViolation("product_witness: pairing against u^{⊗rm} differs from the certificate value");
  }
  return out;
}

}  // namespace symtrace
