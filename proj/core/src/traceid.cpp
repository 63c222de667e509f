#include "symtrace/traceid.hpp"

#include <algorithm>
#include <thread>

#include "symtrace/errors.hpp"

namespace symtrace {

Rational coefficient_c(std::size_t d, std::size_t N, std::size_t r, std::size_t m, std::size_t rho,
                       const BigInt& symmetry_order) {
  if (symmetry_order < 1) throw InvalidInput("coefficient_c: symmetry order must be positive");
  BigInt scale = 1;
  const BigInt rf = factorial(r);
  for (std::size_t k = 0; k < 2 * m; ++k) scale *= rf;
  const BigInt b = binomial(static_cast<long>(d + rho + N) - 1, static_cast<long>(d + r * m) - 1);
  Rational c(scale * b, symmetry_order);
  c.canonicalize();
  return c;
}

namespace {

Decoration decoration_for(const OperatorWord& word, const FactorAssignment& assignment, std::size_t dim) {
  Decoration dec;
  for (auto p : assignment.alpha) dec.v_tensors.push_back(word.factors()[p].tensor);
  for (auto p : assignment.beta) dec.w_tensors.push_back(word.factors()[p].tensor);
  dec.u = Matrix::identity(dim);
  return dec;
}

std::size_t balanced_size(const OperatorWord& word) {
  const std::size_t m = word.count(FactorKind::multiply);
  if (m != word.count(FactorKind::contract)) {
    throw InvalidInput("trace identity needs equally many M- and I-factors");
  }
  return m;
}

GraphTerm make_term(const UGraph& g, const OperatorWord& word, const FactorAssignment& assignment,
                    const Decoration& dec, std::size_t dim, std::size_t N) {
  GraphTerm t;
  t.graph = g;
  t.rho = rho_statistic(g, word, assignment);
  t.symmetry_order = automorphism_order(g);
  t.coefficient = coefficient_c(dim, N, word.r(), g.m(), t.rho, t.symmetry_order);
  t.value = graph_value(g, dec);
  return t;
}

}  // namespace

Rational trace_graph_sum(const OperatorWord& word, std::size_t N, std::size_t dim,
                         const FactorAssignment& assignment) {
  const std::size_t m = balanced_size(word);
  const Decoration dec = decoration_for(word, assignment, dim);
  Rational sum = 0;
  for (const auto& g : enumerate_graphs(m, word.r())) {
    const GraphTerm t = make_term(g, word, assignment, dec, dim, N);
    sum += t.coefficient * t.value;
  }
  return sum;
}

TraceReport verify_trace_identity(const OperatorWord& word, std::size_t N, std::size_t dim,
                                  const TraceOptions& options) {
  const std::size_t m = balanced_size(word);
  TraceReport report;
  report.word = word;
  report.dim = dim;
  report.N = N;
  report.direct_trace = word_matrix(word, N, dim).trace();

  const FactorAssignment assignment = natural_assignment(word);
  const Decoration dec = decoration_for(word, assignment, dim);
  const auto graphs = enumerate_graphs(m, word.r());
  report.per_graph.resize(graphs.size());

  const unsigned workers = std::max(1u, std::min<unsigned>(options.parallel, static_cast<unsigned>(graphs.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      report.per_graph[k] = make_term(graphs[k], word, assignment, dec, dim, N);
    }
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < graphs.size(); k += workers) {
          report.per_graph[k] = make_term(graphs[k], word, assignment, dec, dim, N);
        }
      });
    }
  }

  for (const auto& [index, c] : options.coefficient_overrides) {
    if (index >= report.per_graph.size()) throw InvalidInput("coefficient override names a nonexistent graph");
    report.per_graph[index].coefficient = c;
  }
  report.graph_sum = 0;
  for (const auto& t : report.per_graph) report.graph_sum += t.coefficient * t.value;
  report.match = report.direct_trace == report.graph_sum;
  return report;
}

TraceReport verify_trace_identity(const OperatorWord& word, std::size_t N) {
  if (word.empty()) throw InvalidInput("verify_trace_identity: empty word needs an explicit dimension");
  return verify_trace_identity(word, N, word.dim());
}

}  // namespace symtrace
