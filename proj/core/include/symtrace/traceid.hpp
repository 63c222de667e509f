#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "symtrace/exactlin.hpp"
#include "symtrace/graphs.hpp"
#include "symtrace/operators.hpp"

namespace symtrace {

// c_γ = (r!)^{2m} s_γ^{-1} · C(d + ρ + N − 1, d + r·m − 1), with ρ counted per
// arrow with multiplicity. For r = 1 this is C(d + ρ + N − 1, d + m − 1).
Rational coefficient_c(std::size_t d, std::size_t N, std::size_t r, std::size_t m, std::size_t rho,
                       const BigInt& symmetry_order);

struct GraphTerm {
  UGraph graph;
  std::size_t rho = 0;
  BigInt symmetry_order;
  Rational coefficient;
  Rational value;
};

struct TraceReport {
  OperatorWord word;
  std::size_t dim = 0;
  std::size_t N = 0;
  Rational direct_trace;
  Rational graph_sum;
  std::vector<GraphTerm> per_graph;
  bool match = false;
};

struct TraceOptions {
  // Worker threads for the per-graph terms; results are summed in
  // enumeration order regardless.
  unsigned parallel = 1;
  // Replaces c_γ for the graph at the given enumeration index. Used to build
  // deliberately inconsistent fixtures.
  std::map<std::size_t, Rational> coefficient_overrides;
};

// tr(word restricted to S^N V) computed two ways: directly from word_matrix,
// and as Σ_γ c_γ |γ| over Γ(m, r) with u = ⟨·,·⟩. dim is needed only for the
// empty word. Throws InvalidInput for unbalanced words.
TraceReport verify_trace_identity(const OperatorWord& word, std::size_t N, std::size_t dim,
                                  const TraceOptions& options = {});
TraceReport verify_trace_identity(const OperatorWord& word, std::size_t N);

// Graph sum only, with an explicit vertex-to-factor assignment.
Rational trace_graph_sum(const OperatorWord& word, std::size_t N, std::size_t dim,
                         const FactorAssignment& assignment);

}  // namespace symtrace
