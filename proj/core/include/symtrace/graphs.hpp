#pragma once

#include <cstddef>
#include <vector>

#include "symtrace/exactlin.hpp"
#include "symtrace/operators.hpp"
#include "symtrace/symspace.hpp"

namespace symtrace {

// Undecorated bipartite multigraph on α_1..α_m, β_1..β_m: mult(i, j) arrows join
// α_i and β_j, and every vertex has degree r.
class UGraph {
 public:
  UGraph() = default;
  // Throws InvalidInput unless all row and column sums equal r.
  UGraph(std::size_t m, std::size_t r, std::vector<unsigned> mult);
  static UGraph from_rows(std::size_t r, const std::vector<std::vector<unsigned>>& rows);

  std::size_t m() const { return m_; }
  std::size_t r() const { return r_; }
  unsigned operator()(std::size_t i, std::size_t j) const { return mult_[i * m_ + j]; }
  const std::vector<unsigned>& mult() const { return mult_; }
  std::vector<std::vector<unsigned>> rows() const;

  friend bool operator==(const UGraph&, const UGraph&) = default;
  friend auto operator<=>(const UGraph&, const UGraph&) = default;

 private:
  std::size_t m_ = 0;
  std::size_t r_ = 1;
  std::vector<unsigned> mult_;
};

// Vertex decorations and the arrow functional u(v⊗w) = vᵀ·u·w.
struct Decoration {
  std::vector<SymTensor> v_tensors;  // α_i, over V
  std::vector<SymTensor> w_tensors;  // β_j, over W
  Matrix u;                          // dim V × dim W
};

// All graphs of Γ(m, r), each once, in descending lexicographic order of the
// row-major multiplicity matrix. Γ(0, r) holds the single empty graph.
std::vector<UGraph> enumerate_graphs(std::size_t m, std::size_t r);

// s_γ: vertex-fixing symmetries only permute parallel arrows, Π mult(i,j)!.
BigInt automorphism_order(const UGraph& g);

// Positions in the word of the factor standing for each α_i (an M-factor) and
// each β_j (an I-factor).
struct FactorAssignment {
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
};
// i-th M-factor in written order is α_i, i-th I-factor is β_i.
FactorAssignment natural_assignment(const OperatorWord& word);

// Number of arrows (with multiplicity) whose M-factor lies strictly to the
// right of its I-factor.
std::size_t rho_statistic(const UGraph& g, const OperatorWord& word, const FactorAssignment& assignment);

// |γ| for rank-one decorations v_i^{⊗r}, w_j^{⊗r}.
Rational graph_value_rank_one(const UGraph& g, const std::vector<RationalVector>& vs,
                              const std::vector<RationalVector>& ws, const Matrix& u);
// |γ| for general decorations: the multilinear extension, via polarization.
Rational graph_value(const UGraph& g, const Decoration& dec);

struct ExpandedGraph {
  UGraph matching;        // size r·m, regularity 1; α_i^l is vertex i·r + l
  BigInt symmetry_count;  // (r!)^{2m} / s_γ
};
ExpandedGraph expand_graph(const UGraph& g);
// Projects a matching on r·m + r·m split vertices back to Γ(m, r).
UGraph collapse_matching(const UGraph& matching, std::size_t r);

// mult(i, j) = #{slots p in block i with σ(p) in block j}, blocks of size r.
UGraph perm_to_graph(const Permutation& sigma, std::size_t n, std::size_t r);
// Lexicographically smallest σ with perm_to_graph(σ) = g.
Permutation graph_to_perm(const UGraph& g);

}  // namespace symtrace
