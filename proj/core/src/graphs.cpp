#include "symtrace/graphs.hpp"

#include <numeric>

#include "symtrace/errors.hpp"

namespace symtrace {

UGraph::UGraph(std::size_t m, std::size_t r, std::vector<unsigned> mult) : m_(m), r_(r), mult_(std::move(mult)) {
  if (mult_.size() != m * m) throw InvalidInput("UGraph: multiplicity matrix must be m × m");
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
      row += mult_[i * m + j];
      col += mult_[j * m + i];
    }
    if (row != r || col != r) throw InvalidInput("UGraph: row and column sums must all equal r");
  }
}

UGraph UGraph::from_rows(std::size_t r, const std::vector<std::vector<unsigned>>& rows) {
  std::vector<unsigned> mult;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw InvalidInput("UGraph: multiplicity matrix must be square");
    mult.insert(mult.end(), row.begin(), row.end());
  }
  return UGraph(rows.size(), r, std::move(mult));
}

std::vector<std::vector<unsigned>> UGraph::rows() const {
  std::vector<std::vector<unsigned>> out(m_);
  for (std::size_t i = 0; i < m_; ++i) out[i].assign(mult_.begin() + i * m_, mult_.begin() + (i + 1) * m_);
  return out;
}

namespace {

void fill_rows(std::size_t m, std::size_t r, std::size_t row, std::size_t col, std::size_t left,
               std::vector<unsigned>& mult, std::vector<std::size_t>& col_sums, std::vector<UGraph>& out) {
  if (row == m) {
    out.emplace_back(m, r, mult);
    return;
  }
  if (col == m) {
    if (left == 0) fill_rows(m, r, row + 1, 0, r, mult, col_sums, out);
    return;
  }
  const std::size_t cap = std::min(left, r - col_sums[col]);
  for (std::size_t a = cap + 1; a-- > 0;) {
    mult[row * m + col] = static_cast<unsigned>(a);
    col_sums[col] += a;
    fill_rows(m, r, row, col + 1, left - a, mult, col_sums, out);
    col_sums[col] -= a;
  }
  mult[row * m + col] = 0;
}

Rational bilinear(const RationalVector& v, const Matrix& u, const RationalVector& w) {
  return dot(v, u.apply(w));
}

}  // namespace

std::vector<UGraph> enumerate_graphs(std::size_t m, std::size_t r) {
  if (r < 1) throw InvalidInput("enumerate_graphs requires r >= 1");
  std::vector<UGraph> out;
  std::vector<unsigned> mult(m * m, 0);
  std::vector<std::size_t> col_sums(m, 0);
  fill_rows(m, r, 0, 0, r, mult, col_sums, out);
  return out;
}

BigInt automorphism_order(const UGraph& g) {
  BigInt s = 1;
  for (auto k : g.mult()) s *= factorial(k);
  return s;
}

FactorAssignment natural_assignment(const OperatorWord& word) {
  FactorAssignment a;
  for (std::size_t p = 0; p < word.size(); ++p) {
    (word.factors()[p].kind == FactorKind::multiply ? a.alpha : a.beta).push_back(p);
  }
  return a;
}

std::size_t rho_statistic(const UGraph& g, const OperatorWord& word, const FactorAssignment& assignment) {
  const std::size_t m = g.m();
  if (assignment.alpha.size() != m || assignment.beta.size() != m) {
    throw InvalidInput("rho_statistic: assignment must cover every vertex");
  }
  std::vector<bool> used(word.size(), false);
  auto claim = [&](std::size_t pos, FactorKind kind) {
    if (pos >= word.size() || used[pos] || word.factors()[pos].kind != kind) {
      throw InvalidInput("rho_statistic: assignment is not a bijection onto factors of the right kind");
    }
    used[pos] = true;
  };
  for (auto p : assignment.alpha) claim(p, FactorKind::multiply);
  for (auto p : assignment.beta) claim(p, FactorKind::contract);
  std::size_t rho = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (assignment.alpha[i] > assignment.beta[j]) rho += g(i, j);
  return rho;
}

Rational graph_value_rank_one(const UGraph& g, const std::vector<RationalVector>& vs,
                              const std::vector<RationalVector>& ws, const Matrix& u) {
  const std::size_t m = g.m();
  if (vs.size() != m || ws.size() != m) throw InvalidInput("graph_value: decoration count differs from m");
  Rational value = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (g(i, j) == 0) continue;
      if (vs[i].size() != u.rows() || ws[j].size() != u.cols()) throw InvalidInput("graph_value: dimension mismatch");
      Rational arrow = bilinear(vs[i], u, ws[j]);
      if (sgn(arrow) == 0) return 0;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), arrow.get_num_mpz_t(), g(i, j));
      mpz_pow_ui(p.get_den_mpz_t(), arrow.get_den_mpz_t(), g(i, j));
      value *= p;
    }
  }
  return value;
}

Rational graph_value(const UGraph& g, const Decoration& dec) {
  const std::size_t m = g.m();
  if (dec.v_tensors.size() != m || dec.w_tensors.size() != m) {
    throw InvalidInput("graph_value: decoration count differs from m");
  }
  std::vector<std::vector<PolarTerm>> terms;  // α_1..α_m then β_1..β_m
  for (const auto& v : dec.v_tensors) {
    if (v.degree() != g.r() || v.dim() != dec.u.rows()) throw InvalidInput("graph_value: V-decoration shape mismatch");
    terms.push_back(polarize(v));
  }
  for (const auto& w : dec.w_tensors) {
    if (w.degree() != g.r() || w.dim() != dec.u.cols()) throw InvalidInput("graph_value: W-decoration shape mismatch");
    terms.push_back(polarize(w));
  }
  for (const auto& t : terms) {
    if (t.empty()) return 0;
  }
  // Odometer over one polarization branch per vertex.
  std::vector<std::size_t> choice(2 * m, 0);
  std::vector<RationalVector> vs(m), ws(m);
  Rational total = 0;
  while (true) {
    Rational weight = 1;
    for (std::size_t i = 0; i < m; ++i) {
      weight *= terms[i][choice[i]].weight;
      vs[i] = terms[i][choice[i]].point;
      weight *= terms[m + i][choice[m + i]].weight;
      ws[i] = terms[m + i][choice[m + i]].point;
    }
    total += weight * graph_value_rank_one(g, vs, ws, dec.u);
    std::size_t k = 0;
    while (k < 2 * m && ++choice[k] == terms[k].size()) choice[k++] = 0;
    if (k == 2 * m) break;
  }
  return total;
}

ExpandedGraph expand_graph(const UGraph& g) {
  const std::size_t m = g.m();
  const std::size_t r = g.r();
  const std::size_t n = m * r;
  std::vector<unsigned> matching(n * n, 0);
  std::vector<std::size_t> next_beta_copy(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t alpha_copy = 0;
    for (std::size_t j = 0; j < m; ++j) {
      for (unsigned k = 0; k < g(i, j); ++k) {
        matching[(i * r + alpha_copy++) * n + (j * r + next_beta_copy[j]++)] = 1;
      }
    }
  }
  BigInt count = 1;
  const BigInt rf = factorial(r);
  for (std::size_t k = 0; k < 2 * m; ++k) count *= rf;
  count /= automorphism_order(g);
  return {UGraph(n, 1, std::move(matching)), count};
}

UGraph collapse_matching(const UGraph& matching, std::size_t r) {
  if (matching.r() != 1 || r == 0 || matching.m() % r != 0) throw InvalidInput("collapse_matching: not a split matching");
  const std::size_t m = matching.m() / r;
  std::vector<unsigned> mult(m * m, 0);
  for (std::size_t a = 0; a < matching.m(); ++a)
    for (std::size_t b = 0; b < matching.m(); ++b)
      if (matching(a, b) != 0) mult[(a / r) * m + b / r] += matching(a, b);
  return UGraph(m, r, std::move(mult));
}

UGraph perm_to_graph(const Permutation& sigma, std::size_t n, std::size_t r) {
  if (sigma.size() != n * r) throw InvalidInput("perm_to_graph: permutation must act on r·n symbols");
  std::vector<bool> seen(sigma.size(), false);
  std::vector<unsigned> mult(n * n, 0);
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    if (sigma[p] >= sigma.size() || seen[sigma[p]]) throw InvalidInput("perm_to_graph: not a permutation");
    seen[sigma[p]] = true;
    ++mult[(p / r) * n + sigma[p] / r];
  }
  return UGraph(n, r, std::move(mult));
}

Permutation graph_to_perm(const UGraph& g) {
  const std::size_t n = g.m();
  const std::size_t r = g.r();
  std::vector<unsigned> remaining = g.mult();
  std::vector<bool> taken(n * r, false);
  Permutation sigma(n * r);
  for (std::size_t p = 0; p < n * r; ++p) {
    const std::size_t block = p / r;
    // Smallest free target whose block still needs an arrow from this block;
    // row and column sums guarantee one exists.
    for (std::size_t q = 0; q < n * r; ++q) {
      if (!taken[q] && remaining[block * n + q / r] > 0) {
        taken[q] = true;
        --remaining[block * n + q / r];
        sigma[p] = q;
        break;
      }
    }
  }
  return sigma;
}

}  // namespace symtrace
