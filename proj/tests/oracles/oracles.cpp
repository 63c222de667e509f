#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace oracle {

std::uint64_t brute_lcm(unsigned n) {
  auto gcd = [](std::uint64_t a, std::uint64_t b) {
    while (b != 0) a = std::exchange(b, a % b);
    return a;
  };
  std::uint64_t acc = 1;
  for (unsigned k = 2; k <= n; ++k) acc = acc / gcd(acc, k) * k;
  return acc;
}

std::uint64_t pascal_binomial(unsigned a, unsigned b) {
  if (b > a) return 0;
  std::vector<std::vector<std::uint64_t>> t(a + 1);
  for (unsigned i = 0; i <= a; ++i) {
    t[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[a][b];
}

std::size_t count_monomials(std::size_t d, std::size_t N) {
  std::size_t total = 0;
  std::vector<std::size_t> e(d, 0);
  while (true) {
    if (std::accumulate(e.begin(), e.end(), std::size_t{0}) == N) ++total;
    std::size_t k = 0;
    while (k < d && ++e[k] > N) e[k++] = 0;
    if (k == d) break;
  }
  return total;
}

std::vector<std::vector<unsigned>> brute_graphs(std::size_t m, std::size_t r) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cells(m * m, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      unsigned row = 0, col = 0;
      for (std::size_t j = 0; j < m; ++j) {
        row += cells[i * m + j];
        col += cells[j * m + i];
      }
      ok = row == r && col == r;
    }
    if (ok) out.push_back(cells);
    std::size_t k = 0;
    while (k < cells.size() && ++cells[k] > r) cells[k++] = 0;
    if (k == cells.size()) break;
  }
  return out;
}

std::size_t brute_matchings_onto(const symtrace::UGraph& g) {
  const std::size_t m = g.m(), r = g.r(), n = m * r;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t hits = 0;
  do {
    std::vector<unsigned> mult(m * m, 0);
    for (std::size_t p = 0; p < n; ++p) ++mult[(p / r) * m + perm[p] / r];
    if (mult == g.mult()) ++hits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hits;
}

Poly to_poly(const symtrace::SymTensor& s) {
  Poly p;
  const auto basis = symtrace::monomials(s.dim(), s.degree());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (sgn(s[k]) != 0) p[basis[k]] = s[k];
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

Poly poly_apply_diff(const Poly& q, const Poly& p) {
  Poly out;
  for (const auto& [eq, cq] : q) {
    for (const auto& [ep, cp] : p) {
      std::vector<unsigned> e(ep);
      Rational c = cq * cp;
      for (std::size_t i = 0; i < e.size() && sgn(c) != 0; ++i) {
        for (unsigned t = 0; t < eq[i]; ++t) {
          if (e[i] == 0) {
            c = 0;
            break;
          }
          c *= e[i];
          --e[i];
        }
      }
      if (sgn(c) != 0) out[e] += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

Rational poly_word_trace(const symtrace::OperatorWord& word, std::size_t N, std::size_t d) {
  Rational trace = 0;
  for (const auto& alpha : symtrace::monomials(d, N)) {
    Poly p{{alpha, Rational(1)}};
    for (auto it = word.factors().rbegin(); it != word.factors().rend() && !p.empty(); ++it) {
      const Poly f = to_poly(it->tensor);
      p = it->kind == symtrace::FactorKind::multiply ? poly_mul(f, p) : poly_apply_diff(f, p);
    }
    if (auto hit = p.find(alpha); hit != p.end()) trace += hit->second;
  }
  return trace;
}

Matrix mult_op_by_polarization(const symtrace::SymTensor& v, std::size_t N) {
  const std::size_t r = v.degree();
  const std::size_t d = v.dim();
  Matrix total(symtrace::sym_dim(d, N), N >= r ? symtrace::sym_dim(d, N - r) : 0);
  if (N < r) return total;
  for (const auto& term : symtrace::polarize(v)) {
    const auto linear = symtrace::SymTensor::linear(term.point);
    Matrix acc = Matrix::identity(symtrace::sym_dim(d, N - r));
    for (std::size_t k = 1; k <= r; ++k) acc = symtrace::mult_op(linear, N - r + k) * acc;
    total += term.weight * acc;
  }
  return total;
}

Matrix contract_op_by_polarization(const symtrace::SymTensor& w, std::size_t N) {
  const std::size_t r = w.degree();
  const std::size_t d = w.dim();
  Matrix total(N >= r ? symtrace::sym_dim(d, N - r) : 0, symtrace::sym_dim(d, N));
  if (N < r) return total;
  for (const auto& term : symtrace::polarize(w)) {
    const auto linear = symtrace::SymTensor::linear(term.point);
    Matrix acc = Matrix::identity(symtrace::sym_dim(d, N));
    for (std::size_t k = 0; k < r; ++k) acc = symtrace::contract_op(linear, N - k) * acc;
    total += term.weight * acc;
  }
  return total;
}

namespace {

// Entry of the symmetric tensor of s at an index tuple: coeff(content) / multinomial.
Rational sym_entry(const symtrace::SymTensor& s, const std::vector<std::size_t>& idx) {
  std::vector<unsigned> alpha(s.dim(), 0);
  for (auto i : idx) ++alpha[i];
  symtrace::BigInt multi = symtrace::factorial(idx.size());
  for (auto a : alpha) multi /= symtrace::factorial(a);
  return s.coeff(alpha) / Rational(multi);
}

}  // namespace

Rational dense_graph_value(const symtrace::UGraph& g, const symtrace::Decoration& dec) {
  const std::size_t m = g.m(), r = g.r();
  const std::size_t dv = dec.u.rows(), dw = dec.u.cols();
  // arrows of the expanded matching: (alpha slot, beta slot)
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::size_t> next_beta(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t next_alpha = 0;
    for (std::size_t j = 0; j < m; ++j)
      for (unsigned k = 0; k < g(i, j); ++k) arrows.emplace_back(i * r + next_alpha++, j * r + next_beta[j]++);
  }
  const std::size_t n = m * r;
  std::vector<std::size_t> a(n, 0), b(n, 0);
  Rational total = 0;
  // Sum over all index assignments of all split vertices.
  while (true) {
    Rational term = 1;
    for (std::size_t i = 0; i < m && sgn(term) != 0; ++i) {
      term *= sym_entry(dec.v_tensors[i], std::vector<std::size_t>(a.begin() + i * r, a.begin() + (i + 1) * r));
      term *= sym_entry(dec.w_tensors[i], std::vector<std::size_t>(b.begin() + i * r, b.begin() + (i + 1) * r));
    }
    for (const auto& [x, y] : arrows) {
      if (sgn(term) == 0) break;
      term *= dec.u(a[x], b[y]);
    }
    total += term;
    std::size_t k = 0;
    while (k < n && ++a[k] == dv) a[k++] = 0;
    if (k == n) {
      std::size_t l = 0;
      while (l < n && ++b[l] == dw) b[l++] = 0;
      if (l == n) break;
    }
  }
  return total;
}

bool grid_common_zero(const std::vector<symtrace::SymTensor>& forms, long k) {
  const std::size_t d = forms.front().dim();
  std::vector<long> p(d, -k);
  while (true) {
    if (std::any_of(p.begin(), p.end(), [](long x) { return x != 0; })) {
      RationalVector point(p.begin(), p.end());
      if (std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return sgn(f.evaluate(point)) == 0; })) return true;
    }
    std::size_t i = 0;
    while (i < d && ++p[i] > k) p[i++] = -k;
    if (i == d) return false;
  }
}

}  // namespace oracle
