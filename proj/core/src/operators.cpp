#include "symtrace/operators.hpp"

#include <algorithm>

#include "symtrace/errors.hpp"

namespace symtrace {

OperatorWord::OperatorWord(std::size_t r, std::vector<Factor> factors) : r_(r), factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.tensor.degree() != r_) throw InvalidInput("OperatorWord: factor degree differs from r");
    if (f.tensor.dim() != factors_.front().tensor.dim()) throw InvalidInput("OperatorWord: factor dimensions differ");
  }
}

std::size_t OperatorWord::dim() const { return factors_.empty() ? 0 : factors_.front().tensor.dim(); }

std::size_t OperatorWord::count(FactorKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [kind](const Factor& f) { return f.kind == kind; }));
}

OperatorWord OperatorWord::rotated(std::size_t shift) const {
  if (factors_.empty()) return *this;
  std::vector<Factor> out(factors_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return OperatorWord(r_, std::move(out));
}

Matrix mult_op(const SymTensor& v, std::size_t N) {
  const std::size_t d = v.dim();
  const std::size_t r = v.degree();
  const std::size_t rows = sym_dim(d, N);
  if (N < r) return Matrix(rows, 0);
  const auto source = monomials(d, N - r);
  const auto factor = monomials(d, r);
  Matrix m(rows, source.size());
  MultiIndex sum(d);
  for (std::size_t col = 0; col < source.size(); ++col) {
    for (std::size_t k = 0; k < factor.size(); ++k) {
      if (sgn(v[k]) == 0) continue;
      for (std::size_t i = 0; i < d; ++i) sum[i] = source[col][i] + factor[k][i];
      m(monomial_index(sum), col) += v[k];
    }
  }
  return m;
}

Matrix contract_op(const SymTensor& w, std::size_t N) {
  const std::size_t d = w.dim();
  const std::size_t r = w.degree();
  const std::size_t cols = sym_dim(d, N);
  if (N < r) return Matrix(0, cols);
  const auto source = monomials(d, N);
  const auto factor = monomials(d, r);
  Matrix m(sym_dim(d, N - r), cols);
  MultiIndex diff(d);
  for (std::size_t col = 0; col < source.size(); ++col) {
    const MultiIndex& alpha = source[col];
    for (std::size_t k = 0; k < factor.size(); ++k) {
      if (sgn(w[k]) == 0) continue;
      const MultiIndex& beta = factor[k];
      bool divides = true;
      BigInt falling = 1;  // ∂^β x^α = Π α_i!/(α_i−β_i)! x^{α−β}
      for (std::size_t i = 0; i < d && divides; ++i) {
        if (beta[i] > alpha[i]) {
          divides = false;
          break;
        }
        diff[i] = alpha[i] - beta[i];
        for (unsigned e = 0; e < beta[i]; ++e) falling *= alpha[i] - e;
      }
      if (divides) m(monomial_index(diff), col) += w[k] * Rational(falling);
    }
  }
  return m;
}

Matrix word_matrix(const OperatorWord& word, std::size_t N, std::size_t dim) {
  if (!word.empty() && word.dim() != dim) throw InvalidInput("word_matrix: dimension mismatch");
  const std::size_t size = sym_dim(dim, N);
  Matrix acc = Matrix::identity(size);
  long degree = static_cast<long>(N);
  const long r = static_cast<long>(word.r());
  for (auto it = word.factors().rbegin(); it != word.factors().rend(); ++it) {
    if (it->kind == FactorKind::contract) {
      if (degree < r) return Matrix(size, size);
      acc = contract_op(it->tensor, static_cast<std::size_t>(degree)) * acc;
      degree -= r;
    } else {
      degree += r;
      acc = mult_op(it->tensor, static_cast<std::size_t>(degree)) * acc;
    }
  }
  if (degree != static_cast<long>(N)) throw InvalidInput("word_matrix: word is not degree-preserving");
  return acc;
}

Matrix word_matrix(const OperatorWord& word, std::size_t N) {
  if (word.empty()) throw InvalidInput("word_matrix: empty word needs an explicit dimension");
  return word_matrix(word, N, word.dim());
}

namespace {

std::size_t check_generators(std::span<const Matrix> generators) {
  if (generators.empty()) return 0;
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.square() || g.rows() != n) throw InvalidInput("generators must be square matrices of equal size");
  }
  return n;
}

RationalVector flat(const Matrix& m) { return RationalVector(m.entries().begin(), m.entries().end()); }

}  // namespace

std::size_t span_dim(std::span<const Matrix> generators, std::size_t max_length) {
  const std::size_t n = check_generators(generators);
  if (generators.empty() || max_length == 0) return 0;
  SpanBuilder total(n * n);
  // layer: a basis of the span of products of exactly k generators
  std::vector<Matrix> layer;
  {
    SpanBuilder layer_span(n * n);
    for (const auto& g : generators) {
      if (layer_span.insert(flat(g))) layer.push_back(g);
    }
  }
  for (std::size_t k = 1;; ++k) {
    for (const auto& m : layer) total.insert(flat(m));
    if (k == max_length || total.dimension() == n * n) break;
    SpanBuilder next_span(n * n);
    std::vector<Matrix> next;
    for (const auto& m : layer) {
      for (const auto& g : generators) {
        Matrix p = m * g;
        if (next_span.insert(flat(p))) next.push_back(std::move(p));
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return total.dimension();
}

std::vector<Matrix> algebra_basis(std::span<const Matrix> generators) {
  const std::size_t n = check_generators(generators);
  std::vector<Matrix> basis;
  SpanBuilder span(n * n);
  for (const auto& g : generators) {
    if (span.insert(flat(g))) basis.push_back(g);
  }
  // Every word is a shorter word times a generator, so closing the basis under
  // right multiplication by generators yields the whole algebra.
  for (std::size_t next = 0; next < basis.size(); ++next) {
    for (const auto& g : generators) {
      Matrix p = basis[next] * g;
      if (span.insert(flat(p))) basis.push_back(std::move(p));
    }
  }
  return basis;
}

bool is_nil(std::span<const Matrix> generators) {
  const auto basis = algebra_basis(generators);
  return std::all_of(basis.begin(), basis.end(), [](const Matrix& m) { return sgn(m.trace()) == 0; });
}

}  // namespace symtrace
