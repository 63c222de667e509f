#include "symtrace/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "symtrace/errors.hpp"

namespace symtrace {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || (den.front() == '-' || den.front() == '+')) {
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw InvalidInput("rational with zero denominator: '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InvalidInput("Matrix: entry count != rows * cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidInput("Matrix::from_rows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

RationalVector Matrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  if (!square()) throw InvalidInput("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return symtrace::is_zero(entries_); }

RationalVector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InvalidInput("Matrix::apply: length mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("Matrix +: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("Matrix -: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("Matrix *: inner dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  // Operator matrices are sparse; skipping zero entries of a dominates the cost.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) != 0) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

EchelonForm row_reduce(const Matrix& m) {
  EchelonForm out{m, {}};
  Matrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && sgn(a(sel, col)) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(pivot_row, c));
    }
    const Rational inv = 1 / a(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (sgn(a(pivot_row, c)) != 0) a(r, c) -= factor * a(pivot_row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return out;
}

RankKernel rank_kernel(const Matrix& m) {
  const EchelonForm ef = row_reduce(m);
  RankKernel out;
  out.rank = ef.pivot_columns.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ef.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) v[ef.pivot_columns[r]] = -ef.reduced(r, free);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const EchelonForm ef = row_reduce(aug);
  if (ef.pivot_columns.size() < n || (n > 0 && ef.pivot_columns[n - 1] != n - 1)) {
    throw InvalidInput("inverse of a singular matrix");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  return inv;
}

RationalVector SpanBuilder::reduce(RationalVector v) const {
  if (v.size() != length_) throw InvalidInput("SpanBuilder: vector length mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    const RationalVector& b = basis_[k];
    for (std::size_t i = 0; i < length_; ++i) {
      if (sgn(b[i]) != 0) v[i] -= factor * b[i];
    }
  }
  return v;
}

bool SpanBuilder::contains(std::span<const Rational> v) const {
  return is_zero(reduce(RationalVector(v.begin(), v.end())));
}

bool SpanBuilder::insert(std::span<const Rational> v) {
  RationalVector residual = reduce(RationalVector(v.begin(), v.end()));
  auto it = std::find_if(residual.begin(), residual.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == residual.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - residual.begin());
  const Rational inv = 1 / residual[pivot];
  for (auto& x : residual) x *= inv;
  // Keep existing rows reduced at the new pivot so reduce() stays single-pass.
  for (auto& b : basis_) {
    if (sgn(b[pivot]) == 0) continue;
    const Rational factor = b[pivot];
    for (std::size_t i = 0; i < length_; ++i) {
      if (sgn(residual[i]) != 0) b[i] -= factor * residual[i];
    }
  }
  basis_.push_back(std::move(residual));
  pivots_.push_back(pivot);
  return true;
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return c;
}

BigInt lcm_upto(const BigInt& n) {
  if (n < 1) throw InvalidInput("lcm_upto requires n >= 1");
  if (!n.fits_ulong_p()) throw InvalidInput("lcm_upto: n too large");
  const unsigned long limit = n.get_ui();
  BigInt acc = 1;
  for (unsigned long k = 2; k <= limit; ++k) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), k);
  }
  return acc;
}

}  // namespace symtrace
