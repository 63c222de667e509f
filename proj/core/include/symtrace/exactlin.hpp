#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symtrace {

using BigInt = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(long numerator, long denominator = 1);

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);
// Accepts "p", "p/q", with optional sign. Throws InvalidInput on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> entries() const { return entries_; }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }
  RationalVector column(std::size_t c) const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  RationalVector apply(std::span<const Rational> v) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<RationalVector> kernel_basis;
};

// Reduced row echelon form of m, together with the pivot column of each
// nonzero row.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

EchelonForm row_reduce(const Matrix& m);
RankKernel rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);
// Throws InvalidInput if m is not square or singular.
Matrix inverse(const Matrix& m);

// Incrementally maintained span of rational vectors of a fixed length.
// Vectors are kept fully reduced against each other's pivots.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t length) : length_(length) {}

  std::size_t dimension() const { return basis_.size(); }
  std::size_t length() const { return length_; }

  // Residual of v after elimination against the current basis.
  RationalVector reduce(RationalVector v) const;
  bool contains(std::span<const Rational> v) const;
  // Adds v if it is independent of the current span; returns whether it grew.
  bool insert(std::span<const Rational> v);

 private:
  std::size_t length_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

BigInt factorial(unsigned long n);
// Zero when b < 0 or b > a (and for negative a).
BigInt binomial(long a, long b);
// lcm(1, ..., n). Throws InvalidInput when n < 1.
BigInt lcm_upto(const BigInt& n);

}  // namespace symtrace
