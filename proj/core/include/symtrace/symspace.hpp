#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "symtrace/exactlin.hpp"

namespace symtrace {

// Exponent vector of a monomial; its weight is the degree it indexes.
using MultiIndex = std::vector<unsigned>;
// Images of a permutation of {0, ..., k-1}: slot p moves to slot perm[p].
using Permutation = std::vector<std::size_t>;

std::size_t sym_dim(std::size_t d, std::size_t degree);

// Monomials of the given degree in d variables, in descending lexicographic
// order (x0^N first). This is the coordinate order of every SymTensor.
std::vector<MultiIndex> monomials(std::size_t d, std::size_t degree);
// Position of alpha in monomials(alpha.size(), |alpha|).
std::size_t monomial_index(std::span<const unsigned> alpha);
// r! / prod(alpha_i!)
BigInt multinomial(std::span<const unsigned> alpha);

// An element of S^N V in monomial coordinates: the tensor s is identified with
// the degree-N polynomial w -> <s, w^{⊗N}> on V*, and coeffs are that
// polynomial's coefficients.
class SymTensor {
 public:
  SymTensor() = default;
  // Zero tensor. Throws InvalidInput when dim < 1.
  SymTensor(std::size_t dim, std::size_t degree);
  SymTensor(std::size_t dim, std::size_t degree, RationalVector coeffs);

  // Degree-1 tensor with the given coordinates.
  static SymTensor linear(std::span<const Rational> v);
  static SymTensor monomial(std::span<const unsigned> alpha, const Rational& coeff = 1);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  const RationalVector& coeffs() const { return coeffs_; }
  const Rational& coeff(std::span<const unsigned> alpha) const;
  void set_coeff(std::span<const unsigned> alpha, Rational value);
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const { return symtrace::is_zero(coeffs_); }
  // The polynomial evaluated at w.
  Rational evaluate(std::span<const Rational> w) const;

  SymTensor& operator+=(const SymTensor& other);
  SymTensor& operator-=(const SymTensor& other);
  SymTensor& operator*=(const Rational& s);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(const Rational& s, SymTensor a) { return a *= s; }
  friend bool operator==(const SymTensor& a, const SymTensor& b) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  RationalVector coeffs_;
};

// The product in the symmetric algebra (polynomial multiplication).
SymTensor multiply(const SymTensor& a, const SymTensor& b);

// v^{⊗r} as a symmetric tensor: coefficients of <v, w>^r.
SymTensor power_embed(std::span<const Rational> v, std::size_t r);

// Bilinear pairing S^N V × S^N V* -> Q with pair(v^N, w^N) = <v, w>^N.
Rational pair(const SymTensor& s, const SymTensor& t);

struct PolarTerm {
  Rational weight;
  RationalVector point;
};
// s = Σ weight_k · power_embed(point_k, r). Zero tensor gives an empty list.
std::vector<PolarTerm> polarize(const SymTensor& s);
SymTensor reassemble(const std::vector<PolarTerm>& terms, std::size_t dim, std::size_t degree);

// Dense element of the k-fold tensor power of a d-dimensional space; index
// tuples are row-major with slot 0 most significant.
class TensorPow {
 public:
  TensorPow() = default;
  TensorPow(std::size_t dim, std::size_t order);
  TensorPow(std::size_t dim, std::size_t order, RationalVector coords);

  // v ⊗ ... ⊗ v (k factors)
  static TensorPow power(std::span<const Rational> v, std::size_t k);
  static TensorPow vector(std::span<const Rational> v);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return order_; }
  std::size_t size() const { return coords_.size(); }
  const RationalVector& coords() const { return coords_; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  // Slot indices of a flat position.
  std::vector<std::size_t> unflatten(std::size_t flat) const;
  std::size_t flatten(std::span<const std::size_t> slots) const;

  bool is_zero() const { return symtrace::is_zero(coords_); }

  TensorPow& operator+=(const TensorPow& other);
  TensorPow& operator*=(const Rational& s);
  friend TensorPow operator+(TensorPow a, const TensorPow& b) { return a += b; }
  friend TensorPow operator*(const Rational& s, TensorPow a) { return a *= s; }
  friend bool operator==(const TensorPow& a, const TensorPow& b) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t order_ = 0;
  RationalVector coords_;
};

TensorPow tensor_product(const TensorPow& a, const TensorPow& b);
// Full contraction Σ_i a[i]·b[i] of a tensor with a dual tensor.
Rational tensor_pair(const TensorPow& a, const TensorPow& b);

// The symmetric tensor in V^{⊗N} representing s (inverse of symmetrize on
// symmetric tensors): entry at an index tuple of content alpha is
// coeff(alpha) / multinomial(alpha).
TensorPow to_tensor(const SymTensor& s);
// Averaging idempotent π_S on V^{⊗k}, kept dense.
TensorPow sym_projection(const TensorPow& t);
// π_S followed by conversion to monomial coordinates.
SymTensor symmetrize(const TensorPow& t);

// Slot-wise permutation; permute_tensor(permute_tensor(t, σ), τ) equals
// permute_tensor(t, τ∘σ).
TensorPow permute_tensor(const TensorPow& t, const Permutation& sigma);
// Slot i of the result is slot i of tV tensored with slot i of tW; the
// V⊗W coordinate of (a, b) is a * dim(W) + b.
TensorPow interleave(const TensorPow& tV, const TensorPow& tW);

enum class Summand { first, second };
// Image under S^r V -> S^r(V⊕W) (or S^r W -> S^r(V⊕W) for the second summand).
SymTensor inject_sum(const SymTensor& s, std::size_t target_dim, Summand side);

// A linear surjection V -> V/K in chosen coordinates, with a section.
struct QuotientMap {
  Matrix projection;  // (d - k) × d, kernel exactly span(K)
  Matrix section;     // d × (d - k), projection · section = identity
};
// Complement basis: standard basis vectors, greedily in index order. Throws
// InvalidInput when kernel_basis is dependent or has wrong lengths.
QuotientMap quotient_map(std::size_t d, const std::vector<RationalVector>& kernel_basis);

// S^r(P) for a linear map P: V -> V' given as a dim(V') × dim(V) matrix.
// Satisfies linear_image(power_embed(v, r), P) = power_embed(P v, r).
SymTensor linear_image(const SymTensor& s, const Matrix& map);
SymTensor quotient_project(const SymTensor& s, const std::vector<RationalVector>& kernel_basis);

}  // namespace symtrace
