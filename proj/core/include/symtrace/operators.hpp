#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symtrace/exactlin.hpp"
#include "symtrace/symspace.hpp"

namespace symtrace {

enum class FactorKind { multiply, contract };

struct Factor {
  FactorKind kind;
  SymTensor tensor;
};

// Product of multiplication factors M(ṽ) and contraction factors I(w̃), all of
// degree r. Written left to right; the rightmost factor acts first.
class OperatorWord {
 public:
  OperatorWord() = default;
  // Throws InvalidInput if payload degrees differ from r or dimensions differ.
  OperatorWord(std::size_t r, std::vector<Factor> factors);

  std::size_t r() const { return r_; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  // Common dimension of the payloads; 0 for the empty word.
  std::size_t dim() const;
  std::size_t count(FactorKind kind) const;

  // Cyclic rotation moving the first `shift` factors to the end.
  OperatorWord rotated(std::size_t shift) const;

 private:
  std::size_t r_ = 1;
  std::vector<Factor> factors_;
};

// Multiplication by ṽ as a map S^{N−r}V -> S^N V. For N < r the domain is the
// zero space (a sym_dim × 0 matrix).
Matrix mult_op(const SymTensor& v, std::size_t N);
// Contraction by w̃ (the differential operator w̃(∂)) as a map S^N V -> S^{N−r}V.
// For N < r the target is the zero space (a 0 × sym_dim matrix).
Matrix contract_op(const SymTensor& w, std::size_t N);

// Restriction of the word to End(S^N V); the zero endomorphism if any
// intermediate degree would be negative. dim is needed for the empty word.
Matrix word_matrix(const OperatorWord& word, std::size_t N, std::size_t dim);
Matrix word_matrix(const OperatorWord& word, std::size_t N);

// Dimension of the span of all products of 1..max_length generators.
std::size_t span_dim(std::span<const Matrix> generators, std::size_t max_length);
// Basis of the (non-unital) algebra generated by the matrices.
std::vector<Matrix> algebra_basis(std::span<const Matrix> generators);
// Whether the generated algebra consists of nilpotent elements; decided by
// vanishing of the trace on a spanning set of words.
bool is_nil(std::span<const Matrix> generators);

}  // namespace symtrace
