#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symtrace/exactlin.hpp"
#include "symtrace/graphs.hpp"
#include "symtrace/symspace.hpp"

namespace symtrace {

// Fiberwise data: subspaces A ⊂ S^r V and B ⊂ S^r W (given by spanning lists)
// and a functional u on V⊗W, u(v⊗w) = vᵀ·u·w.
struct FiberInstance {
  std::size_t dim_v = 0;
  std::size_t dim_w = 0;
  std::size_t r = 1;
  std::vector<SymTensor> A;
  std::vector<SymTensor> B;
  Matrix u;

  // Throws InvalidInput on inconsistent dimensions or degrees.
  void validate() const;
};

struct Certificate {
  std::size_t m = 0;
  std::vector<std::size_t> a_idx;  // into FiberInstance::A
  std::vector<std::size_t> b_idx;  // into FiberInstance::B
  UGraph graph;
  Rational value;
};

// The multiplication map B ⊗ S^{N−r} -> S^N as a matrix (rows: degree-N
// monomials; one column per generator and source monomial).
Matrix macaulay_matrix(std::span<const SymTensor> forms, std::size_t N);
// Whether the forms have 0 as their only common zero over the algebraic
// closure, decided by surjectivity of the Macaulay map at N = r·d.
// Throws InvalidInput for an empty list or inconsistent shapes.
bool only_zero_test(std::span<const SymTensor> forms, std::size_t r, std::size_t d);

// lcm(1, ..., D(r·d)) with D(N) = (dim S^N V)^2.
BigInt nu_bound(std::size_t r, std::size_t d);

struct Reduction {
  FiberInstance reduced;  // square invertible u of size rank(û)
  QuotientMap v_map;      // V -> V / ker(û)
  QuotientMap w_map;      // W -> W / ker(û*)
};
// Throws DegenerateFunctional when u = 0.
Reduction reduce_to_bijective(const FiberInstance& inst);

struct CertificateSearch {
  Certificate certificate;
  Reduction reduction;
  std::size_t N = 0;               // degree at which the search ran, r · rank(û)
  Rational word_trace;             // nonzero trace of the certifying word
  std::size_t words_examined = 0;
};
// Requires u ≠ 0 (DegenerateFunctional otherwise) and A, B passing
// only_zero_test (InvalidInput otherwise). Throws IdentityViolation if the
// search is exhausted; a certificate always exists under the preconditions.
CertificateSearch search_certificate(const FiberInstance& inst);
Certificate certificate_search(const FiberInstance& inst);

struct SumWitness {
  SymTensor tensor;  // over V⊕W
  Summand side;
  std::size_t index;  // position in the list it was taken from
  Rational pairing;   // against (uV ⊕ uW)^{⊗r}
};
// An element of S^r V (or S^r W when uV = 0) injected into S^r(V⊕W) that is
// not annihilated by (uV ⊕ uW)^{⊗r}.
SumWitness direct_sum_witness(std::span<const SymTensor> a, std::span<const SymTensor> b,
                              std::span<const Rational> u_v, std::span<const Rational> u_w, std::size_t r);

// J ∘ (Σ ⊗ Id) ∘ (Id × I_E ⊗ I_F) on one fiber: an order-r·n tensor over V⊗W.
TensorPow phi_assemble(const Permutation& sigma, std::span<const SymTensor> s, std::span<const SymTensor> t);

struct PhiCheck {
  Rational lhs;  // ⟨Φ(σ, s ⊗ t), u^{⊗rn}⟩
  Rational rhs;  // |γ| for the graph of σ
  UGraph graph;
  bool match = false;
};
PhiCheck verify_phi_identity(const Permutation& sigma, std::span<const SymTensor> s, std::span<const SymTensor> t,
                             const Matrix& u);

// u^{⊗k} as a dual tensor over V⊗W.
TensorPow functional_power(const Matrix& u, std::size_t k);

struct ProductWitness {
  Certificate certificate;
  Permutation sigma;
  TensorPow element;  // over the original V⊗W
  Rational pairing;   // against u^{⊗rm}; equals certificate.value
};
ProductWitness product_witness(const FiberInstance& inst);

}  // namespace symtrace
