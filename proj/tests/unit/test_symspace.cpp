#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "symtrace/errors.hpp"
#include "symtrace/random.hpp"
#include "symtrace/symspace.hpp"

using namespace symtrace;

namespace {

Rational power(Rational x, std::size_t n) {
  Rational p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= x;
  return p;
}

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(SymDim, Examples) {
  for (std::size_t N = 0; N < 8; ++N) EXPECT_EQ(sym_dim(1, N), 1u);
  EXPECT_EQ(sym_dim(2, 3), 4u);
  EXPECT_EQ(sym_dim(3, 2), 6u);
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t N = 0; N <= 5; ++N) EXPECT_EQ(sym_dim(d, N), oracle::count_monomials(d, N));
  EXPECT_THROW(sym_dim(0, 2), InvalidInput);
}

TEST(Monomials, IndexRoundTrip) {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t N = 0; N <= 5; ++N) {
      const auto basis = monomials(d, N);
      for (std::size_t k = 0; k < basis.size(); ++k) EXPECT_EQ(monomial_index(basis[k]), k);
      EXPECT_TRUE(std::is_sorted(basis.rbegin(), basis.rend()));
    }
  }
}

TEST(PowerEmbed, Examples) {
  const auto s = power_embed(vec({1, 1}), 2);
  EXPECT_EQ(s.coeff(MultiIndex{2, 0}), 1);
  EXPECT_EQ(s.coeff(MultiIndex{1, 1}), 2);
  EXPECT_EQ(s.coeff(MultiIndex{0, 2}), 1);
  EXPECT_TRUE(power_embed(vec({0, 0, 0}), 3).is_zero());
  const auto cube = power_embed(vec({2}), 3);
  EXPECT_EQ(cube.coeff(MultiIndex{3}), 8);
}

TEST(Pair, Examples) {
  EXPECT_EQ(pair(power_embed(vec({1, 0}), 3), power_embed(vec({1, 0}), 3)), 1);
  for (std::size_t N = 1; N <= 5; ++N) EXPECT_EQ(pair(power_embed(vec({1, 1}), N), power_embed(vec({1, -1}), N)), 0);
  EXPECT_EQ(pair(power_embed(vec({2, 0}), 2), power_embed(vec({3, 0}), 2)), 36);
  EXPECT_THROW(pair(SymTensor(2, 2), SymTensor(2, 3)), InvalidInput);
  EXPECT_THROW(pair(SymTensor(2, 2), SymTensor(3, 2)), InvalidInput);
}

TEST(Pair, PowersGivePowerOfInnerProduct) {
  Rng rng(101);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t N = 0; N <= 6; ++N) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto v = rng.vector(d), w = rng.vector(d);
        EXPECT_EQ(pair(power_embed(v, N), power_embed(w, N)), power(dot(v, w), N));
      }
    }
  }
}

TEST(Pair, EvaluatesPolynomial) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = rng.integer(1, 3), N = rng.integer(0, 4);
    const auto s = rng.sym_tensor(d, N);
    const auto w = rng.vector(d);
    EXPECT_EQ(pair(s, power_embed(w, N)), s.evaluate(w));
  }
}

TEST(Polarize, Examples) {
  const auto v = vec({3, -1});
  const auto p = power_embed(v, 3);
  EXPECT_EQ(reassemble(polarize(p), 2, 3), p);

  const auto xy = SymTensor::monomial(MultiIndex{1, 1});
  const auto terms = polarize(xy);
  EXPECT_FALSE(terms.empty());
  // re-expand with power_embed by hand
  SymTensor back(2, 2);
  for (const auto& t : terms) back += t.weight * power_embed(t.point, 2);
  EXPECT_EQ(back, xy);

  EXPECT_TRUE(polarize(SymTensor(2, 2)).empty());
}

TEST(Polarize, ReassemblesRandomTensors) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = rng.integer(1, 3), r = rng.integer(0, 3);
    const auto s = rng.sym_tensor(d, r);
    EXPECT_EQ(reassemble(polarize(s), d, r), s);
  }
}

TEST(Symmetrize, Examples) {
  const auto e1 = TensorPow::vector(vec({1, 0}));
  const auto e2 = TensorPow::vector(vec({0, 1}));
  EXPECT_EQ(symmetrize(tensor_product(e1, e2)), symmetrize(tensor_product(e2, e1)));
  const auto v = vec({2, -3});
  EXPECT_EQ(symmetrize(TensorPow::power(v, 3)), power_embed(v, 3));
  TensorPow anti = tensor_product(e1, e2) + Rational(-1) * tensor_product(e2, e1);
  EXPECT_TRUE(symmetrize(anti).is_zero());
}

TEST(Symmetrize, IdempotentProjection) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = rng.integer(1, 3), k = rng.integer(0, 3);
    TensorPow t(d, k);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.rational();
    const TensorPow once = sym_projection(t);
    EXPECT_EQ(sym_projection(once), once);
    EXPECT_EQ(symmetrize(once), symmetrize(t));
    const auto s = rng.sym_tensor(d, k);
    EXPECT_EQ(symmetrize(to_tensor(s)), s);
  }
}

TEST(InjectSum, Examples) {
  EXPECT_EQ(inject_sum(power_embed(vec({1, 2}), 2), 3, Summand::first), power_embed(vec({1, 2, 0}), 2));
  EXPECT_EQ(inject_sum(power_embed(vec({5}), 2), 3, Summand::second), power_embed(vec({0, 0, 5}), 2));
  EXPECT_TRUE(inject_sum(SymTensor(2, 2), 3, Summand::first).is_zero());
}

TEST(InjectSum, PairingOnlySeesOwnSummand) {
  // d = 1, r = 1: s = a·e, u = (uV, uW) ⇒ both sides equal a·uV.
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = rng.rational(), uv = rng.rational(), uw = rng.rational();
    const SymTensor s(1, 1, {a});
    EXPECT_EQ(pair(inject_sum(s, 2, Summand::first), power_embed(RationalVector{uv, uw}, 1)), a * uv);
    const auto t = rng.sym_tensor(2, 2);
    const auto u = rng.vector(3);
    EXPECT_EQ(pair(inject_sum(t, 3, Summand::first), power_embed(u, 2)),
              pair(t, power_embed(RationalVector{u[0], u[1]}, 2)));
  }
}

TEST(QuotientProject, Examples) {
  Rng rng(12);
  const auto s = rng.sym_tensor(2, 3);
  // empty kernel: coordinate change only
  EXPECT_EQ(quotient_project(s, {}), s);

  const Rational a = 3, b = -2;
  const auto projected = quotient_project(power_embed(RationalVector{a, b}, 3), {vec({0, 1})});
  EXPECT_EQ(projected.dim(), 1u);
  EXPECT_EQ(projected, power_embed(RationalVector{a}, 3));

  // x·y with y ↦ 0, by polarizing, projecting each power and reassembling
  const auto xy = SymTensor::monomial(MultiIndex{1, 1});
  SymTensor via_powers(1, 2);
  for (const auto& t : polarize(xy)) via_powers += t.weight * power_embed(RationalVector{t.point[0]}, 2);
  EXPECT_TRUE(via_powers.is_zero());
  EXPECT_TRUE(quotient_project(xy, {vec({0, 1})}).is_zero());
}

TEST(QuotientProject, RejectsDependentKernel) {
  EXPECT_THROW(quotient_project(SymTensor(3, 2), {vec({1, 0, 0}), vec({2, 0, 0})}), InvalidInput);
}

TEST(QuotientProject, CommutesWithPowers) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = rng.integer(2, 3), r = rng.integer(1, 3);
    std::vector<RationalVector> kernel{rng.nonzero_vector(d)};
    if (d == 3 && rng.coin()) {
      auto second = rng.nonzero_vector(d);
      SpanBuilder check(d);
      check.insert(kernel[0]);
      if (check.insert(second)) kernel.push_back(second);
    }
    const auto q = quotient_map(d, kernel);
    EXPECT_EQ(q.projection * q.section, Matrix::identity(d - kernel.size()));
    for (const auto& k : kernel) EXPECT_TRUE(is_zero(q.projection.apply(k)));
    const auto v = rng.vector(d);
    EXPECT_EQ(quotient_project(power_embed(v, r), kernel), power_embed(q.projection.apply(v), r));
    // and for general tensors, via polarization
    const auto s = rng.sym_tensor(d, r);
    SymTensor via_powers(d - kernel.size(), r);
    for (const auto& t : polarize(s)) via_powers += t.weight * power_embed(q.projection.apply(t.point), r);
    EXPECT_EQ(quotient_project(s, kernel), via_powers);
  }
}

TEST(PermuteTensor, Examples) {
  Rng rng(4);
  TensorPow t(2, 3);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.rational();
  EXPECT_EQ(permute_tensor(t, {0, 1, 2}), t);

  const auto v = vec({1, 2}), w = vec({3, 5});
  const auto vw = tensor_product(TensorPow::vector(v), TensorPow::vector(w));
  EXPECT_EQ(permute_tensor(vw, {1, 0}), tensor_product(TensorPow::vector(w), TensorPow::vector(v)));
  EXPECT_THROW(permute_tensor(vw, {0, 1, 2}), InvalidInput);
  EXPECT_THROW(permute_tensor(vw, {0, 0}), InvalidInput);
}

TEST(PermuteTensor, GroupAction) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    TensorPow t(2, 3);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.rational();
    Permutation sigma{0, 1, 2}, tau{0, 1, 2};
    rng.shuffle(sigma);
    rng.shuffle(tau);
    Permutation composed(3);
    for (std::size_t p = 0; p < 3; ++p) composed[p] = tau[sigma[p]];
    EXPECT_EQ(permute_tensor(permute_tensor(t, sigma), tau), permute_tensor(t, composed));
  }
}

TEST(Interleave, Examples) {
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = rng.vector(2), w = rng.vector(3);
    Matrix u(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) u(i, j) = rng.rational();
    const Rational uvw = dot(v, u.apply(w));
    const TensorPow uflat(6, 1, RationalVector(u.entries().begin(), u.entries().end()));
    // k = 1
    EXPECT_EQ(tensor_pair(interleave(TensorPow::vector(v), TensorPow::vector(w)), uflat), uvw);
    // k = 2, rank-one inputs
    const auto two = interleave(TensorPow::power(v, 2), TensorPow::power(w, 2));
    EXPECT_EQ(tensor_pair(two, TensorPow::power(uflat.coords(), 2)), uvw * uvw);
  }
  EXPECT_TRUE(interleave(TensorPow(2, 2), TensorPow::power(vec({1, 1}), 2)).is_zero());
  EXPECT_THROW(interleave(TensorPow(2, 1), TensorPow(2, 2)), InvalidInput);
}
