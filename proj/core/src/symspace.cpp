#include "symtrace/symspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "symtrace/errors.hpp"

namespace symtrace {

std::size_t sym_dim(std::size_t d, std::size_t degree) {
  if (d < 1) throw InvalidInput("sym_dim requires d >= 1");
  return binomial(static_cast<long>(d + degree - 1), static_cast<long>(degree)).get_ui();
}

namespace {

void append_monomials(std::size_t d, std::size_t degree, MultiIndex& prefix, std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == d) {
    prefix.push_back(static_cast<unsigned>(degree));
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t a = degree + 1; a-- > 0;) {
    prefix.push_back(static_cast<unsigned>(a));
    append_monomials(d, degree - a, prefix, out);
    prefix.pop_back();
  }
}

std::size_t weight(std::span<const unsigned> alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), std::size_t{0});
}

// Content (exponent vector) of a flat tensor index.
MultiIndex content(std::size_t flat, std::size_t dim, std::size_t order) {
  MultiIndex alpha(dim, 0);
  for (std::size_t k = 0; k < order; ++k) {
    ++alpha[flat % dim];
    flat /= dim;
  }
  return alpha;
}

void check_same_shape(const SymTensor& a, const SymTensor& b, const char* what) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) {
    throw InvalidInput(std::string(what) + ": dimension or degree mismatch");
  }
}

bool is_permutation_of(const Permutation& sigma, std::size_t k) {
  if (sigma.size() != k) return false;
  std::vector<bool> seen(k, false);
  for (auto s : sigma) {
    if (s >= k || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

}  // namespace

std::vector<MultiIndex> monomials(std::size_t d, std::size_t degree) {
  if (d < 1) throw InvalidInput("monomials requires d >= 1");
  std::vector<MultiIndex> out;
  out.reserve(sym_dim(d, degree));
  MultiIndex prefix;
  append_monomials(d, degree, prefix, out);
  return out;
}

std::size_t monomial_index(std::span<const unsigned> alpha) {
  const std::size_t d = alpha.size();
  if (d < 1) throw InvalidInput("monomial_index: empty multi-index");
  std::size_t remaining = weight(alpha);
  std::size_t index = 0;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    // Monomials with a larger exponent in slot i come first.
    for (std::size_t a = remaining; a > alpha[i]; --a) index += sym_dim(d - i - 1, remaining - a);
    remaining -= alpha[i];
  }
  return index;
}

BigInt multinomial(std::span<const unsigned> alpha) {
  BigInt m = factorial(weight(alpha));
  for (auto a : alpha) m /= factorial(a);
  return m;
}

SymTensor::SymTensor(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree), coeffs_(sym_dim(dim, degree)) {}

SymTensor::SymTensor(std::size_t dim, std::size_t degree, RationalVector coeffs)
    : dim_(dim), degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != sym_dim(dim, degree)) throw InvalidInput("SymTensor: coefficient count mismatch");
}

SymTensor SymTensor::linear(std::span<const Rational> v) {
  return SymTensor(v.size(), 1, RationalVector(v.begin(), v.end()));
}

SymTensor SymTensor::monomial(std::span<const unsigned> alpha, const Rational& coeff) {
  SymTensor s(alpha.size(), weight(alpha));
  s.coeffs_[monomial_index(alpha)] = coeff;
  return s;
}

const Rational& SymTensor::coeff(std::span<const unsigned> alpha) const {
  if (alpha.size() != dim_ || weight(alpha) != degree_) throw InvalidInput("SymTensor::coeff: bad multi-index");
  return coeffs_[monomial_index(alpha)];
}

void SymTensor::set_coeff(std::span<const unsigned> alpha, Rational value) {
  if (alpha.size() != dim_ || weight(alpha) != degree_) throw InvalidInput("SymTensor::set_coeff: bad multi-index");
  coeffs_[monomial_index(alpha)] = std::move(value);
}

Rational SymTensor::evaluate(std::span<const Rational> w) const {
  if (w.size() != dim_) throw InvalidInput("SymTensor::evaluate: dimension mismatch");
  Rational total = 0;
  const auto basis = monomials(dim_, degree_);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    Rational term = coeffs_[k];
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned e = 0; e < basis[k][i]; ++e) term *= w[i];
    }
    total += term;
  }
  return total;
}

SymTensor& SymTensor::operator+=(const SymTensor& other) {
  check_same_shape(*this, other, "SymTensor +");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& other) {
  check_same_shape(*this, other, "SymTensor -");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SymTensor& SymTensor::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SymTensor multiply(const SymTensor& a, const SymTensor& b) {
  if (a.dim() != b.dim()) throw InvalidInput("multiply: dimension mismatch");
  const std::size_t d = a.dim();
  SymTensor out(d, a.degree() + b.degree());
  const auto ma = monomials(d, a.degree());
  const auto mb = monomials(d, b.degree());
  MultiIndex sum(d);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      for (std::size_t k = 0; k < d; ++k) sum[k] = ma[i][k] + mb[j][k];
      out[monomial_index(sum)] += a[i] * b[j];
    }
  }
  return out;
}

SymTensor power_embed(std::span<const Rational> v, std::size_t r) {
  SymTensor s(v.size(), r);
  const auto basis = monomials(v.size(), r);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Rational c(multinomial(basis[k]));
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (unsigned e = 0; e < basis[k][i]; ++e) c *= v[i];
    }
    s[k] = std::move(c);
  }
  return s;
}

Rational pair(const SymTensor& s, const SymTensor& t) {
  check_same_shape(s, t, "pair");
  const auto basis = monomials(s.dim(), s.degree());
  Rational total = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(s[k]) == 0 || sgn(t[k]) == 0) continue;
    total += s[k] * t[k] / Rational(multinomial(basis[k]));
  }
  return total;
}

std::vector<PolarTerm> polarize(const SymTensor& s) {
  std::vector<PolarTerm> out;
  if (s.is_zero()) return out;
  const std::size_t d = s.dim();
  const std::size_t r = s.degree();
  if (r == 0) {
    out.push_back({s[0], RationalVector(d)});
    return out;
  }
  if (r == 1) {
    out.push_back({1, s.coeffs()});
    return out;
  }
  // z_1 ⋯ z_r = (1/r!) Σ_{∅≠S⊆[r]} (−1)^{r−|S|} (Σ_{k∈S} z_k)^r with the z_k
  // the basis vectors repeated by alpha. Subsets with equal sums are merged:
  // a sub-multi-index beta ≤ alpha arises from Π C(alpha_i, beta_i) subsets.
  std::map<RationalVector, Rational> merged;
  const Rational inv_fact = Rational(1) / Rational(factorial(r));
  const auto basis = monomials(d, r);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(s[k]) == 0) continue;
    const MultiIndex& alpha = basis[k];
    MultiIndex beta(d, 0);
    while (true) {
      std::size_t i = 0;
      while (i < d && beta[i] == alpha[i]) beta[i++] = 0;
      if (i == d) break;
      ++beta[i];
      const std::size_t size = weight(beta);
      BigInt count = 1;
      for (std::size_t j = 0; j < d; ++j) count *= binomial(alpha[j], beta[j]);
      Rational w = s[k] * Rational(count) * inv_fact;
      if ((r - size) % 2 == 1) w = -w;
      RationalVector point(beta.begin(), beta.end());
      merged[std::move(point)] += w;
    }
  }
  for (auto& [point, w] : merged) {
    if (sgn(w) != 0) out.push_back({w, point});
  }
  return out;
}

SymTensor reassemble(const std::vector<PolarTerm>& terms, std::size_t dim, std::size_t degree) {
  SymTensor s(dim, degree);
  for (const auto& t : terms) s += t.weight * power_embed(t.point, degree);
  return s;
}

TensorPow::TensorPow(std::size_t dim, std::size_t order) : dim_(dim), order_(order) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < order; ++k) n *= dim;
  coords_.resize(n);
}

TensorPow::TensorPow(std::size_t dim, std::size_t order, RationalVector coords) : TensorPow(dim, order) {
  if (coords.size() != coords_.size()) throw InvalidInput("TensorPow: coordinate count mismatch");
  coords_ = std::move(coords);
}

TensorPow TensorPow::vector(std::span<const Rational> v) {
  return TensorPow(v.size(), 1, RationalVector(v.begin(), v.end()));
}

TensorPow TensorPow::power(std::span<const Rational> v, std::size_t k) {
  TensorPow t(v.size(), 0, RationalVector{Rational(1)});
  const TensorPow single = vector(v);
  for (std::size_t i = 0; i < k; ++i) t = tensor_product(t, single);
  return t;
}

std::vector<std::size_t> TensorPow::unflatten(std::size_t flat) const {
  std::vector<std::size_t> slots(order_);
  for (std::size_t k = order_; k-- > 0;) {
    slots[k] = flat % dim_;
    flat /= dim_;
  }
  return slots;
}

std::size_t TensorPow::flatten(std::span<const std::size_t> slots) const {
  std::size_t flat = 0;
  for (auto s : slots) flat = flat * dim_ + s;
  return flat;
}

TensorPow& TensorPow::operator+=(const TensorPow& other) {
  if (dim_ != other.dim_ || order_ != other.order_) throw InvalidInput("TensorPow +: shape mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

TensorPow& TensorPow::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

TensorPow tensor_product(const TensorPow& a, const TensorPow& b) {
  if (a.dim() != b.dim() && a.order() != 0 && b.order() != 0) {
    throw InvalidInput("tensor_product: dimension mismatch");
  }
  const std::size_t dim = a.order() == 0 ? b.dim() : a.dim();
  TensorPow out(dim, a.order() + b.order());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

Rational tensor_pair(const TensorPow& a, const TensorPow& b) {
  if (a.size() != b.size() || a.order() != b.order()) throw InvalidInput("tensor_pair: shape mismatch");
  return dot(a.coords(), b.coords());
}

TensorPow to_tensor(const SymTensor& s) {
  TensorPow t(s.dim(), s.degree());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const MultiIndex alpha = content(i, s.dim(), s.degree());
    const Rational& c = s[monomial_index(alpha)];
    if (sgn(c) != 0) t[i] = c / Rational(multinomial(alpha));
  }
  return t;
}

SymTensor symmetrize(const TensorPow& t) {
  SymTensor s(t.dim(), t.order());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (sgn(t[i]) == 0) continue;
    s[monomial_index(content(i, t.dim(), t.order()))] += t[i];
  }
  return s;
}

TensorPow sym_projection(const TensorPow& t) { return to_tensor(symmetrize(t)); }

TensorPow permute_tensor(const TensorPow& t, const Permutation& sigma) {
  if (!is_permutation_of(sigma, t.order())) throw InvalidInput("permute_tensor: not a permutation of the tensor's slots");
  TensorPow out(t.dim(), t.order());
  std::vector<std::size_t> source(t.order());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto target = out.unflatten(i);
    for (std::size_t p = 0; p < t.order(); ++p) source[p] = target[sigma[p]];
    out[i] = t[t.flatten(source)];
  }
  return out;
}

TensorPow interleave(const TensorPow& tV, const TensorPow& tW) {
  if (tV.order() != tW.order()) throw InvalidInput("interleave: order mismatch");
  const std::size_t k = tV.order();
  const std::size_t dW = tW.dim();
  TensorPow out(tV.dim() * dW, k);
  std::vector<std::size_t> slots(k);
  for (std::size_t i = 0; i < tV.size(); ++i) {
    if (sgn(tV[i]) == 0) continue;
    const auto a = tV.unflatten(i);
    for (std::size_t j = 0; j < tW.size(); ++j) {
      if (sgn(tW[j]) == 0) continue;
      const auto b = tW.unflatten(j);
      for (std::size_t p = 0; p < k; ++p) slots[p] = a[p] * dW + b[p];
      out[out.flatten(slots)] = tV[i] * tW[j];
    }
  }
  return out;
}

SymTensor inject_sum(const SymTensor& s, std::size_t target_dim, Summand side) {
  if (target_dim < s.dim()) throw InvalidInput("inject_sum: target dimension smaller than source");
  const std::size_t offset = side == Summand::first ? 0 : target_dim - s.dim();
  SymTensor out(target_dim, s.degree());
  const auto basis = monomials(s.dim(), s.degree());
  MultiIndex padded(target_dim, 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(s[k]) == 0) continue;
    std::fill(padded.begin(), padded.end(), 0u);
    std::copy(basis[k].begin(), basis[k].end(), padded.begin() + static_cast<std::ptrdiff_t>(offset));
    out[monomial_index(padded)] = s[k];
  }
  return out;
}

QuotientMap quotient_map(std::size_t d, const std::vector<RationalVector>& kernel_basis) {
  SpanBuilder span(d);
  for (const auto& v : kernel_basis) {
    if (v.size() != d) throw InvalidInput("quotient_map: kernel vector has wrong length");
    if (!span.insert(v)) throw InvalidInput("quotient_map: kernel basis is linearly dependent");
  }
  const std::size_t k = kernel_basis.size();
  if (k >= d) throw InvalidInput("quotient_map: kernel is the whole space");
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < d && span.dimension() < d; ++i) {
    RationalVector e(d);
    e[i] = 1;
    if (span.insert(e)) complement.push_back(i);
  }
  Matrix basis(d, d);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < d; ++r) basis(r, c) = kernel_basis[c][r];
  for (std::size_t c = 0; c < complement.size(); ++c) basis(complement[c], k + c) = 1;
  const Matrix inv = inverse(basis);

  QuotientMap q{Matrix(d - k, d), Matrix(d, d - k)};
  for (std::size_t r = 0; r < d - k; ++r)
    for (std::size_t c = 0; c < d; ++c) q.projection(r, c) = inv(k + r, c);
  for (std::size_t c = 0; c < complement.size(); ++c) q.section(complement[c], c) = 1;
  return q;
}

SymTensor linear_image(const SymTensor& s, const Matrix& map) {
  if (map.cols() != s.dim()) throw InvalidInput("linear_image: map does not act on the tensor's space");
  const std::size_t d = s.dim();
  const std::size_t target = map.rows();
  // y_i ↦ Σ_j map(j, i) z_j, so the polynomial p(y) becomes p(mapᵀ z).
  std::vector<std::vector<SymTensor>> powers(d);
  for (std::size_t i = 0; i < d; ++i) {
    const SymTensor form = SymTensor::linear(map.column(i));
    powers[i].push_back(SymTensor(target, 0, RationalVector{Rational(1)}));
    for (std::size_t e = 1; e <= s.degree(); ++e) powers[i].push_back(multiply(powers[i].back(), form));
  }
  SymTensor out(target, s.degree());
  const auto basis = monomials(d, s.degree());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(s[k]) == 0) continue;
    SymTensor term(target, 0, RationalVector{s[k]});
    for (std::size_t i = 0; i < d; ++i) {
      if (basis[k][i] > 0) term = multiply(term, powers[i][basis[k][i]]);
    }
    out += term;
  }
  return out;
}

SymTensor quotient_project(const SymTensor& s, const std::vector<RationalVector>& kernel_basis) {
  return linear_image(s, quotient_map(s.dim(), kernel_basis).projection);
}

}  // namespace symtrace
