#include "generators.hpp"

#include <algorithm>

namespace symtrace::gen {

std::vector<SymTensor> only_zero_forms(Rng& rng, std::size_t d, std::size_t r) {
  const std::size_t full = sym_dim(d, r);
  while (true) {
    const std::size_t count = static_cast<std::size_t>(rng.integer(static_cast<long>(d), static_cast<long>(std::max(d, full))));
    std::vector<SymTensor> forms;
    for (std::size_t k = 0; k < count; ++k) forms.push_back(rng.sym_tensor(d, r, 3, 2));
    if (only_zero_test(forms, r, d)) return forms;
  }
}

Matrix functional(Rng& rng, std::size_t dim_v, std::size_t dim_w, bool rank_one) {
  Matrix u(dim_v, dim_w);
  do {
    if (rank_one) {
      const auto x = rng.nonzero_vector(dim_v), y = rng.nonzero_vector(dim_w);
      for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_w; ++j) u(i, j) = x[i] * y[j];
    } else {
      for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_w; ++j) u(i, j) = rng.rational(3, 2);
    }
  } while (u.is_zero());
  return u;
}

FiberInstance fiber_instance(Rng& rng, std::size_t dim_v, std::size_t dim_w, std::size_t r, bool deficient) {
  FiberInstance inst;
  inst.dim_v = dim_v;
  inst.dim_w = dim_w;
  inst.r = r;
  inst.A = only_zero_forms(rng, dim_v, r);
  inst.B = only_zero_forms(rng, dim_w, r);
  inst.u = functional(rng, dim_v, dim_w, deficient);
  return inst;
}

OperatorWord word(Rng& rng, const std::vector<bool>& pattern, std::size_t d, std::size_t r, bool general) {
  std::vector<Factor> factors;
  for (bool is_mult : pattern) {
    SymTensor t = general ? rng.sym_tensor(d, r, 3, 2) : power_embed(rng.vector(d, 3, 2), r);
    factors.push_back({is_mult ? FactorKind::multiply : FactorKind::contract, std::move(t)});
  }
  return OperatorWord(r, std::move(factors));
}

std::vector<std::vector<std::pair<bool, std::size_t>>> all_orderings(std::size_t m) {
  std::vector<std::pair<bool, std::size_t>> items;
  for (std::size_t i = 0; i < m; ++i) {
    items.emplace_back(false, i);
    items.emplace_back(true, i);
  }
  std::sort(items.begin(), items.end());
  std::vector<std::vector<std::pair<bool, std::size_t>>> out;
  do out.push_back(items);
  while (std::next_permutation(items.begin(), items.end()));
  return out;
}

OperatorWord word_from_ordering(const std::vector<std::pair<bool, std::size_t>>& ordering, std::size_t r,
                                const std::vector<SymTensor>& v, const std::vector<SymTensor>& w) {
  std::vector<Factor> factors;
  for (const auto& [is_mult, label] : ordering) {
    factors.push_back({is_mult ? FactorKind::multiply : FactorKind::contract, is_mult ? v[label] : w[label]});
  }
  return OperatorWord(r, std::move(factors));
}

}  // namespace symtrace::gen
