#pragma once

#include <cstddef>
#include <vector>

#include "symtrace/fiber.hpp"
#include "symtrace/operators.hpp"
#include "symtrace/random.hpp"

namespace symtrace::gen {

// Random degree-r forms in d variables with 0 as their only common zero.
std::vector<SymTensor> only_zero_forms(Rng& rng, std::size_t d, std::size_t r);

// Random nonzero matrix; rank one when rank_one is set.
Matrix functional(Rng& rng, std::size_t dim_v, std::size_t dim_w, bool rank_one);

// A, B passing only_zero_test and u ≠ 0. With deficient set, û has a
// nontrivial kernel on V or W.
FiberInstance fiber_instance(Rng& rng, std::size_t dim_v, std::size_t dim_w, std::size_t r, bool deficient);

// m M-factors and m I-factors in the given order pattern (true = M), payloads
// random rank-one powers or, when general is set, arbitrary tensors.
OperatorWord word(Rng& rng, const std::vector<bool>& pattern, std::size_t d, std::size_t r, bool general);

// All orderings of m labeled M-factors and m labeled I-factors, as sequences of
// (is_multiply, label).
std::vector<std::vector<std::pair<bool, std::size_t>>> all_orderings(std::size_t m);

// Word whose i-th M-factor / I-factor payloads are given, in the given ordering.
OperatorWord word_from_ordering(const std::vector<std::pair<bool, std::size_t>>& ordering, std::size_t r,
                                const std::vector<SymTensor>& v, const std::vector<SymTensor>& w);

}  // namespace symtrace::gen
