#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symtrace/exactlin.hpp"
#include "symtrace/symspace.hpp"

namespace symtrace {

// Seeded generator for test data. Raw std::mt19937_64 output is fixed by the
// standard; ranges are mapped by hand (std distributions are
// implementation-defined), so a seed gives the same data on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }
  bool coin() { return (next() & 1u) != 0; }

  // numerator in [-bound, bound], denominator in [1, max_den]
  Rational rational(long bound = 5, long max_den = 3) {
    return make_rational(integer(-bound, bound), integer(1, max_den));
  }
  Rational nonzero_rational(long bound = 5, long max_den = 3) {
    Rational q;
    do q = rational(bound, max_den);
    while (sgn(q) == 0);
    return q;
  }
  RationalVector vector(std::size_t d, long bound = 5, long max_den = 3) {
    RationalVector v(d);
    for (auto& x : v) x = rational(bound, max_den);
    return v;
  }
  RationalVector nonzero_vector(std::size_t d) {
    RationalVector v;
    do v = vector(d);
    while (is_zero(v));
    return v;
  }
  SymTensor sym_tensor(std::size_t d, std::size_t degree, long bound = 4, long max_den = 2) {
    SymTensor s(d, degree);
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = rational(bound, max_den);
    return s;
  }
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(integer(0, static_cast<long>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace symtrace
