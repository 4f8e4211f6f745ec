#pragma once

#include <random>

#include "kstab/bipoly.hpp"
#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

namespace kstab::testing {

// Small random rationals and polynomials for property-style tests.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long max_num = 50, long max_den = 30) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  // Uniform-ish rational strictly inside (lo, hi).
  Rational rational_in(const Rational& lo, const Rational& hi) {
    const long steps = integer(1, 9999);
    return lo + (hi - lo) * Rational(steps, 10000);
  }

  UniPoly unipoly(int max_degree = 5) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree + 1)));
    for (auto& x : c) x = integer(0, 3) == 0 ? Rational(0) : rational();
    return UniPoly(std::move(c));
  }

  BiPoly bipoly(unsigned max_total_degree = 4, int max_terms = 6) {
    BiPoly::TermMap terms;
    const long count = integer(0, max_terms);
    for (long k = 0; k < count; ++k) {
      const auto i = static_cast<unsigned>(integer(0, max_total_degree));
      const auto j = static_cast<unsigned>(integer(0, max_total_degree - i));
      terms[{i, j}] = rational();
    }
    return BiPoly(std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kstab::testing
