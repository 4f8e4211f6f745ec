#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kstab/criterion.hpp"
#include "kstab/rational.hpp"

namespace kstab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The eight exact identities: P from the root data, the four closed-form
// building blocks, and the three boundary factorizations of C.
std::vector<CheckResult> identity_checks(const Criterion& criterion);

// The two boundary inequality chains, each checked exactly at `samples`
// rational points:
//   C(a,1/2) > (1-2a)^2 (576a^6+1032a^3+524a^2+884a+249)/61440
//            > 249 (1-2a)^2/61440            for a in (0, 1/2)
//   C(0,b)   > b^4 (1-b)(39/4)/80            for b in (0, 1/2]
std::vector<CheckResult> inequality_chain_checks(const Criterion& criterion,
                                                 std::size_t samples = 1000,
                                                 std::uint64_t seed = 20240611);

// Deterministic rationals p/q strictly inside (lo, hi), plus hi itself when
// include_hi is set (as the last sample).
std::vector<Rational> sample_rationals(const Rational& lo, const Rational& hi, std::size_t count,
                                       std::uint64_t seed, bool include_hi = false);

}  // namespace kstab
