#pragma once

#include <cstdint>

#include "kstab/criterion.hpp"
#include "kstab/rational.hpp"
#include "kstab/rootdata.hpp"

namespace kstab {

// Coefficients of D(a,b,c) = -a E + b D_diamond + c D_heart. Every Cartier
// divisor class has exactly one such representative: the club color is
// eliminated through the relation diamond + heart = E + club.
struct BundleParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  friend bool operator==(const BundleParams&, const BundleParams&) = default;
};

// A divisor written on all four B-stable prime divisors.
struct DivisorVector {
  std::int64_t exceptional = 0;
  std::int64_t club = 0;
  std::int64_t diamond = 0;
  std::int64_t heart = 0;

  friend DivisorVector operator+(const DivisorVector& u, const DivisorVector& v) {
    return {u.exceptional + v.exceptional, u.club + v.club, u.diamond + v.diamond, u.heart + v.heart};
  }
  friend DivisorVector operator*(std::int64_t k, const DivisorVector& v) {
    return {k * v.exceptional, k * v.club, k * v.diamond, k * v.heart};
  }
  friend bool operator==(const DivisorVector&, const DivisorVector&) = default;
};

// diamond + heart - E - club, the principal divisor spanning the relations.
DivisorVector relation_vector();
DivisorVector to_divisor(const BundleParams& p);
// Eliminates the club coefficient: club = diamond + heart - E.
BundleParams reduce(const DivisorVector& d);

// Image in the triangle 0 < a < b <= 1/2 (for ample input).
struct NormalizedClass {
  Rational a;
  Rational b;
  friend bool operator==(const NormalizedClass&, const NormalizedClass&) = default;
};

// base + [lo, hi] * alpha2.
struct MomentSegment {
  Weight base;
  Rational lo;
  Rational hi;
  Rational length() const { return hi - lo; }
};

// 0 < a < min(b, c).
bool is_ample(const BundleParams& p);

// (a/(b+c), min(b,c)/(b+c)); DegenerateScaling when b + c <= 0.
NormalizedClass normalize(const BundleParams& p);

// (b+c) w2 + [max(-b,-c), min(-a,0)] alpha2; EmptyPolytope when lo > hi.
MomentSegment moment_polytope(const BundleParams& p);

// min(a/(b+c), (b-a)/(b+c), (c-b)/(b+c)): distance to the walls a = 0,
// a = b and the symmetry line b = c. Requires b + c > 0.
Rational wall_distance(const BundleParams& p);

// Evaluates C at normalize(p); NotAmple when p is not ample.
CriterionReport kstability_verdict(const BundleParams& p,
                                   const Criterion& criterion = standard_criterion());

}  // namespace kstab
