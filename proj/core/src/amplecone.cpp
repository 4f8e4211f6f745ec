#include "kstab/amplecone.hpp"

#include <algorithm>
#include <string>

#include "kstab/error.hpp"

namespace kstab {

namespace {

std::string describe(const BundleParams& p) {
  return "(" + std::to_string(p.a) + ", " + std::to_string(p.b) + ", " + std::to_string(p.c) + ")";
}

Rational degree_sum(const BundleParams& p) {
  const Rational sum = Rational(p.b) + Rational(p.c);
  if (sum.sign() <= 0) throw DegenerateScaling("b + c <= 0 for " + describe(p));
  return sum;
}

}  // namespace

DivisorVector relation_vector() { return {-1, -1, 1, 1}; }

DivisorVector to_divisor(const BundleParams& p) { return {-p.a, 0, p.b, p.c}; }

BundleParams reduce(const DivisorVector& d) {
  // club * D_club = club * (D_diamond + D_heart - E)
  return {-(d.exceptional - d.club), d.diamond + d.club, d.heart + d.club};
}

bool is_ample(const BundleParams& p) { return 0 < p.a && p.a < std::min(p.b, p.c); }

NormalizedClass normalize(const BundleParams& p) {
  const Rational sum = degree_sum(p);
  return {Rational(p.a) / sum, Rational(std::min(p.b, p.c)) / sum};
}

MomentSegment moment_polytope(const BundleParams& p) {
  MomentSegment segment{{Rational(0), Rational(p.b) + Rational(p.c)},
                        Rational(std::max(-p.b, -p.c)),
                        Rational(std::min<std::int64_t>(-p.a, 0))};
  if (segment.lo > segment.hi) {
    throw EmptyPolytope("moment polytope of " + describe(p) + " is empty: [" + segment.lo.str() + ", " +
                        segment.hi.str() + "]");
  }
  return segment;
}

Rational wall_distance(const BundleParams& p) {
  const Rational sum = degree_sum(p);
  const Rational to_a0 = Rational(p.a) / sum;
  const Rational to_diagonal = (Rational(p.b) - Rational(p.a)) / sum;
  const Rational to_symmetry = (Rational(p.c) - Rational(p.b)) / sum;
  return std::min({to_a0, to_diagonal, to_symmetry});
}

CriterionReport kstability_verdict(const BundleParams& p, const Criterion& criterion) {
  if (!is_ample(p)) throw NotAmple("line bundle " + describe(p) + " is not ample (need 0 < a < min(b, c))");
  const NormalizedClass n = normalize(p);
  return criterion.evaluate(n.a, n.b);
}

}  // namespace kstab
