#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/bernstein.hpp"
#include "kstab/bipoly.hpp"
#include "kstab/criterion.hpp"

namespace kstab {

enum class LeafStatus { positive, negative, inconclusive };
enum class Outcome { certified, refuted, inconclusive };

std::string_view status_name(LeafStatus status);
std::string_view outcome_name(Outcome outcome);
LeafStatus parse_status(std::string_view name);
Outcome parse_outcome(std::string_view name);

struct LeafRecord {
  // Child indices from the root region, e.g. "031"; the root itself is "".
  std::string path;
  TriangleRegion region;
  LeafStatus status;
  std::vector<Rational> coefficients;
  // Sample point with f <= 0, only for negative leaves.
  std::optional<Point> witness;
};

struct PositivityCertificate {
  std::string polynomial_id;
  TriangleRegion region;
  unsigned degree = 0;
  unsigned max_depth = 0;
  // Sorted by path, i.e. depth-first order of the subdivision tree.
  std::vector<LeafRecord> leaves;
  Outcome outcome = Outcome::inconclusive;
  std::optional<Point> witness;

  std::size_t count(LeafStatus status) const;
  unsigned depth_reached() const;
};

// Subdivides the region until each leaf has all Bernstein coefficients > 0,
// f <= 0 is found at a leaf vertex or centroid, or max_depth is reached.
// Levels are processed breadth-first; leaves of one level may be evaluated
// on `threads` workers, and the result does not depend on the thread count.
PositivityCertificate certify_positive(const BiPoly& f, std::string polynomial_id,
                                       const TriangleRegion& region, unsigned max_depth,
                                       unsigned threads = 1);

// {delta <= a, a + delta <= b, b <= 1/2}; DegenerateRegion unless 0 < delta < 1/4.
TriangleRegion shrunken_triangle(const Rational& delta);
// {delta <= a <= b <= 1/2 - delta}, where C/(b-a) is certified instead of C;
// DegenerateRegion unless 0 < delta < 1/4.
TriangleRegion wall_region(const Rational& delta);

// "C" or "C_tilde" of the given criterion; std::invalid_argument otherwise.
BiPoly polynomial_for_id(std::string_view id, const Criterion& criterion = standard_criterion());

struct LadderRung {
  Rational delta;
  PositivityCertificate interior;  // C on shrunken_triangle(delta)
  PositivityCertificate wall;      // C_tilde on wall_region(delta)
  bool certified() const {
    return interior.outcome == Outcome::certified && wall.outcome == Outcome::certified;
  }
};

// One rung per delta; every delta is validated before any work starts.
std::vector<LadderRung> certify_margin_ladder(std::span<const Rational> deltas, unsigned max_depth,
                                              unsigned threads = 1,
                                              const Criterion& criterion = standard_criterion());

struct ReplayReport {
  bool valid = true;
  std::vector<std::string> problems;
};

// Re-verifies a certificate against f from scratch: the leaf paths must tile
// the region, every leaf region must match its path, every stored net must
// equal an independent recomputation, and statuses and outcome must follow
// from the recomputed signs and witness values.
ReplayReport replay_certificate(const PositivityCertificate& certificate, const BiPoly& f);

struct ScanPoint {
  Rational a;
  Rational b;
  Rational value;
};

struct ScanResult {
  std::vector<ScanPoint> points;
  std::size_t argmin = 0;
  const ScanPoint& minimum() const { return points.at(argmin); }
};

// Exact C at (i/(2n), j/(2n)) for 0 < i < j <= n, ordered by i then j.
// std::invalid_argument when n < 2.
ScanResult scan_grid(unsigned n, unsigned threads = 1, const Criterion& criterion = standard_criterion());

}  // namespace kstab
