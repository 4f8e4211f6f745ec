#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kstab/bipoly.hpp"
#include "kstab/rational.hpp"

namespace kstab {

struct Point {
  Rational a;
  Rational b;
  friend bool operator==(const Point&, const Point&) = default;
};

Point midpoint(const Point& p, const Point& q);

// A non-degenerate triangle in the (a, b)-plane.
class TriangleRegion {
 public:
  // Throws DegenerateRegion when the vertices are collinear.
  TriangleRegion(Point v0, Point v1, Point v2);

  const std::array<Point, 3>& vertices() const { return vertices_; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  // Twice the signed area; nonzero by construction.
  Rational doubled_signed_area() const;
  Rational area() const;
  Point centroid() const;
  // Closed triangle membership.
  bool contains(const Point& p) const;

  // Midpoint split. With m01, m12, m02 the edge midpoints the children are
  //   0: (v0, m01, m02)   1: (m01, v1, m12)   2: (m02, m12, v2)   3: (m12, m02, m01)
  std::array<TriangleRegion, 4> split() const;
  TriangleRegion child(std::size_t index) const { return split()[index]; }

  friend bool operator==(const TriangleRegion&, const TriangleRegion&) = default;

 private:
  std::array<Point, 3> vertices_;
};

// Bernstein nets of degree n over a triangle are stored flat: the entry for
// multi-index (i, j, k), i + j + k = n, where i weighs vertex 0, j vertex 1
// and k vertex 2, sits at bernstein_index(n, i, j). Ordering is i descending,
// then j descending, so entry 0 is (n,0,0), the value at vertex 0.
constexpr std::size_t bernstein_size(unsigned degree) {
  return static_cast<std::size_t>(degree + 1) * (degree + 2) / 2;
}
constexpr std::size_t bernstein_index(unsigned degree, unsigned i, unsigned j) {
  const std::size_t before = static_cast<std::size_t>(degree - i) * (degree - i + 1) / 2;
  return before + (degree - i - j);
}

// Exact Bernstein coefficients of f of the given degree over the region,
// by affine substitution and the monomial-to-Bernstein change of basis.
// Throws DegreeTooLow when degree < total degree of f.
std::vector<Rational> bernstein_coefficients(const BiPoly& f, const TriangleRegion& region, unsigned degree);

// Value of the Bernstein form at barycentric coordinates (de Casteljau).
Rational evaluate_bernstein(const std::vector<Rational>& net, unsigned degree,
                            const std::array<Rational, 3>& barycentric);

// Nets of the four TriangleRegion::split() children, derived from the parent
// net alone by blossoming (repeated de Casteljau steps).
std::array<std::vector<Rational>, 4> subdivide_bernstein(const std::vector<Rational>& net, unsigned degree);

}  // namespace kstab
