#pragma once

#include <array>
#include <string_view>

#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

namespace kstab {

// Positive roots of SL3 with respect to the upper-triangular Borel subgroup.
enum class PositiveRoot { alpha1, alpha2, alpha1_plus_alpha2 };

inline constexpr std::array<PositiveRoot, 3> kPositiveRoots = {
    PositiveRoot::alpha1, PositiveRoot::alpha2, PositiveRoot::alpha1_plus_alpha2};

// Names "alpha1", "alpha2", "alpha1+alpha2"; anything else is UnknownRoot.
PositiveRoot parse_root(std::string_view name);
std::string_view root_name(PositiveRoot root);

// A weight x1*w1 + x2*w2 in the fundamental-weight basis.
struct Weight {
  Rational x1;
  Rational x2;

  friend Weight operator+(const Weight& u, const Weight& v) { return {u.x1 + v.x1, u.x2 + v.x2}; }
  friend Weight operator*(const Rational& s, const Weight& w) { return {s * w.x1, s * w.x2}; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

namespace weights {
inline Weight fundamental1() { return {Rational(1), Rational(0)}; }
inline Weight fundamental2() { return {Rational(0), Rational(1)}; }
// Half-sum of positive roots, w1 + w2.
inline Weight rho() { return {Rational(1), Rational(1)}; }
inline Weight alpha1() { return {Rational(2), Rational(-1)}; }
// alpha2 = 2*w2 - w1; also the spherical root sigma.
inline Weight alpha2() { return {Rational(-1), Rational(2)}; }
// chi = w2.
inline Weight chi() { return fundamental2(); }
inline Weight sigma() { return alpha2(); }
}  // namespace weights

namespace detail {
// Coordinates of each positive root in the simple-root basis. Since
// (alpha_i, w_j) = delta_ij in the normalized invariant form, the pairing of
// root c1*alpha1 + c2*alpha2 with x1*w1 + x2*w2 is c1*x1 + c2*x2, and with
// rho it is c1 + c2 (the height).
constexpr std::array<long, 2> simple_coordinates(PositiveRoot root) {
  switch (root) {
    case PositiveRoot::alpha1: return {1, 0};
    case PositiveRoot::alpha2: return {0, 1};
    case PositiveRoot::alpha1_plus_alpha2: return {1, 1};
  }
  return {0, 0};
}
void throw_unknown_root();
}  // namespace detail

// <root, x1*w1 + x2*w2> / <root, rho>. Linear in (x1, x2), so it works for
// any coordinate type closed under addition and scaling by a Rational
// (Rational itself, or UniPoly for weights depending on t).
template <class Coordinate>
Coordinate pairing_ratio(PositiveRoot root, const Coordinate& x1, const Coordinate& x2) {
  if (root != PositiveRoot::alpha1 && root != PositiveRoot::alpha2 &&
      root != PositiveRoot::alpha1_plus_alpha2) {
    detail::throw_unknown_root();
  }
  const auto [c1, c2] = detail::simple_coordinates(root);
  const Rational inv_height(1, c1 + c2);
  Coordinate acc = x1 * Rational(c1) + x2 * Rational(c2);
  return acc * inv_height;
}

Rational pairing_ratio(PositiveRoot root, const Weight& w);

// chi + t*sigma as a pair of coordinate polynomials in t: (-t, 1 + 2t).
struct WeightLine {
  UniPoly x1;
  UniPoly x2;
  Weight at(const Rational& t) const { return {x1(t), x2(t)}; }
};
WeightLine weight_line();

// Product of the pairing ratios over the positive roots along the weight line.
UniPoly product_over_positive_roots();

// (-2t^3 - 3t^2 - t)/2.
UniPoly stated_P();
// (1 - 3t^2)/2. Taken as given input data; it is not derived here.
UniPoly stated_Q();

// product_over_positive_roots(), checked against stated_P(); throws
// ConsistencyFailure on mismatch.
UniPoly build_P();

}  // namespace kstab
