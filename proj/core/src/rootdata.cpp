#include "kstab/rootdata.hpp"

#include <string>

#include "kstab/error.hpp"

namespace kstab {

namespace detail {
void throw_unknown_root() { throw UnknownRoot("unknown positive root label"); }
}  // namespace detail

PositiveRoot parse_root(std::string_view name) {
  for (PositiveRoot root : kPositiveRoots) {
    if (root_name(root) == name) return root;
  }
  throw UnknownRoot("unknown positive root '" + std::string(name) + "'");
}

std::string_view root_name(PositiveRoot root) {
  switch (root) {
    case PositiveRoot::alpha1: return "alpha1";
    case PositiveRoot::alpha2: return "alpha2";
    case PositiveRoot::alpha1_plus_alpha2: return "alpha1+alpha2";
  }
  detail::throw_unknown_root();
  return {};
}

Rational pairing_ratio(PositiveRoot root, const Weight& w) {
  return pairing_ratio<Rational>(root, w.x1, w.x2);
}

WeightLine weight_line() {
  const Weight chi = weights::chi();
  const Weight sigma = weights::sigma();
  return {UniPoly{chi.x1, sigma.x1}, UniPoly{chi.x2, sigma.x2}};
}

UniPoly product_over_positive_roots() {
  const WeightLine line = weight_line();
  UniPoly product = UniPoly::constant(Rational(1));
  for (PositiveRoot root : kPositiveRoots) {
    product = product * pairing_ratio<UniPoly>(root, line.x1, line.x2);
  }
  return product;
}

UniPoly stated_P() { return UniPoly{Rational(0), Rational(-1), Rational(-3), Rational(-2)}.scaled(Rational(1, 2)); }

UniPoly stated_Q() { return UniPoly{Rational(1), Rational(0), Rational(-3)}.scaled(Rational(1, 2)); }

UniPoly build_P() {
  UniPoly built = product_over_positive_roots();
  const UniPoly stated = stated_P();
  if (built != stated) {
    throw ConsistencyFailure("product of pairing ratios " + built.str() + " differs from P(t) = " +
                             stated.str());
  }
  return built;
}

}  // namespace kstab
