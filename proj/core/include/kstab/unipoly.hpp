#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// Dense univariate polynomial over Q. coefficients()[i] multiplies t^i and
// the last stored coefficient is never zero; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients)
      : UniPoly(std::vector<Rational>(coefficients)) {}

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  static UniPoly variable() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& t) const;

  UniPoly derivative() const;
  // Antiderivative with zero constant term.
  UniPoly antiderivative() const;
  UniPoly scaled(const Rational& factor) const;

  UniPoly operator-() const { return scaled(Rational(-1)); }
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(const UniPoly& p, const Rational& s) { return p.scaled(s); }
  friend UniPoly operator*(const Rational& s, const UniPoly& p) { return p.scaled(s); }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string str(char variable = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

// Exact value of the integral of p over [lower, upper].
Rational definite_integral(const UniPoly& p, const Rational& lower, const Rational& upper);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace kstab
