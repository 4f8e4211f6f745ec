#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

namespace kstab {

// Exponent pair (i, j) of the monomial a^i b^j.
struct Exponents {
  unsigned a = 0;
  unsigned b = 0;
  unsigned total() const { return a + b; }
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

// Sparse bivariate polynomial in (a, b) over Q. No zero coefficient is ever
// stored, so two BiPolys are equal iff their term maps are equal.
class BiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  BiPoly() = default;
  explicit BiPoly(TermMap terms);

  static BiPoly constant(const Rational& c);
  static BiPoly monomial(const Rational& c, unsigned i, unsigned j);
  static BiPoly var_a() { return monomial(Rational(1), 1, 0); }
  static BiPoly var_b() { return monomial(Rational(1), 0, 1); }
  // Lifts p(x) to p(a) resp. p(b).
  static BiPoly in_a(const UniPoly& p);
  static BiPoly in_b(const UniPoly& p);

  const TermMap& terms() const { return terms_; }
  Rational coefficient(unsigned i, unsigned j) const;
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_a() const;
  int degree_b() const;

  Rational operator()(const Rational& a, const Rational& b) const;

  BiPoly scaled(const Rational& factor) const;
  BiPoly operator-() const { return scaled(Rational(-1)); }
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend BiPoly operator*(const BiPoly& f, const Rational& s) { return f.scaled(s); }
  friend BiPoly operator*(const Rational& s, const BiPoly& f) { return f.scaled(s); }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

// p(x) with x := expr.
BiPoly compose(const UniPoly& p, const BiPoly& expr);
// f(a, b) with a := a_expr, b := b_expr.
BiPoly compose(const BiPoly& f, const BiPoly& a_expr, const BiPoly& b_expr);

// Restrictions to lines, returned as polynomials in the remaining variable.
UniPoly substitute_b(const BiPoly& f, const Rational& b);  // in a
UniPoly substitute_a(const BiPoly& f, const Rational& a);  // in b
UniPoly substitute_diagonal(const BiPoly& f);              // b := a, in a

enum class IntegrandWeight { unit, linear };

// The polynomial in (a, b) equal to the integral of w(t) p(t) over [-b, -a],
// with w = 1 or w = t.
BiPoly symbolic_integral_ab(const UniPoly& p, IntegrandWeight weight);

// constant + a_coeff * a + b_coeff * b.
struct LinearFactor {
  Rational constant;
  Rational a_coeff;
  Rational b_coeff;

  static LinearFactor b_minus_a() { return {Rational(0), Rational(-1), Rational(1)}; }
  static LinearFactor a() { return {Rational(0), Rational(1), Rational(0)}; }
  static LinearFactor b() { return {Rational(0), Rational(0), Rational(1)}; }
  static LinearFactor one_minus_b() { return {Rational(1), Rational(0), Rational(-1)}; }
  static LinearFactor one_minus_2a() { return {Rational(1), Rational(-2), Rational(0)}; }
  static LinearFactor one_minus_2b() { return {Rational(1), Rational(0), Rational(-2)}; }

  BiPoly as_poly() const;
  std::string str() const { return "(" + as_poly().str() + ")"; }
};

// Exact quotient g with g * factor == f. Synthetic division in the variable
// the factor involves (b preferred), coefficients living in Q[other variable].
// Throws NotDivisible when the remainder is nonzero.
BiPoly divide_linear_factor(const BiPoly& f, const LinearFactor& factor);

std::ostream& operator<<(std::ostream& os, const BiPoly& f);

}  // namespace kstab
