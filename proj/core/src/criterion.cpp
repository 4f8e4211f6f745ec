#include "kstab/criterion.hpp"

#include "kstab/error.hpp"
#include "kstab/rootdata.hpp"

namespace kstab {

namespace {

const BiPoly& A() {
  static const BiPoly a = BiPoly::var_a();
  return a;
}

const BiPoly& B() {
  static const BiPoly b = BiPoly::var_b();
  return b;
}

BiPoly c(long num, long den = 1) { return BiPoly::constant(Rational(num, den)); }

}  // namespace

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::k_stable: return "KStable";
    case Verdict::unstable: return "Unstable";
    case Verdict::boundary_zero: return "BoundaryZero";
  }
  return "?";
}

Verdict verdict_of(const Rational& value) {
  if (value.sign() > 0) return Verdict::k_stable;
  if (value.sign() < 0) return Verdict::unstable;
  return Verdict::boundary_zero;
}

Criterion::Criterion(UniPoly P, UniPoly Q, BoundaryConvention convention)
    : P_(std::move(P)),
      Q_(std::move(Q)),
      convention_(convention),
      integral_P_(symbolic_integral_ab(P_, IntegrandWeight::unit)),
      integral_tP_(symbolic_integral_ab(P_, IntegrandWeight::linear)) {
  C_ = integral_P_ * boundary_term(true) - integral_tP_ * boundary_term(false);
}

BiPoly Criterion::boundary_term(bool weighted) const { return boundary_term(weighted, convention_); }

BiPoly Criterion::boundary_term(bool weighted, BoundaryConvention convention) const {
  const BiPoly s_minus = -B();
  const BiPoly s_plus = -A();
  const BiPoly P_minus = compose(P_, s_minus);
  const BiPoly P_plus = compose(P_, s_plus);
  if (!weighted) {
    return P_minus + P_plus + symbolic_integral_ab(Q_, IntegrandWeight::unit).scaled(Rational(2));
  }
  BiPoly term = s_minus * P_minus + s_plus * P_plus +
                symbolic_integral_ab(Q_, IntegrandWeight::linear).scaled(Rational(2));
  if (convention == BoundaryConvention::displayed) term += s_minus * s_minus + s_plus * s_plus;
  return term;
}

BiPoly Criterion::C_tilde() const { return divide_linear_factor(C_, LinearFactor::b_minus_a()); }

CriterionReport Criterion::evaluate(const Rational& a, const Rational& b) const {
  CriterionReport report{a, b, C_(a, b)};
  report.verdict = verdict_of(report.value);
  return report;
}

const Criterion& standard_criterion() {
  static const Criterion instance(build_P(), stated_Q(), BoundaryConvention::displayed);
  return instance;
}

BiPoly checked_boundary_term(const Criterion& criterion, bool weighted) {
  BiPoly computed = criterion.boundary_term(weighted);
  const BiPoly expected = displayed::boundary_term(weighted);
  if (computed != expected) {
    throw ConsistencyFailure("boundary term " + computed.str() + " differs from closed form " +
                             expected.str() + " by " + (computed - expected).str());
  }
  return computed;
}

namespace displayed {

BiPoly integral_P() {
  const BiPoly& a = A();
  const BiPoly& b = B();
  return (pow(b, 4) - pow(a, 4) - c(2) * (pow(b, 3) - pow(a, 3)) + pow(b, 2) - pow(a, 2)) * Rational(1, 4);
}

BiPoly integral_tP() {
  const BiPoly& a = A();
  const BiPoly& b = B();
  return (c(-24) * (pow(b, 5) - pow(a, 5)) + c(45) * (pow(b, 4) - pow(a, 4)) -
          c(20) * (pow(b, 3) - pow(a, 3))) *
         Rational(1, 120);
}

BiPoly boundary_term(bool weighted) {
  const BiPoly& a = A();
  const BiPoly& b = B();
  if (!weighted) {
    return (c(4) * pow(a, 3) - c(3) * (pow(a, 2) + pow(b, 2)) + c(3) * b - a) * Rational(1, 2);
  }
  return (-pow(b, 4) - c(7) * pow(a, 4) + c(6) * (pow(b, 3) + pow(a, 3)) + c(4) * pow(a, 2)) *
         Rational(1, 4);
}

BiPoly C() { return integral_P() * boundary_term(true) - integral_tP() * boundary_term(false); }

UniPoly C_on_b_half() {
  const UniPoly one_minus_2a{Rational(1), Rational(-2)};
  const UniPoly sextic{249, 884, 524, 1888, -464, -2496, 576};
  return (pow(one_minus_2a, 2) * sextic).scaled(Rational(1, 61440));
}

UniPoly C_tilde_on_diagonal() {
  const UniPoly a = UniPoly::variable();
  return pow(a, 3) * UniPoly{Rational(1), Rational(-2)} * UniPoly{Rational(1), Rational(-1)};
}

UniPoly C_on_a_zero() {
  const UniPoly b = UniPoly::variable();
  const UniPoly cubic{20, -15, -11, 5};
  return (pow(b, 4) * UniPoly{Rational(1), Rational(-1)} * cubic).scaled(Rational(1, 80));
}

UniPoly C_on_b_half_intermediate_bound() {
  const UniPoly one_minus_2a{Rational(1), Rational(-2)};
  const UniPoly sextic{249, 884, 524, 1032, 0, 0, 576};
  return (pow(one_minus_2a, 2) * sextic).scaled(Rational(1, 61440));
}

UniPoly C_on_b_half_floor() {
  const UniPoly one_minus_2a{Rational(1), Rational(-2)};
  return pow(one_minus_2a, 2).scaled(Rational(249, 61440));
}

UniPoly C_on_a_zero_floor() {
  const UniPoly b = UniPoly::variable();
  return (pow(b, 4) * UniPoly{Rational(1), Rational(-1)}).scaled(Rational(39, 4) / Rational(80));
}

}  // namespace displayed

}  // namespace kstab
