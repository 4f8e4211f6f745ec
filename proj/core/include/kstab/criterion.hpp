#pragma once

#include <string_view>

#include "kstab/bipoly.hpp"
#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

namespace kstab {

enum class Verdict { k_stable, unstable, boundary_zero };

std::string_view verdict_name(Verdict verdict);
Verdict verdict_of(const Rational& value);

struct CriterionReport {
  Rational a;
  Rational b;
  Rational value;
  Verdict verdict = Verdict::boundary_zero;
};

// How the weighted boundary term is assembled from P and Q on [s-, s+] =
// [-b, -a].
//
//   as_written: s- P(s-) + s+ P(s+) + 2 int t Q
//   displayed:  as_written + s-^2 + s+^2
//
// Only `displayed` reproduces the published closed form
// (-b^4 - 7a^4 + 6(b^3 + a^3) + 4a^2)/4 and the three boundary
// factorizations derived from it; `as_written` is kept so the discrepancy
// stays visible (it differs by exactly a^2 + b^2).
enum class BoundaryConvention { displayed, as_written };

// The stability quantity
//   C(a,b) = (int P)(weighted boundary) - (int tP)(unweighted boundary)
// with integrals over [-b, -a]. Immutable; C is expanded once on construction.
class Criterion {
 public:
  Criterion(UniPoly P, UniPoly Q, BoundaryConvention convention = BoundaryConvention::displayed);

  const UniPoly& P() const { return P_; }
  const UniPoly& Q() const { return Q_; }
  BoundaryConvention convention() const { return convention_; }

  const BiPoly& integral_P() const { return integral_P_; }
  const BiPoly& integral_tP() const { return integral_tP_; }

  // weighted = false: P(-b) + P(-a) + 2 int Q.
  // weighted = true:  per convention(), see BoundaryConvention.
  BiPoly boundary_term(bool weighted) const;
  BiPoly boundary_term(bool weighted, BoundaryConvention convention) const;

  const BiPoly& C() const { return C_; }

  // C / (b - a); throws NotDivisible if (b - a) does not divide C.
  BiPoly C_tilde() const;

  CriterionReport evaluate(const Rational& a, const Rational& b) const;

 private:
  UniPoly P_;
  UniPoly Q_;
  BoundaryConvention convention_;
  BiPoly integral_P_;
  BiPoly integral_tP_;
  BiPoly C_;
};

// P = build_P(), Q = stated_Q(), displayed convention. Constructed once
// (thread-safe); construction runs the P consistency check.
const Criterion& standard_criterion();

// Same as criterion.boundary_term(weighted) but throws ConsistencyFailure when
// it differs from the published closed form.
BiPoly checked_boundary_term(const Criterion& criterion, bool weighted);

// The published closed forms, built directly from their displayed shape.
namespace displayed {
BiPoly integral_P();
BiPoly integral_tP();
BiPoly boundary_term(bool weighted);
// C assembled from the four closed forms above.
BiPoly C();
// (1-2a)^2 (576a^6 - 2496a^5 - 464a^4 + 1888a^3 + 524a^2 + 884a + 249)/61440
UniPoly C_on_b_half();
// a^3 (1-2a)(1-a)
UniPoly C_tilde_on_diagonal();
// b^4 (1-b)(5b^3 - 11b^2 - 15b + 20)/80
UniPoly C_on_a_zero();
// (1-2a)^2 (576a^6 + 1032a^3 + 524a^2 + 884a + 249)/61440
UniPoly C_on_b_half_intermediate_bound();
// 249 (1-2a)^2 / 61440
UniPoly C_on_b_half_floor();
// b^4 (1-b) (39/4) / 80
UniPoly C_on_a_zero_floor();
}  // namespace displayed

}  // namespace kstab
