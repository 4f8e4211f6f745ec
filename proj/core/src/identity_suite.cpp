#include "kstab/identity_suite.hpp"

#include <random>
#include <sstream>

#include "kstab/error.hpp"
#include "kstab/rootdata.hpp"

namespace kstab {

namespace {

template <class Poly>
CheckResult compare(std::string name, const Poly& computed, const Poly& expected) {
  CheckResult result{std::move(name), computed == expected, {}};
  result.detail = result.passed ? "exact match" : "residual (computed - displayed) = " + (computed - expected).str();
  return result;
}

mpz_class floor_of(const mpq_class& x) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

mpz_class ceil_of(const mpq_class& x) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

}  // namespace

std::vector<CheckResult> identity_checks(const Criterion& criterion) {
  std::vector<CheckResult> checks;
  checks.reserve(8);

  checks.push_back(compare("P(t) = product of positive-root pairing ratios on chi + t*sigma",
                           product_over_positive_roots(), criterion.P()));
  checks.push_back(compare("int_{-b}^{-a} P dt closed form", criterion.integral_P(), displayed::integral_P()));
  checks.push_back(compare("int_{-b}^{-a} tP dt closed form", criterion.integral_tP(), displayed::integral_tP()));
  checks.push_back(compare("P(-b)+P(-a)+2 int Q dt closed form", criterion.boundary_term(false),
                           displayed::boundary_term(false)));
  checks.push_back(compare("-bP(-b)-aP(-a)+2 int tQ dt closed form",
                           criterion.boundary_term(true, BoundaryConvention::as_written),
                           displayed::boundary_term(true)));
  checks.push_back(compare("C(a,1/2) factorization", substitute_b(criterion.C(), Rational(1, 2)),
                           displayed::C_on_b_half()));
  try {
    checks.push_back(compare("C/(b-a) restricted to b=a equals a^3(1-2a)(1-a)",
                             substitute_diagonal(criterion.C_tilde()), displayed::C_tilde_on_diagonal()));
  } catch (const NotDivisible& e) {
    checks.push_back({"C/(b-a) restricted to b=a equals a^3(1-2a)(1-a)", false, e.what()});
  }
  checks.push_back(compare("C(0,b) factorization", substitute_a(criterion.C(), Rational(0)),
                           displayed::C_on_a_zero()));
  return checks;
}

std::vector<Rational> sample_rationals(const Rational& lo, const Rational& hi, std::size_t count,
                                       std::uint64_t seed, bool include_hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> denominators(2, 1'000'000);
  std::vector<Rational> out;
  out.reserve(count);
  const std::size_t interior = include_hi && count > 0 ? count - 1 : count;
  while (out.size() < interior) {
    const long q = denominators(rng);
    const mpz_class p_min = floor_of(lo.mpq() * q) + 1;
    const mpz_class p_max = ceil_of(hi.mpq() * q) - 1;
    if (p_min > p_max) continue;
    const mpz_class span = p_max - p_min + 1;
    std::uniform_int_distribution<unsigned long> offset(0, span.get_ui() - 1);
    out.emplace_back(mpq_class(p_min + offset(rng), q));
  }
  if (include_hi && count > 0) out.push_back(hi);
  return out;
}

std::vector<CheckResult> inequality_chain_checks(const Criterion& criterion, std::size_t samples,
                                                 std::uint64_t seed) {
  std::vector<CheckResult> checks;

  {
    const UniPoly slice = substitute_b(criterion.C(), Rational(1, 2));
    const UniPoly middle = displayed::C_on_b_half_intermediate_bound();
    const UniPoly floor = displayed::C_on_b_half_floor();
    CheckResult r{"C(a,1/2) > (1-2a)^2(576a^6+1032a^3+524a^2+884a+249)/61440 > 249(1-2a)^2/61440 > 0",
                  true, {}};
    std::size_t checked = 0;
    for (const Rational& a : sample_rationals(Rational(0), Rational(1, 2), samples, seed)) {
      const Rational v = slice(a), m = middle(a), f = floor(a);
      if (!(v > m && m > f && f > Rational(0))) {
        r.passed = false;
        r.detail = "violated at a = " + a.str();
        break;
      }
      ++checked;
    }
    if (r.passed) r.detail = std::to_string(checked) + " rational samples in (0,1/2)";
    checks.push_back(std::move(r));
  }

  {
    const UniPoly slice = substitute_a(criterion.C(), Rational(0));
    const UniPoly floor = displayed::C_on_a_zero_floor();
    CheckResult r{"C(0,b) > b^4(1-b)(39/4)/80 > 0", true, {}};
    std::size_t checked = 0;
    for (const Rational& b : sample_rationals(Rational(0), Rational(1, 2), samples, seed + 1, true)) {
      const Rational v = slice(b), f = floor(b);
      if (!(v > f && f > Rational(0))) {
        r.passed = false;
        r.detail = "violated at b = " + b.str();
        break;
      }
      ++checked;
    }
    if (r.passed) r.detail = std::to_string(checked) + " rational samples in (0,1/2]";
    checks.push_back(std::move(r));
  }
  return checks;
}

}  // namespace kstab
