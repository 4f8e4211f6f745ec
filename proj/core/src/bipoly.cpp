#include "kstab/bipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "kstab/error.hpp"

namespace kstab {

namespace {

// Coefficients of f as a polynomial in the main variable (b if by_b, else a),
// each coefficient a UniPoly in the other variable.
std::vector<UniPoly> slices(const BiPoly& f, bool by_b) {
  const int n = by_b ? f.degree_b() : f.degree_a();
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(std::max(n + 1, 0)));
  for (const auto& [e, c] : f.terms()) {
    const unsigned main = by_b ? e.b : e.a;
    const unsigned other = by_b ? e.a : e.b;
    auto& row = raw[main];
    if (row.size() <= other) row.resize(other + 1);
    row[other] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

BiPoly unslice(const std::vector<UniPoly>& parts, bool by_b) {
  BiPoly::TermMap terms;
  for (std::size_t main = 0; main < parts.size(); ++main) {
    const auto& coeffs = parts[main].coefficients();
    for (std::size_t other = 0; other < coeffs.size(); ++other) {
      if (coeffs[other].is_zero()) continue;
      const auto m = static_cast<unsigned>(main);
      const auto o = static_cast<unsigned>(other);
      terms.emplace(by_b ? Exponents{o, m} : Exponents{m, o}, coeffs[other]);
    }
  }
  return BiPoly(std::move(terms));
}

}  // namespace

BiPoly::BiPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, unsigned i, unsigned j) {
  return BiPoly(TermMap{{Exponents{i, j}, c}});
}

BiPoly BiPoly::in_a(const UniPoly& p) {
  TermMap terms;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) terms.emplace(Exponents{static_cast<unsigned>(i), 0}, c[i]);
  return BiPoly(std::move(terms));
}

BiPoly BiPoly::in_b(const UniPoly& p) {
  TermMap terms;
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) terms.emplace(Exponents{0, static_cast<unsigned>(j)}, c[j]);
  return BiPoly(std::move(terms));
}

Rational BiPoly::coefficient(unsigned i, unsigned j) const {
  const auto it = terms_.find(Exponents{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.total()));
  return d;
}

int BiPoly::degree_a() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.a));
  return d;
}

int BiPoly::degree_b() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.b));
  return d;
}

Rational BiPoly::operator()(const Rational& a, const Rational& b) const {
  if (terms_.empty()) return Rational(0);
  std::vector<Rational> apow(static_cast<std::size_t>(degree_a() + 1));
  std::vector<Rational> bpow(static_cast<std::size_t>(degree_b() + 1));
  apow[0] = Rational(1);
  bpow[0] = Rational(1);
  for (std::size_t i = 1; i < apow.size(); ++i) apow[i] = apow[i - 1] * a;
  for (std::size_t j = 1; j < bpow.size(); ++j) bpow[j] = bpow[j - 1] * b;
  Rational acc;
  for (const auto& [e, c] : terms_) acc += c * apow[e.a] * bpow[e.b];
  return acc;
}

BiPoly BiPoly::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c *= factor;
  return out;
}

void BiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      out.add_term(Exponents{e1.a + e2.a, e1.b + e2.b}, c1 * c2);
    }
  }
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then by a-exponent.
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first.total() != y.first.total()) return x.first.total() > y.first.total();
    return x.first.a > y.first.a;
  });
  for (const auto& [e, c] : sorted) {
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (e.a > 0) mono += e.a == 1 ? "a" : "a^" + std::to_string(e.a);
    if (e.b > 0) {
      if (!mono.empty()) mono += "*";
      mono += e.b == 1 ? "b" : "b^" + std::to_string(e.b);
    }
    if (mono.empty()) {
      os << mag;
    } else if (mag == Rational(1)) {
      os << mono;
    } else {
      os << mag << "*" << mono;
    }
  }
  return os.str();
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result = BiPoly::constant(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

BiPoly compose(const UniPoly& p, const BiPoly& expr) {
  BiPoly acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * expr;
    acc += BiPoly::constant(*it);
  }
  return acc;
}

BiPoly compose(const BiPoly& f, const BiPoly& a_expr, const BiPoly& b_expr) {
  // Horner in a over coefficients that are polynomials in b.
  const std::vector<UniPoly> by_a = slices(f, /*by_b=*/false);
  BiPoly acc;
  for (auto it = by_a.rbegin(); it != by_a.rend(); ++it) {
    acc = acc * a_expr;
    acc += compose(*it, b_expr);
  }
  return acc;
}

UniPoly substitute_b(const BiPoly& f, const Rational& b) {
  std::vector<UniPoly> parts = slices(f, /*by_b=*/false);
  std::vector<Rational> out(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) out[i] = parts[i](b);
  return UniPoly(std::move(out));
}

UniPoly substitute_a(const BiPoly& f, const Rational& a) {
  std::vector<UniPoly> parts = slices(f, /*by_b=*/true);
  std::vector<Rational> out(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) out[j] = parts[j](a);
  return UniPoly(std::move(out));
}

UniPoly substitute_diagonal(const BiPoly& f) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(f.total_degree() + 1, 0)));
  for (const auto& [e, c] : f.terms()) out[e.total()] += c;
  return UniPoly(std::move(out));
}

BiPoly symbolic_integral_ab(const UniPoly& p, IntegrandWeight weight) {
  const UniPoly integrand = weight == IntegrandWeight::linear ? p * UniPoly::variable() : p;
  const UniPoly F = integrand.antiderivative();
  return compose(F, -BiPoly::var_a()) - compose(F, -BiPoly::var_b());
}

BiPoly LinearFactor::as_poly() const {
  return BiPoly::constant(constant) + BiPoly::var_a().scaled(a_coeff) + BiPoly::var_b().scaled(b_coeff);
}

BiPoly divide_linear_factor(const BiPoly& f, const LinearFactor& factor) {
  const bool by_b = !factor.b_coeff.is_zero();
  const Rational& lead = by_b ? factor.b_coeff : factor.a_coeff;
  const Rational& other = by_b ? factor.a_coeff : factor.b_coeff;

  if (lead.is_zero()) {
    if (factor.constant.is_zero()) throw std::invalid_argument("divide_linear_factor: zero factor");
    return f.scaled(Rational(1) / factor.constant);
  }
  if (f.is_zero()) return {};

  // factor = lead * (x - root) with root linear in the other variable.
  const UniPoly root = UniPoly{-factor.constant / lead, -other / lead};
  const std::vector<UniPoly> g = slices(f, by_b);
  const std::size_t n = g.size() - 1;

  std::vector<UniPoly> q(n);
  UniPoly carry;
  for (std::size_t k = n; k-- > 0;) {
    carry = g[k + 1] + root * carry;
    q[k] = carry;
  }
  const UniPoly remainder = g[0] + root * carry;
  if (!remainder.is_zero()) {
    const BiPoly rem = by_b ? BiPoly::in_a(remainder) : BiPoly::in_b(remainder);
    throw NotDivisible(factor.str(), rem.str());
  }
  return unslice(q, by_b).scaled(Rational(1) / lead);
}

std::ostream& operator<<(std::ostream& os, const BiPoly& f) { return os << f.str(); }

}  // namespace kstab
