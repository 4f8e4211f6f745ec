#include "kstab/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace kstab {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::str(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << variable;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = UniPoly::constant(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

Rational definite_integral(const UniPoly& p, const Rational& lower, const Rational& upper) {
  const UniPoly F = p.antiderivative();
  return F(upper) - F(lower);
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace kstab
