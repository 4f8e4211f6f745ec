#include "kstab/bernstein.hpp"

#include "kstab/error.hpp"

namespace kstab {

namespace {

const Rational kHalf(1, 2);

// One de Casteljau step: degree d net -> degree d-1 net at point u.
std::vector<Rational> casteljau_step(const std::vector<Rational>& net, unsigned d,
                                     const std::array<Rational, 3>& u) {
  std::vector<Rational> out(bernstein_size(d - 1));
  for (unsigned i = 0; i + 1 <= d; ++i) {
    for (unsigned j = 0; i + j + 1 <= d; ++j) {
      Rational& v = out[bernstein_index(d - 1, i, j)];
      if (!u[0].is_zero()) v += u[0] * net[bernstein_index(d, i + 1, j)];
      if (!u[1].is_zero()) v += u[1] * net[bernstein_index(d, i, j + 1)];
      if (!u[2].is_zero()) v += u[2] * net[bernstein_index(d, i, j)];
    }
  }
  return out;
}

// Net of the subtriangle with vertices w0, w1, w2 (parent barycentrics):
// entry (i,j,k) is the blossom at (w0^i, w1^j, w2^k).
std::vector<Rational> subsimplex(const std::vector<Rational>& net, unsigned n,
                                 const std::array<std::array<Rational, 3>, 3>& w) {
  std::vector<Rational> out(bernstein_size(n));
  std::vector<Rational> after_w2 = net;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) after_w2 = casteljau_step(after_w2, n - k + 1, w[2]);
    std::vector<Rational> after_w1 = after_w2;
    for (unsigned j = 0; j + k <= n; ++j) {
      if (j > 0) after_w1 = casteljau_step(after_w1, n - k - j + 1, w[1]);
      const unsigned i = n - k - j;
      out[bernstein_index(n, i, j)] = evaluate_bernstein(after_w1, i, w[0]);
    }
  }
  return out;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

}  // namespace

Point midpoint(const Point& p, const Point& q) { return {(p.a + q.a) * kHalf, (p.b + q.b) * kHalf}; }

TriangleRegion::TriangleRegion(Point v0, Point v1, Point v2) : vertices_{std::move(v0), std::move(v1), std::move(v2)} {
  if (doubled_signed_area().is_zero()) throw DegenerateRegion("triangle has zero area");
}

Rational TriangleRegion::doubled_signed_area() const {
  const auto& [p, q, r] = vertices_;
  return (q.a - p.a) * (r.b - p.b) - (r.a - p.a) * (q.b - p.b);
}

Rational TriangleRegion::area() const { return abs(doubled_signed_area()) * kHalf; }

Point TriangleRegion::centroid() const {
  const Rational third(1, 3);
  return {(vertices_[0].a + vertices_[1].a + vertices_[2].a) * third,
          (vertices_[0].b + vertices_[1].b + vertices_[2].b) * third};
}

bool TriangleRegion::contains(const Point& x) const {
  const auto side = [&](const Point& p, const Point& q) {
    return ((q.a - p.a) * (x.b - p.b) - (x.a - p.a) * (q.b - p.b)).sign();
  };
  const int orientation = doubled_signed_area().sign();
  return side(vertices_[0], vertices_[1]) * orientation >= 0 &&
         side(vertices_[1], vertices_[2]) * orientation >= 0 &&
         side(vertices_[2], vertices_[0]) * orientation >= 0;
}

std::array<TriangleRegion, 4> TriangleRegion::split() const {
  const auto& [v0, v1, v2] = vertices_;
  const Point m01 = midpoint(v0, v1);
  const Point m12 = midpoint(v1, v2);
  const Point m02 = midpoint(v0, v2);
  return {TriangleRegion(v0, m01, m02), TriangleRegion(m01, v1, m12), TriangleRegion(m02, m12, v2),
          TriangleRegion(m12, m02, m01)};
}

std::vector<Rational> bernstein_coefficients(const BiPoly& f, const TriangleRegion& region, unsigned degree) {
  if (f.total_degree() > static_cast<int>(degree)) {
    throw DegreeTooLow("Bernstein degree " + std::to_string(degree) + " below total degree " +
                       std::to_string(f.total_degree()));
  }
  // (a, b) = v0 + (v1 - v0) u + (v2 - v0) v, with u = lambda1, v = lambda2
  // stored in the a- and b-slots of a BiPoly.
  const auto& [v0, v1, v2] = region.vertices();
  const BiPoly u = BiPoly::var_a();
  const BiPoly v = BiPoly::var_b();
  const BiPoly a_expr = BiPoly::constant(v0.a) + u * (v1.a - v0.a) + v * (v2.a - v0.a);
  const BiPoly b_expr = BiPoly::constant(v0.b) + u * (v1.b - v0.b) + v * (v2.b - v0.b);
  const BiPoly g = compose(f, a_expr, b_expr);

  // b_(i,j,k) = sum over j' <= j, k' <= k of
  //   C(j,j') C(k,k') / (n! / (j'! k'! (n-j'-k')!)) * g_(j',k').
  const unsigned n = degree;
  const Rational n_fact = factorial(n);
  std::vector<Rational> net(bernstein_size(n));
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned k = 0; j + k <= n; ++k) {
      Rational acc;
      for (const auto& [e, coeff] : g.terms()) {
        if (e.a > j || e.b > k) continue;
        const Rational multinomial = n_fact / (factorial(e.a) * factorial(e.b) * factorial(n - e.a - e.b));
        acc += binomial(j, e.a) * binomial(k, e.b) / multinomial * coeff;
      }
      net[bernstein_index(n, n - j - k, j)] = acc;
    }
  }
  return net;
}

Rational evaluate_bernstein(const std::vector<Rational>& net, unsigned degree,
                            const std::array<Rational, 3>& barycentric) {
  std::vector<Rational> cur = net;
  for (unsigned d = degree; d > 0; --d) cur = casteljau_step(cur, d, barycentric);
  return cur.at(0);
}

std::array<std::vector<Rational>, 4> subdivide_bernstein(const std::vector<Rational>& net, unsigned degree) {
  using Bary = std::array<Rational, 3>;
  const Bary v0{1, 0, 0}, v1{0, 1, 0}, v2{0, 0, 1};
  const Bary m01{kHalf, kHalf, 0}, m12{0, kHalf, kHalf}, m02{kHalf, 0, kHalf};
  return {subsimplex(net, degree, {v0, m01, m02}), subsimplex(net, degree, {m01, v1, m12}),
          subsimplex(net, degree, {m02, m12, v2}), subsimplex(net, degree, {m12, m02, m01})};
}

}  // namespace kstab
