#include "kstab/certify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "kstab/error.hpp"
#include "parallel.hpp"

namespace kstab {

namespace {

struct Cell {
  std::string path;
  TriangleRegion region;
  std::vector<Rational> net;
};

struct Classified {
  LeafStatus status = LeafStatus::inconclusive;
  std::optional<Point> witness;
  std::array<std::vector<Rational>, 4> children;
  bool split = false;
};

bool all_positive(const std::vector<Rational>& net) {
  return std::all_of(net.begin(), net.end(), [](const Rational& c) { return c.sign() > 0; });
}

// First of (v0, v1, v2, centroid) where f <= 0.
std::optional<Point> find_witness(const BiPoly& f, const TriangleRegion& region) {
  for (const Point& p : region.vertices()) {
    if (f(p.a, p.b).sign() <= 0) return p;
  }
  const Point c = region.centroid();
  if (f(c.a, c.b).sign() <= 0) return c;
  return std::nullopt;
}

unsigned certificate_degree(const BiPoly& f) { return static_cast<unsigned>(std::max(f.total_degree(), 0)); }

}  // namespace

std::string_view status_name(LeafStatus status) {
  switch (status) {
    case LeafStatus::positive: return "Positive";
    case LeafStatus::negative: return "Negative";
    case LeafStatus::inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::certified: return "Certified";
    case Outcome::refuted: return "Refuted";
    case Outcome::inconclusive: return "Inconclusive";
  }
  return "?";
}

LeafStatus parse_status(std::string_view name) {
  for (auto s : {LeafStatus::positive, LeafStatus::negative, LeafStatus::inconclusive}) {
    if (status_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown leaf status '" + std::string(name) + "'");
}

Outcome parse_outcome(std::string_view name) {
  for (auto o : {Outcome::certified, Outcome::refuted, Outcome::inconclusive}) {
    if (outcome_name(o) == name) return o;
  }
  throw std::invalid_argument("unknown outcome '" + std::string(name) + "'");
}

std::size_t PositivityCertificate::count(LeafStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(leaves.begin(), leaves.end(), [&](const LeafRecord& l) { return l.status == status; }));
}

unsigned PositivityCertificate::depth_reached() const {
  std::size_t depth = 0;
  for (const auto& leaf : leaves) depth = std::max(depth, leaf.path.size());
  return static_cast<unsigned>(depth);
}

PositivityCertificate certify_positive(const BiPoly& f, std::string polynomial_id, const TriangleRegion& region,
                                       unsigned max_depth, unsigned threads) {
  const unsigned degree = certificate_degree(f);
  PositivityCertificate cert{std::move(polynomial_id), region, degree, max_depth, {}, Outcome::inconclusive, {}};

  std::vector<Cell> frontier;
  frontier.push_back({"", region, bernstein_coefficients(f, region, degree)});

  for (unsigned depth = 0; !frontier.empty(); ++depth) {
    std::vector<Classified> results(frontier.size());
    detail::parallel_for(frontier.size(), threads, [&](std::size_t i) {
      const Cell& cell = frontier[i];
      Classified& r = results[i];
      if (all_positive(cell.net)) {
        r.status = LeafStatus::positive;
        return;
      }
      r.witness = find_witness(f, cell.region);
      if (r.witness) {
        r.status = LeafStatus::negative;
        return;
      }
      if (depth < max_depth) {
        r.children = subdivide_bernstein(cell.net, degree);
        r.split = true;
      }
    });

    const bool refuted = std::any_of(results.begin(), results.end(),
                                     [](const Classified& r) { return r.status == LeafStatus::negative; });
    std::vector<Cell> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      Cell& cell = frontier[i];
      Classified& r = results[i];
      if (r.split && !refuted) {
        const auto regions = cell.region.split();
        for (std::size_t c = 0; c < 4; ++c) {
          next.push_back({cell.path + static_cast<char>('0' + c), regions[c], std::move(r.children[c])});
        }
        continue;
      }
      cert.leaves.push_back({std::move(cell.path), std::move(cell.region), r.status, std::move(cell.net), r.witness});
    }
    frontier = std::move(next);
  }

  std::sort(cert.leaves.begin(), cert.leaves.end(),
            [](const LeafRecord& x, const LeafRecord& y) { return x.path < y.path; });
  const auto negative = std::find_if(cert.leaves.begin(), cert.leaves.end(),
                                     [](const LeafRecord& l) { return l.status == LeafStatus::negative; });
  if (negative != cert.leaves.end()) {
    cert.outcome = Outcome::refuted;
    cert.witness = negative->witness;
  } else if (cert.count(LeafStatus::positive) == cert.leaves.size()) {
    cert.outcome = Outcome::certified;
  }
  return cert;
}

TriangleRegion shrunken_triangle(const Rational& delta) {
  if (delta.sign() <= 0 || delta >= Rational(1, 4)) {
    throw DegenerateRegion("delta = " + delta.str() + " leaves no triangle (need 0 < delta < 1/4)");
  }
  const Rational half(1, 2);
  return TriangleRegion({delta, delta + delta}, {delta, half}, {half - delta, half});
}

TriangleRegion wall_region(const Rational& delta) {
  if (delta.sign() <= 0 || delta >= Rational(1, 4)) {
    throw DegenerateRegion("delta = " + delta.str() + " leaves no wall region (need 0 < delta < 1/4)");
  }
  const Rational top = Rational(1, 2) - delta;
  return TriangleRegion({delta, delta}, {delta, top}, {top, top});
}

BiPoly polynomial_for_id(std::string_view id, const Criterion& criterion) {
  if (id == "C") return criterion.C();
  if (id == "C_tilde") return criterion.C_tilde();
  throw std::invalid_argument("unknown polynomial id '" + std::string(id) + "'");
}

std::vector<LadderRung> certify_margin_ladder(std::span<const Rational> deltas, unsigned max_depth, unsigned threads,
                                              const Criterion& criterion) {
  for (const Rational& delta : deltas) {
    shrunken_triangle(delta);
    wall_region(delta);
  }
  const BiPoly& C = criterion.C();
  const BiPoly C_tilde = criterion.C_tilde();
  std::vector<LadderRung> rungs;
  rungs.reserve(deltas.size());
  for (const Rational& delta : deltas) {
    rungs.push_back({delta, certify_positive(C, "C", shrunken_triangle(delta), max_depth, threads),
                     certify_positive(C_tilde, "C_tilde", wall_region(delta), max_depth, threads)});
  }
  return rungs;
}

namespace {

// Checks that the leaf paths are exactly the leaves of a complete 4-ary tree.
void check_tiling(const std::set<std::string>& paths, const std::string& node, unsigned max_depth,
                  std::size_t& reached, std::vector<std::string>& problems) {
  if (paths.count(node)) {
    ++reached;
    return;
  }
  if (node.size() >= max_depth) {
    problems.push_back("subdivision incomplete below path '" + node + "'");
    return;
  }
  for (char c = '0'; c <= '3'; ++c) check_tiling(paths, node + c, max_depth, reached, problems);
}

}  // namespace

ReplayReport replay_certificate(const PositivityCertificate& cert, const BiPoly& f) {
  ReplayReport report;
  auto fail = [&](std::string problem) {
    report.valid = false;
    report.problems.push_back(std::move(problem));
  };

  if (static_cast<int>(cert.degree) < f.total_degree()) {
    fail("degree " + std::to_string(cert.degree) + " below total degree of " + cert.polynomial_id);
    return report;
  }

  std::set<std::string> paths;
  for (const auto& leaf : cert.leaves) {
    if (leaf.path.size() > cert.max_depth) fail("leaf '" + leaf.path + "' deeper than max_depth");
    if (leaf.path.find_first_not_of("0123") != std::string::npos) fail("malformed leaf path '" + leaf.path + "'");
    if (!paths.insert(leaf.path).second) fail("duplicate leaf path '" + leaf.path + "'");
  }
  if (!report.valid) return report;
  std::size_t reached = 0;
  check_tiling(paths, "", cert.max_depth, reached, report.problems);
  if (reached != paths.size()) report.problems.push_back("leaves nested inside other leaves");
  if (!report.problems.empty()) {
    report.valid = false;
    return report;
  }

  bool any_negative = false;
  bool all_pos = true;
  std::optional<Point> first_witness;
  for (const auto& leaf : cert.leaves) {
    TriangleRegion expected = cert.region;
    for (char c : leaf.path) expected = expected.child(static_cast<std::size_t>(c - '0'));
    if (!(expected == leaf.region)) {
      fail("leaf '" + leaf.path + "' region does not match its subdivision path");
      continue;
    }
    const std::vector<Rational> net = bernstein_coefficients(f, leaf.region, cert.degree);
    if (net != leaf.coefficients) {
      fail("leaf '" + leaf.path + "' stored Bernstein coefficients differ from recomputation");
      continue;
    }
    const bool positive = all_positive(net);
    switch (leaf.status) {
      case LeafStatus::positive:
        if (!positive) fail("leaf '" + leaf.path + "' marked Positive but has a non-positive coefficient");
        break;
      case LeafStatus::negative:
        if (!leaf.witness) {
          fail("leaf '" + leaf.path + "' marked Negative without witness");
        } else if (!leaf.region.contains(*leaf.witness)) {
          fail("leaf '" + leaf.path + "' witness lies outside the leaf");
        } else if (f(leaf.witness->a, leaf.witness->b).sign() > 0) {
          fail("leaf '" + leaf.path + "' witness has positive value");
        } else if (!first_witness) {
          first_witness = leaf.witness;
        }
        any_negative = true;
        break;
      case LeafStatus::inconclusive:
        if (positive) fail("leaf '" + leaf.path + "' marked Inconclusive but is Positive");
        break;
    }
    if (leaf.status != LeafStatus::positive) all_pos = false;
  }

  const Outcome expected = any_negative ? Outcome::refuted : (all_pos ? Outcome::certified : Outcome::inconclusive);
  if (cert.outcome != expected) {
    fail("outcome " + std::string(outcome_name(cert.outcome)) + " does not follow from leaves (expected " +
         std::string(outcome_name(expected)) + ")");
  }
  if (cert.outcome == Outcome::refuted && cert.witness != first_witness) {
    fail("certificate witness does not match the first negative leaf");
  }
  return report;
}

}  // namespace kstab
