#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "kstab/certificate_io.hpp"
#include "kstab/error.hpp"
#include "kstab/identity_suite.hpp"

namespace kstab::cli {

namespace {

std::string approx(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value.to_double());
  return buf;
}

std::string point_str(const Point& p) { return "(" + p.a.str() + ", " + p.b.str() + ")"; }

std::string region_str(const TriangleRegion& r) {
  return "[" + point_str(r[0]) + ", " + point_str(r[1]) + ", " + point_str(r[2]) + "]";
}

std::vector<std::pair<Exponents, Rational>> sorted_terms(const BiPoly& f) {
  std::vector<std::pair<Exponents, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first.total() != y.first.total()) return x.first.total() < y.first.total();
    return x.first.a < y.first.a;
  });
  return terms;
}

// Writes via a temporary string so a failing path leaves nothing half-written.
bool write_file(const std::filesystem::path& path, const std::string& content, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path.string() << "' for writing\n";
    return false;
  }
  file << content;
  if (!file) {
    err << "error: failed writing '" << path.string() << "'\n";
    return false;
  }
  return true;
}

void print_certificate_summary(std::ostream& out, const PositivityCertificate& cert) {
  out << cert.polynomial_id << " on " << region_str(cert.region) << ": " << outcome_name(cert.outcome) << "\n"
      << "  leaves " << cert.leaves.size() << " (positive " << cert.count(LeafStatus::positive) << ", negative "
      << cert.count(LeafStatus::negative) << ", inconclusive " << cert.count(LeafStatus::inconclusive)
      << "), depth reached " << cert.depth_reached() << " of " << cert.max_depth << "\n";
  if (cert.witness) out << "  witness " << point_str(*cert.witness) << "\n";
}

}  // namespace

int verify_identities(std::ostream& out, const Criterion& criterion) {
  const auto identities = identity_checks(criterion);
  const auto chains = inequality_chain_checks(criterion);
  std::size_t passed_identities = 0, passed_chains = 0;
  for (std::size_t i = 0; i < identities.size(); ++i) {
    const auto& c = identities[i];
    passed_identities += c.passed;
    out << "IDENTITY " << i + 1 << "/" << identities.size() << " " << (c.passed ? "PASS" : "FAIL") << "  " << c.name
        << "  [" << c.detail << "]\n";
  }
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& c = chains[i];
    passed_chains += c.passed;
    out << "CHAIN " << i + 1 << "/" << chains.size() << " " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  ["
        << c.detail << "]\n";
  }
  out << "summary: " << passed_identities << "/" << identities.size() << " identities, " << passed_chains << "/"
      << chains.size() << " inequality chains\n";
  return passed_identities == identities.size() && passed_chains == chains.size() ? kSuccess : kNegative;
}

int check(std::ostream& out, std::ostream& err, const BundleParams& p, bool with_approx) {
  out << "bundle      D(" << p.a << "," << p.b << "," << p.c << ") = -a*E + b*diamond + c*heart\n";
  const bool ample = is_ample(p);
  out << "ample       " << (ample ? "yes" : "no (need 0 < a < min(b, c))") << "\n";
  try {
    const NormalizedClass n = normalize(p);
    out << "normalized  (a, b) = (" << n.a << ", " << n.b << ")\n";
  } catch (const DegenerateScaling&) {
    out << "normalized  undefined (b + c <= 0)\n";
  }
  try {
    const MomentSegment m = moment_polytope(p);
    out << "moment      " << m.base.x2 << "*w2 + [" << m.lo << ", " << m.hi << "]*alpha2\n";
  } catch (const EmptyPolytope&) {
    out << "moment      empty\n";
  }
  if (!ample) {
    out << "verdict     NotAmple\n";
    return kNegative;
  }
  try {
    const CriterionReport report = kstability_verdict(p);
    out << "C(a,b)      " << report.value;
    if (with_approx) out << "  (approx " << approx(report.value) << ", non-authoritative)";
    out << "\nverdict     " << verdict_name(report.verdict) << "\n";
    return report.verdict == Verdict::k_stable ? kSuccess : kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  }
}

std::string scan_csv(const ScanResult& result, bool with_approx) {
  std::string csv = with_approx ? "a,b,C,C_approx\n" : "a,b,C\n";
  for (const auto& p : result.points) {
    csv += p.a.str() + "," + p.b.str() + "," + p.value.str();
    if (with_approx) csv += "," + approx(p.value);
    csv += "\n";
  }
  return csv;
}

int scan(std::ostream& out, std::ostream& err, unsigned n, const std::filesystem::path& csv_path, bool with_approx,
         unsigned threads) {
  if (n < 2) {
    err << "error: scan needs n >= 2\n";
    return kUsage;
  }
  const ScanResult result = scan_grid(n, threads);
  if (!write_file(csv_path, scan_csv(result, with_approx), err)) return kUsage;
  const ScanPoint& m = result.minimum();
  out << "points      " << result.points.size() << "\n"
      << "minimum C   " << m.value;
  if (with_approx) out << "  (approx " << approx(m.value) << ")";
  out << "\nargmin      (a, b) = (" << m.a << ", " << m.b << ")\n"
      << "written     " << csv_path.string() << "\n";
  return m.value.sign() > 0 ? kSuccess : kNegative;
}

int certify(std::ostream& out, std::ostream& err, const Rational& delta, unsigned max_depth,
            const std::filesystem::path& path, unsigned threads) {
  std::vector<LadderRung> rungs;
  try {
    const Rational deltas[] = {delta};
    rungs = certify_margin_ladder(deltas, max_depth, threads);
  } catch (const DegenerateRegion& e) {
    err << "error: DegenerateRegion: " << e.what() << "\n";
    return kUsage;
  }
  const LadderRung& rung = rungs.front();
  CertificateFile file{delta, {rung.interior, rung.wall}};
  if (!write_file(path, serialize(file), err)) return kUsage;
  out << "delta " << delta << ", max depth " << max_depth << "\n";
  print_certificate_summary(out, rung.interior);
  print_certificate_summary(out, rung.wall);
  out << "written " << path.string() << "\n";
  return rung.certified() ? kSuccess : kNegative;
}

int replay(std::ostream& out, std::ostream& err, const std::filesystem::path& path) {
  CertificateFile file;
  try {
    file = read_certificate_file(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  bool ok = !file.certificates.empty();
  for (const auto& cert : file.certificates) {
    BiPoly f;
    try {
      f = polynomial_for_id(cert.polynomial_id);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    const ReplayReport report = replay_certificate(cert, f);
    out << cert.polynomial_id << " on " << region_str(cert.region) << ": " << outcome_name(cert.outcome) << ", "
        << cert.leaves.size() << " leaves, replay " << (report.valid ? "VALID" : "INVALID") << "\n";
    for (const auto& problem : report.problems) out << "  " << problem << "\n";
    ok = ok && report.valid && cert.outcome == Outcome::certified;
  }
  return ok ? kSuccess : kNegative;
}

std::string expansion_csv(const BiPoly& f) {
  std::string csv = "a_exponent,b_exponent,coefficient\n";
  for (const auto& [e, c] : sorted_terms(f)) {
    csv += std::to_string(e.a) + "," + std::to_string(e.b) + "," + c.str() + "\n";
  }
  return csv;
}

int expand(std::ostream& out, std::ostream& err, const std::optional<std::filesystem::path>& path) {
  const BiPoly& C = standard_criterion().C();
  const auto terms = sorted_terms(C);
  out << "C(a,b) has " << terms.size() << " terms, total degree " << C.total_degree() << "\n";
  for (const auto& [e, c] : terms) {
    out << "  deg " << e.total() << "  " << (c.sign() < 0 ? "- " : "+ ") << abs(c) << " * a^" << e.a << " * b^" << e.b
        << "\n";
  }
  if (path) {
    if (!write_file(*path, expansion_csv(C), err)) return kUsage;
    out << "written " << path->string() << "\n";
  }
  return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-stability checks for the blowup of P2 x P2 along the diagonal", "kstab"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the exact identity suite and inequality chains");

  auto* check_cmd = app.add_subcommand("check", "Ampleness, moment polytope and criterion for D(a,b,c)");
  std::int64_t a = 0, b = 0, c = 0;
  bool check_approx = false;
  check_cmd->add_option("a", a, "coefficient of -E")->required();
  check_cmd->add_option("b", b, "coefficient of the diamond color")->required();
  check_cmd->add_option("c", c, "coefficient of the heart color")->required();
  check_cmd->add_flag("--approx", check_approx, "also print a decimal approximation");

  auto* scan_cmd = app.add_subcommand("scan", "Exact C on the grid (i/2n, j/2n), 0 < i < j <= n");
  unsigned n = 0, scan_threads = 1;
  std::string scan_out;
  bool scan_approx = false;
  scan_cmd->add_option("n", n, "grid resolution")->required();
  scan_cmd->add_option("-o,--out", scan_out, "CSV output path")->required();
  scan_cmd->add_flag("--approx", scan_approx, "add a non-authoritative decimal column");
  scan_cmd->add_option("--threads", scan_threads, "worker threads")->check(CLI::Range(1u, 256u));

  auto* certify_cmd = app.add_subcommand("certify", "Bernstein positivity certificates on the delta-shrunken triangle");
  std::string delta_text, certify_out, replay_path;
  unsigned max_depth = 14, certify_threads = 1;
  certify_cmd->add_option("--delta", delta_text, "margin delta as p/q");
  certify_cmd->add_option("--max-depth", max_depth, "maximum subdivision depth");
  certify_cmd->add_option("-o,--out", certify_out, "certificate output path");
  certify_cmd->add_option("--threads", certify_threads, "worker threads")->check(CLI::Range(1u, 256u));
  certify_cmd->add_option("--replay", replay_path, "re-verify an existing certificate file instead");

  auto* expand_cmd = app.add_subcommand("expand", "Print the expanded C(a,b)");
  std::string expand_out;
  expand_cmd->add_option("-o,--out", expand_out, "also write the terms as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  if (*verify_cmd) return verify_identities(out);
  if (*check_cmd) return check(out, err, {a, b, c}, check_approx);
  if (*scan_cmd) return scan(out, err, n, scan_out, scan_approx, scan_threads);
  if (*expand_cmd) return expand(out, err, expand_out.empty() ? std::nullopt : std::optional<std::filesystem::path>(expand_out));
  if (*certify_cmd) {
    if (!replay_path.empty()) return replay(out, err, replay_path);
    if (delta_text.empty() || certify_out.empty()) {
      err << "error: certify needs --delta and --out (or --replay FILE)\n";
      return kUsage;
    }
    Rational delta;
    try {
      delta = Rational::parse(delta_text);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    return certify(out, err, delta, max_depth, certify_out, certify_threads);
  }
  return kUsage;
}

}  // namespace kstab::cli
