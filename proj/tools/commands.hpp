#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "kstab/amplecone.hpp"
#include "kstab/bipoly.hpp"
#include "kstab/certify.hpp"
#include "kstab/criterion.hpp"
#include "kstab/rational.hpp"

namespace kstab::cli {

// 0 success, 1 negative mathematical result, 2 usage error.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

int verify_identities(std::ostream& out, const Criterion& criterion = standard_criterion());
int check(std::ostream& out, std::ostream& err, const BundleParams& params, bool approx = false);
int scan(std::ostream& out, std::ostream& err, unsigned n, const std::filesystem::path& csv_path,
         bool approx = false, unsigned threads = 1);
int certify(std::ostream& out, std::ostream& err, const Rational& delta, unsigned max_depth,
            const std::filesystem::path& path, unsigned threads = 1);
int replay(std::ostream& out, std::ostream& err, const std::filesystem::path& path);
int expand(std::ostream& out, std::ostream& err, const std::optional<std::filesystem::path>& path);

// CSV with header "a,b,C" (plus "C_approx" when approx), LF line endings.
std::string scan_csv(const ScanResult& result, bool approx);
// Terms of f sorted by (total degree, a-exponent), one "i,j,coefficient" row each.
std::string expansion_csv(const BiPoly& f);

// Full command line: "kstab <subcommand> ...".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kstab::cli
