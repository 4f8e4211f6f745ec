#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/certify.hpp"

namespace kstab {

// On-disk certificate file: a JSON object with every number written as a
// canonical fraction string, so identical runs give identical bytes.
//
// {
//   "format": "kstab-positivity-certificate", "version": 1,
//   "delta": "1/10",                          (optional)
//   "certificates": [
//     { "polynomial_id": "C",
//       "region": [["1/10","1/5"], ["1/10","1/2"], ["2/5","1/2"]],
//       "degree": 8, "max_depth": 14, "depth_reached": 3,
//       "outcome": "Certified", "witness": null,
//       "leaves": [ { "path": "0", "vertices": [...], "status": "Positive",
//                     "coefficients": ["p/q", ...], "witness": null }, ... ] } ] }
struct CertificateFile {
  std::optional<Rational> delta;
  std::vector<PositivityCertificate> certificates;
};

std::string serialize(const CertificateFile& file);
// std::invalid_argument on malformed input.
CertificateFile parse_certificate_file(std::string_view text);

void write_certificate_file(const std::filesystem::path& path, const CertificateFile& file);
CertificateFile read_certificate_file(const std::filesystem::path& path);

}  // namespace kstab
