#include "kstab/certificate_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kstab {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kFormat = "kstab-positivity-certificate";
constexpr int kVersion = 1;

json point_json(const Point& p) { return json::array({p.a.str(), p.b.str()}); }

json region_json(const TriangleRegion& r) {
  json out = json::array();
  for (const Point& p : r.vertices()) out.push_back(point_json(p));
  return out;
}

json optional_point_json(const std::optional<Point>& p) { return p ? point_json(*p) : json(nullptr); }

Rational rational_from(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a fraction string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a point [a, b], got " + j.dump());
  return {rational_from(j[0]), rational_from(j[1])};
}

std::optional<Point> optional_point_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return point_from(j);
}

TriangleRegion region_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected three vertices, got " + j.dump());
  return TriangleRegion(point_from(j[0]), point_from(j[1]), point_from(j[2]));
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return obj.at(key);
}

unsigned unsigned_from(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) throw std::invalid_argument(std::string("field '") + key + "' must be unsigned");
  return v.get<unsigned>();
}

std::string string_from(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

json certificate_json(const PositivityCertificate& cert) {
  json leaves = json::array();
  for (const LeafRecord& leaf : cert.leaves) {
    json coeffs = json::array();
    for (const Rational& c : leaf.coefficients) coeffs.push_back(c.str());
    leaves.push_back(json{{"path", leaf.path},
                          {"vertices", region_json(leaf.region)},
                          {"status", std::string(status_name(leaf.status))},
                          {"coefficients", std::move(coeffs)},
                          {"witness", optional_point_json(leaf.witness)}});
  }
  return json{{"polynomial_id", cert.polynomial_id},
              {"region", region_json(cert.region)},
              {"degree", cert.degree},
              {"max_depth", cert.max_depth},
              {"depth_reached", cert.depth_reached()},
              {"outcome", std::string(outcome_name(cert.outcome))},
              {"witness", optional_point_json(cert.witness)},
              {"leaves", std::move(leaves)}};
}

PositivityCertificate certificate_from(const json& j) {
  PositivityCertificate cert{string_from(j, "polynomial_id"),
                             region_from(field(j, "region")),
                             unsigned_from(j, "degree"),
                             unsigned_from(j, "max_depth"),
                             {},
                             parse_outcome(string_from(j, "outcome")),
                             optional_point_from(field(j, "witness"))};
  const json& leaves = field(j, "leaves");
  if (!leaves.is_array()) throw std::invalid_argument("'leaves' must be an array");
  for (const json& leaf : leaves) {
    std::vector<Rational> coeffs;
    const json& cs = field(leaf, "coefficients");
    if (!cs.is_array()) throw std::invalid_argument("'coefficients' must be an array");
    coeffs.reserve(cs.size());
    for (const json& c : cs) coeffs.push_back(rational_from(c));
    cert.leaves.push_back({string_from(leaf, "path"), region_from(field(leaf, "vertices")),
                           parse_status(string_from(leaf, "status")), std::move(coeffs),
                           optional_point_from(field(leaf, "witness"))});
  }
  return cert;
}

}  // namespace

std::string serialize(const CertificateFile& file) {
  json root{{"format", kFormat}, {"version", kVersion}};
  if (file.delta) root["delta"] = file.delta->str();
  json certs = json::array();
  for (const auto& cert : file.certificates) certs.push_back(certificate_json(cert));
  root["certificates"] = std::move(certs);
  return root.dump(1) + "\n";
}

CertificateFile parse_certificate_file(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (string_from(root, "format") != kFormat) throw std::invalid_argument("not a kstab certificate file");
  if (unsigned_from(root, "version") != kVersion) throw std::invalid_argument("unsupported certificate version");

  CertificateFile file;
  if (root.contains("delta")) file.delta = rational_from(root.at("delta"));
  const json& certs = field(root, "certificates");
  if (!certs.is_array()) throw std::invalid_argument("'certificates' must be an array");
  for (const json& c : certs) file.certificates.push_back(certificate_from(c));
  return file;
}

void write_certificate_file(const std::filesystem::path& path, const CertificateFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << serialize(file);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

CertificateFile read_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_certificate_file(buffer.str());
}

}  // namespace kstab
