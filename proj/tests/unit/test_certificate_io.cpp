#include <gtest/gtest.h>

#include "kstab/certificate_io.hpp"
#include "kstab/certify.hpp"
#include "kstab/criterion.hpp"
#include "temp_dir.hpp"

using kstab::CertificateFile;
using kstab::Rational;

namespace {

CertificateFile sample_file() {
  const Rational delta(1, 10);
  const auto& crit = kstab::standard_criterion();
  CertificateFile file;
  file.delta = delta;
  file.certificates.push_back(kstab::certify_positive(crit.C(), "C", kstab::shrunken_triangle(delta), 14));
  file.certificates.push_back(kstab::certify_positive(crit.C_tilde(), "C_tilde", kstab::wall_region(delta), 14));
  return file;
}

}  // namespace

TEST(CertificateIo, RoundTripIsByteStable) {
  const std::string text = kstab::serialize(sample_file());
  const CertificateFile parsed = kstab::parse_certificate_file(text);
  EXPECT_EQ(kstab::serialize(parsed), text);
  ASSERT_TRUE(parsed.delta.has_value());
  EXPECT_EQ(*parsed.delta, Rational(1, 10));
  ASSERT_EQ(parsed.certificates.size(), 2u);
  EXPECT_EQ(parsed.certificates[1].polynomial_id, "C_tilde");
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(CertificateIo, NumbersAreFractionStrings) {
  const std::string text = kstab::serialize(sample_file());
  EXPECT_NE(text.find("\"delta\": \"1/10\""), std::string::npos);
  EXPECT_NE(text.find("\"format\": \"kstab-positivity-certificate\""), std::string::npos);
  EXPECT_EQ(text.find('.'), std::string::npos);
}

TEST(CertificateIo, FileRoundTripReplays) {
  kstab::testing::TempDir dir;
  const CertificateFile file = sample_file();
  kstab::write_certificate_file(dir / "cert.json", file);
  const CertificateFile back = kstab::read_certificate_file(dir / "cert.json");
  for (const auto& cert : back.certificates) {
    EXPECT_TRUE(kstab::replay_certificate(cert, kstab::polynomial_for_id(cert.polynomial_id)).valid);
  }
}

TEST(CertificateIo, TamperedCoefficientFailsReplay) {
  std::string text = kstab::serialize(sample_file());
  const std::string key = "\"coefficients\": [\n";
  auto pos = text.find(key);
  ASSERT_NE(pos, std::string::npos);
  pos = text.find('"', pos + key.size());
  text.insert(pos + 1, "1");
  const CertificateFile tampered = kstab::parse_certificate_file(text);
  const auto& cert = tampered.certificates.front();
  EXPECT_FALSE(kstab::replay_certificate(cert, kstab::polynomial_for_id(cert.polynomial_id)).valid);
}

TEST(CertificateIo, MalformedInputIsRejected) {
  EXPECT_THROW(kstab::parse_certificate_file("not json"), std::invalid_argument);
  EXPECT_THROW(kstab::parse_certificate_file("{}"), std::invalid_argument);
  EXPECT_THROW(kstab::parse_certificate_file(R"({"format":"other","version":1,"certificates":[]})"),
               std::invalid_argument);
  std::string text = kstab::serialize(sample_file());
  const auto pos = text.find("\"1/10\"");
  text.replace(pos, 6, "\"1/0\"");
  EXPECT_THROW(kstab::parse_certificate_file(text), std::invalid_argument);
  EXPECT_THROW(kstab::read_certificate_file("/nonexistent/kstab/cert.json"), std::runtime_error);
}
