#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kummerlab/construction.hpp"
#include "kummerlab/kummer.hpp"

namespace kummerlab {

/// A certificate as written by the CLI and read back by `verify --cert`.
struct CertificateDocument {
  /// "construction" or "apssv".
  std::string kind;
  std::uint64_t K = 0;
  // construction only
  std::uint64_t M = 0;
  ExactRational C;
  ExactRational theta;
  BigInt t;
  std::vector<CheckRecord> records;
  bool verdict = false;
  // apssv only
  std::optional<std::uint64_t> first_violation;
  std::uint64_t argmax_k = 0;
};

/// Sorted-key JSON object for a construction certificate.
std::string construction_certificate_json(const Certificate& cert, const BigInt& t);

/// Sorted-key JSON object for an APSSV seed certificate.
std::string apssv_certificate_json(const FactoredNat& seed, const FLowerCertificate& cert);

/// Parses either certificate kind; ValidationError on malformed input.
CertificateDocument parse_certificate(std::string_view json);

}  // namespace kummerlab
