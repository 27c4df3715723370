#include "kummerlab/io.hpp"

#include <json.hpp>

#include "kummerlab/csv.hpp"
#include "kummerlab/errors.hpp"

namespace kummerlab {

namespace {

using json = nlohmann::json;

json record_json(const CheckRecord& r) {
  json w = json::object();
  for (const auto& [key, value] : r.witness) w[key] = value;
  json j = {{"condition", r.condition}, {"level", r.level}, {"p", r.p},
            {"pass", r.pass},           {"witness", w}};
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  return j;
}

CheckRecord record_from(const json& j) {
  CheckRecord r;
  r.condition = j.at("condition").get<std::string>();
  r.p = j.at("p").get<std::uint64_t>();
  r.level = j.at("level").get<unsigned>();
  if (!j.at("k").is_null()) r.k = j.at("k").get<std::uint64_t>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& [key, value] : j.at("witness").items()) {
    r.witness.emplace(key, value.get<std::string>());
  }
  return r;
}

}  // namespace

std::string construction_certificate_json(const Certificate& cert, const BigInt& t) {
  json records = json::array();
  for (const CheckRecord& r : cert.records) records.push_back(record_json(r));
  json j = {{"kind", "construction"},
            {"M", cert.M},
            {"C", cert.C.to_string()},
            {"theta", cert.theta.to_string()},
            {"K", cert.K},
            {"t", to_decimal(t)},
            {"verdict", cert.verdict},
            {"log_n", fmt_real(cert.log_n)},
            {"min_margin", fmt_real(cert.min_margin)},
            {"argmin_k", cert.argmin_k},
            {"records", records}};
  return j.dump(2);
}

std::string apssv_certificate_json(const FactoredNat& seed, const FLowerCertificate& cert) {
  json log_u = json::array();
  for (long double v : cert.log_u_by_k) log_u.push_back(fmt_real(v));
  json j = {{"kind", "apssv"},
            {"K", cert.K},
            {"seed", to_decimal(seed.to_integer())},
            {"seed_factored", seed.to_string()},
            {"verdict", cert.passed},
            {"exact", cert.exact},
            {"log_n", fmt_real(cert.log_n)},
            {"argmax_k", cert.argmax_k},
            {"margin", fmt_real(cert.margin)},
            {"log_u_by_k", log_u}};
  j["first_violation"] = cert.first_violation ? json(*cert.first_violation) : json(nullptr);
  return j.dump(2);
}

CertificateDocument parse_certificate(std::string_view text) {
  CertificateDocument doc;
  try {
    const json j = json::parse(text);
    doc.kind = j.at("kind").get<std::string>();
    doc.K = j.at("K").get<std::uint64_t>();
    doc.verdict = j.at("verdict").get<bool>();
    if (doc.kind == "construction") {
      doc.M = j.at("M").get<std::uint64_t>();
      doc.C = ExactRational::parse(j.at("C").get<std::string>());
      doc.theta = ExactRational::parse(j.at("theta").get<std::string>());
      doc.t = parse_big(j.at("t").get<std::string>());
      for (const json& r : j.at("records")) doc.records.push_back(record_from(r));
    } else if (doc.kind == "apssv") {
      doc.argmax_k = j.at("argmax_k").get<std::uint64_t>();
      if (!j.at("first_violation").is_null()) {
        doc.first_violation = j.at("first_violation").get<std::uint64_t>();
      }
    } else {
      throw ValidationError("unknown certificate kind '" + doc.kind + "'");
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed certificate: ") + e.what());
  }
  return doc;
}

}  // namespace kummerlab
