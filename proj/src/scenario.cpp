#include "ryb/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ryb/error.hpp"

namespace ryb {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 3> kFactorKeys{"T", "K", "L"};
constexpr std::array<const char*, 2> kSectorKeys{"1", "2"};

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where + " must be a number");
  return j.get<double>();
}

template <std::size_t N>
std::array<double, N> numbers_at(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != N) {
    parse_fail(where + " must be an array of " + std::to_string(N) + " numbers");
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = number_at(j[i], where + "[" + std::to_string(i) + "]");
  return out;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(where + " is missing \"" + key + "\"");
  return obj.at(key);
}

AesSpec parse_sigma(const json& j) {
  AesSpec spec;
  if (j.is_string()) {
    spec.preset = j.get<std::string>();
    if (spec.preset != kCobbDouglasPreset) parse_fail("unknown sigma preset \"" + spec.preset + "\"");
    return spec;
  }
  if (!j.is_object()) parse_fail("sigma must be a preset name or an object keyed by sector");
  const bool full = member(j, kSectorKeys[0], "sigma").is_array();
  if (full) {
    std::array<Mat3, 2> m{};
    for (std::size_t s = 0; s < 2; ++s) {
      const json& rows = member(j, kSectorKeys[s], "sigma");
      if (!rows.is_array() || rows.size() != 3) parse_fail("sigma sector matrix must have 3 rows");
      for (std::size_t r = 0; r < 3; ++r) {
        m[s][r] = numbers_at<3>(rows[r], std::string("sigma.") + kSectorKeys[s]);
      }
    }
    spec.full = m;
  } else {
    std::array<CrossElasticities, 2> c{};
    for (std::size_t s = 0; s < 2; ++s) {
      const json& obj = member(j, kSectorKeys[s], "sigma");
      const std::string where = std::string("sigma.") + kSectorKeys[s];
      c[s].tk = number_at(member(obj, "TK", where), where + ".TK");
      c[s].tl = number_at(member(obj, "TL", where), where + ".TL");
      c[s].kl = number_at(member(obj, "KL", where), where + ".KL");
    }
    spec.cross = c;
  }
  return spec;
}

}  // namespace

std::array<CrossElasticities, 2> AesSpec::cross_elasticities() const {
  if (cross) return *cross;
  if (full) {
    std::array<CrossElasticities, 2> c{};
    for (std::size_t s = 0; s < 2; ++s) {
      c[s] = {(*full)[s][0][1], (*full)[s][0][2], (*full)[s][1][2]};
    }
    return c;
  }
  return {};
}

ShareTable Scenario::table() const { return build_share_table(theta, theta_sector); }

AesTensor Scenario::aes(const ShareTable& table) const {
  if (aes_spec.full) return AesTensor{*aes_spec.full};
  return complete_aes(aes_spec.cross_elasticities(), table);
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) parse_fail("scenario must be a JSON object");
  Scenario sc;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) parse_fail("name must be a string");
    sc.name = doc["name"].get<std::string>();
  }
  const json& theta = member(doc, "theta", "scenario");
  for (std::size_t i = 0; i < 3; ++i) {
    const auto row = numbers_at<2>(member(theta, kFactorKeys[i], "theta"),
                                   std::string("theta.") + kFactorKeys[i]);
    sc.theta[i] = row;
  }
  sc.theta_sector = numbers_at<2>(member(doc, "theta_sector", "scenario"), "theta_sector");
  sc.aes_spec = parse_sigma(member(doc, "sigma", "scenario"));
  if (doc.contains("shocks")) {
    const json& shocks = doc["shocks"];
    if (!shocks.is_array()) parse_fail("shocks must be an array");
    for (std::size_t k = 0; k < shocks.size(); ++k) {
      const std::string where = "shocks[" + std::to_string(k) + "]";
      const json& s = shocks[k];
      if (!s.is_object()) parse_fail(where + " must be an object");
      ShockVector v;
      if (s.contains("P")) v.price = number_at(s["P"], where + ".P");
      if (s.contains("V")) v.endowment = numbers_at<3>(s["V"], where + ".V");
      sc.shocks.push_back(v);
    }
  }
  return sc;
}

json scenario_to_json(const Scenario& sc) {
  json doc;
  doc["name"] = sc.name;
  json theta = json::object();
  for (std::size_t i = 0; i < 3; ++i) theta[kFactorKeys[i]] = {sc.theta[i][0], sc.theta[i][1]};
  doc["theta"] = theta;
  doc["theta_sector"] = {sc.theta_sector[0], sc.theta_sector[1]};
  if (!sc.aes_spec.preset.empty()) {
    doc["sigma"] = sc.aes_spec.preset;
  } else if (sc.aes_spec.full) {
    json sigma = json::object();
    for (std::size_t s = 0; s < 2; ++s) {
      json rows = json::array();
      for (const Vec3& r : (*sc.aes_spec.full)[s]) rows.push_back({r[0], r[1], r[2]});
      sigma[kSectorKeys[s]] = rows;
    }
    doc["sigma"] = sigma;
  } else {
    json sigma = json::object();
    const auto c = sc.aes_spec.cross_elasticities();
    for (std::size_t s = 0; s < 2; ++s) {
      sigma[kSectorKeys[s]] = {{"TK", c[s].tk}, {"TL", c[s].tl}, {"KL", c[s].kl}};
    }
    doc["sigma"] = sigma;
  }
  json shocks = json::array();
  for (const ShockVector& v : sc.shocks) {
    shocks.push_back({{"P", v.price}, {"V", {v.endowment[0], v.endowment[1], v.endowment[2]}}});
  }
  doc["shocks"] = shocks;
  return doc;
}

void validate_scenario(const Scenario& sc) {
  std::optional<ShareTable> table;
  try {
    table = sc.table();
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string("share table rejected: ") + e.what());
  }
  const RankingReport ranking = check_intensity_ranking(*table);
  if (!ranking.ok()) throw Error(ErrorCode::ValidationError, ranking.describe_failure());
  const ValidityReport validity = validate_aes(sc.aes(*table), *table);
  if (!validity.ok()) {
    throw Error(ErrorCode::ValidationError, "AES tensor rejected: " + validity.describe_failure());
  }
  for (const ShockVector& v : sc.shocks) {
    bool finite = std::isfinite(v.price);
    for (double x : v.endowment) finite = finite && std::isfinite(x);
    if (!finite) throw Error(ErrorCode::ValidationError, "shock entries must be finite");
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  Scenario sc = parse_scenario(doc);
  validate_scenario(sc);
  return sc;
}

}  // namespace ryb
