#include "wqs/report.hpp"

namespace wqs {
namespace report {

nlohmann::json payload_json(const Report& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"status", c.status ? "pass" : "fail"},
                      {"observed", c.observed},
                      {"expected", c.expected}});
  return nlohmann::json{{"q", r.q}, {"claims", claims}, {"overall", r.overall}};
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j = payload_json(r);
  j["generated_at"] = r.generated_at;
  return j;
}

Report from_json(const nlohmann::json& j) {
  Report r;
  r.q = j.at("q").get<int>();
  r.overall = j.at("overall").get<bool>();
  if (j.contains("generated_at")) r.generated_at = j.at("generated_at").get<std::string>();
  for (const auto& cj : j.at("claims")) {
    Claim c;
    c.id = cj.at("id").get<std::string>();
    c.anchor = cj.at("anchor").get<std::string>();
    c.status = cj.at("status").get<std::string>() == "pass";
    c.observed = cj.at("observed").get<std::string>();
    c.expected = cj.at("expected").get<std::string>();
    r.claims.push_back(std::move(c));
  }
  return r;
}

}  // namespace report
}  // namespace wqs
