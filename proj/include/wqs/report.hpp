#pragma once

// Machine-readable verification reports. The hashable payload is {q, claims,
// overall}; generated_at is metadata outside the payload and the only field
// that may vary between identical runs.

#include <string>
#include <vector>

#include <json.hpp>

namespace wqs {
namespace report {

struct Claim {
  std::string id;        // stable across releases
  std::string anchor;    // statement the claim verifies
  bool status = false;   // pass / fail
  std::string observed;  // exact values serialized as strings
  std::string expected;
};

struct Report {
  int q = 0;
  std::vector<Claim> claims;
  bool overall = false;
  std::string generated_at;

  void finalize() {
    overall = true;
    for (const auto& c : claims) overall = overall && c.status;
  }
};

nlohmann::json payload_json(const Report& r);  // without generated_at
nlohmann::json to_json(const Report& r);
Report from_json(const nlohmann::json& j);

}  // namespace report
}  // namespace wqs
