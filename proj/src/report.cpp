#include "lehmus/report.hpp"

namespace lehmus {

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = version;
  j["generator"] = generator;
  j["seed"] = seed;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) cfg[key] = value;
  j["config"] = cfg;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["check_id"] = c.check_id;
    r["anchor"] = c.anchor;
    r["pass"] = c.pass;
    if (c.residual.has_value()) {
      r["residual"] = *c.residual;
    } else {
      r["residual"] = nullptr;
    }
    if (c.tolerance.has_value()) {
      r["tolerance"] = *c.tolerance;
    } else {
      r["tolerance"] = nullptr;
    }
    if (c.exact.has_value()) {
      r["exact"] = *c.exact;
    } else {
      r["exact"] = nullptr;
    }
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [key, value] : c.inputs) in[key] = value;
    r["inputs"] = in;
    records.push_back(std::move(r));
  }
  j["checks"] = records;
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j;
}

std::string VerificationReport::to_json_string() const { return to_json().dump(2) + "\n"; }

}  // namespace lehmus
