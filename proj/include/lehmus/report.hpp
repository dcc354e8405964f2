#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lehmus {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One verified statement: what was checked, against which mathematical
/// fact, whether it held, and on which inputs.
struct CheckRecord {
  std::string check_id;
  std::string anchor;
  bool pass = false;
  /// Measured relative residual for floating-point checks; empty for
  /// exact-rational checks.
  std::optional<double> residual;
  /// The bound the residual was held to, where one applies.
  std::optional<double> tolerance;
  /// Set for exact checks: true iff both sides were equal as rationals.
  std::optional<bool> exact;
  /// Ordered input echo, e.g. {"a","4"},{"b","5"},{"c","6"}.
  std::vector<std::pair<std::string, std::string>> inputs;
};

struct VerificationReport {
  std::string version{kToolVersion};
  std::string generator = "none";
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckRecord> checks;

  void add(CheckRecord record) { checks.push_back(std::move(record)); }
  void merge(const VerificationReport& other);

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }

  nlohmann::ordered_json to_json() const;
  /// Deterministic: identical (seed, config, version) gives identical bytes.
  std::string to_json_string() const;
};

}  // namespace lehmus
