#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ramanujan {

enum class Status { kPass, kFail, kBoundExceeded };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);  // throws std::invalid_argument

// One checked parameter point of an identity.
struct Instance {
  int n = 0;
  std::optional<int> k;
  Status status = Status::kPass;
  // Present whenever status is kFail: the two unequal sides or the
  // offending object.
  std::optional<nlohmann::json> witness;
  // Free-form extra observations (e.g. variants reported alongside).
  nlohmann::json notes = nlohmann::json::object();

  static Instance pass(int n, std::optional<int> k = std::nullopt);
  static Instance fail(int n, std::optional<int> k, nlohmann::json witness);
  static Instance bound_exceeded(int n, std::optional<int> k, std::string why);
};

struct VerificationReport {
  std::string identity;
  int n_min = 0;
  int n_max = 0;
  std::vector<Instance> instances;
  double wall_ms = 0.0;

  // kFail if any instance failed, else kBoundExceeded if any was skipped.
  Status overall() const;
  std::size_t count(Status s) const;
};

void to_json(nlohmann::json& j, const Instance& i);
void from_json(const nlohmann::json& j, Instance& i);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

// Equality witness for two polynomial sides.
nlohmann::json poly_witness(const std::string& lhs, const std::string& rhs);

}  // namespace ramanujan
