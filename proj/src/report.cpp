#include "ramanujan/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramanujan {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kBoundExceeded: return "bound-exceeded";
  }
  return "fail";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "bound-exceeded") return Status::kBoundExceeded;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

Instance Instance::pass(int n, std::optional<int> k) {
  Instance i;
  i.n = n;
  i.k = k;
  return i;
}

Instance Instance::fail(int n, std::optional<int> k, nlohmann::json witness) {
  Instance i;
  i.n = n;
  i.k = k;
  i.status = Status::kFail;
  i.witness = std::move(witness);
  return i;
}

Instance Instance::bound_exceeded(int n, std::optional<int> k, std::string why) {
  Instance i;
  i.n = n;
  i.k = k;
  i.status = Status::kBoundExceeded;
  i.notes["reason"] = std::move(why);
  return i;
}

Status VerificationReport::overall() const {
  if (count(Status::kFail) > 0) return Status::kFail;
  if (count(Status::kBoundExceeded) > 0) return Status::kBoundExceeded;
  return Status::kPass;
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(), [s](const Instance& i) { return i.status == s; }));
}

void to_json(nlohmann::json& j, const Instance& i) {
  j = nlohmann::json{{"n", i.n}, {"status", to_string(i.status)}};
  j["k"] = i.k ? nlohmann::json(*i.k) : nlohmann::json(nullptr);
  j["witness"] = i.witness ? *i.witness : nlohmann::json(nullptr);
  if (!i.notes.empty()) j["notes"] = i.notes;
}

void from_json(const nlohmann::json& j, Instance& i) {
  i.n = j.at("n").get<int>();
  i.status = status_from_string(j.at("status").get<std::string>());
  i.k = j.contains("k") && !j["k"].is_null() ? std::optional<int>(j["k"].get<int>()) : std::nullopt;
  if (j.contains("witness") && !j["witness"].is_null()) {
    i.witness = j["witness"];
  } else {
    i.witness.reset();
  }
  i.notes = j.value("notes", nlohmann::json::object());
  if (i.status == Status::kFail && !i.witness) {
    throw std::invalid_argument("failed instance without a witness");
  }
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"identity", r.identity},
                     {"n_min", r.n_min},
                     {"n_max", r.n_max},
                     {"status", to_string(r.overall())},
                     {"instances", r.instances},
                     {"wall_ms", r.wall_ms}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  r.identity = j.at("identity").get<std::string>();
  r.n_min = j.at("n_min").get<int>();
  r.n_max = j.at("n_max").get<int>();
  r.instances = j.at("instances").get<std::vector<Instance>>();
  r.wall_ms = j.value("wall_ms", 0.0);
}

nlohmann::json poly_witness(const std::string& lhs, const std::string& rhs) {
  return nlohmann::json{{"lhs", lhs}, {"rhs", rhs}};
}

}  // namespace ramanujan
