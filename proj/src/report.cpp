#include "sqw/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace sqw {

namespace {
constexpr std::size_t kKeptFailures = 20;
}

void VerificationReport::record(bool ok, const std::string& instance, const std::string& lhs,
                                const std::string& rhs) {
  ++instances;
  if (ok) return;
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back({instance, lhs, rhs});
}

void VerificationReport::merge(const VerificationReport& o) {
  trials += o.trials;
  instances += o.instances;
  failure_count += o.failure_count;
  for (const auto& f : o.failures)
    if (failures.size() < kKeptFailures) failures.push_back(f);
  max_deviation = std::max(max_deviation, o.max_deviation);
  for (const auto& [k, v] : o.extra) extra[k] = v;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["mode"] = mode;
  j["point"] = point;
  j["seed"] = seed;
  j["trials"] = trials;
  j["instances"] = instances;
  j["boundaries_checked"] = instances;
  j["failure_count"] = failure_count;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) j["failures"].push_back({{"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  if (mode == "numeric") {
    j["max_deviation"] = max_deviation;
    j["tolerance"] = tolerance;
  }
  j["skipped"] = skipped;
  if (!note.empty()) j["note"] = note;
  for (const auto& [k, v] : extra) j["extra"][k] = v;
  j["pass"] = passed();
  return j.dump(indent);
}

}  // namespace sqw
