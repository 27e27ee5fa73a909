#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sqw {

struct Failure {
  std::string instance;
  std::string lhs, rhs;
};

// Outcome of one verification suite. Exact mode passes only on literal equality.
struct VerificationReport {
  std::string name;
  std::string mode = "exact";  // exact | numeric
  std::string point;           // parameter point descriptor
  std::uint64_t seed = 0;
  long trials = 0;
  long instances = 0;
  long failure_count = 0;
  std::vector<Failure> failures;  // first few only, failure_count has the total
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool skipped = false;
  std::string note;
  std::map<std::string, std::string> extra;

  bool passed() const { return !skipped && failure_count == 0 && instances > 0; }

  void record(bool ok, const std::string& instance, const std::string& lhs, const std::string& rhs);
  void merge(const VerificationReport& other);
  std::string to_json(int indent = 2) const;
};

}  // namespace sqw
