#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace involute {

// Outcome of one checked law on one instance. `checked` counts the tuples
// that were examined (exhaustive enumerations record the full count).
struct LawResult {
  std::string suite;
  std::string law;
  std::string instance;
  bool pass = true;
  std::string witness;  // empty on pass
  std::int64_t checked = 0;
};

class Report {
 public:
  Report() = default;

  void add(LawResult r) { results_.push_back(std::move(r)); }
  void merge(const Report& other);

  // Stable sort by (law, instance, witness); used at suite boundaries so
  // emitted reports are deterministic regardless of generation order.
  void sort_canonical();

  bool all_pass() const;
  const std::vector<LawResult>& results() const { return results_; }
  std::vector<LawResult>& results() { return results_; }

  // First failing result, or nullptr.
  const LawResult* first_failure() const;

  nlohmann::json to_json() const;  // array of objects
  std::string to_jsonl() const;    // one object per line
  std::string to_text() const;     // human-readable lines

 private:
  std::vector<LawResult> results_;
};

nlohmann::json law_result_to_json(const LawResult& r);

}  // namespace involute
