#include "involute/report.hpp"

#include <algorithm>
#include <sstream>

namespace involute {

void Report::merge(const Report& other) {
  results_.insert(results_.end(), other.results_.begin(),
                  other.results_.end());
}

void Report::sort_canonical() {
  std::stable_sort(results_.begin(), results_.end(),
                   [](const LawResult& a, const LawResult& b) {
                     if (a.law != b.law) return a.law < b.law;
                     if (a.instance != b.instance) return a.instance < b.instance;
                     return a.witness < b.witness;
                   });
}

bool Report::all_pass() const {
  return std::all_of(results_.begin(), results_.end(),
                     [](const LawResult& r) { return r.pass; });
}

const LawResult* Report::first_failure() const {
  for (const auto& r : results_)
    if (!r.pass) return &r;
  return nullptr;
}

nlohmann::json law_result_to_json(const LawResult& r) {
  nlohmann::json j{{"suite", r.suite},
                   {"law", r.law},
                   {"instance", r.instance},
                   {"verdict", r.pass ? "pass" : "fail"}};
  if (!r.pass) j["witness"] = r.witness;
  return j;
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results_) arr.push_back(law_result_to_json(r));
  return arr;
}

std::string Report::to_jsonl() const {
  std::ostringstream os;
  for (const auto& r : results_) os << law_result_to_json(r).dump() << "\n";
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : results_) {
    os << (r.pass ? "pass" : "FAIL") << "  " << r.suite << "/" << r.law
       << "  [" << r.instance << "]";
    if (!r.pass) os << "  witness: " << r.witness;
    os << "\n";
  }
  return os.str();
}

}  // namespace involute
