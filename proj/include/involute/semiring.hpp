#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "involute/report.hpp"
#include "involute/rng.hpp"
#include "involute/scalar.hpp"

namespace involute {

// Handle for one of the shipped involutive commutative semirings. Cheap to
// copy; equality is by kind. Arithmetic lives on Scalar (add/mul/conj); the
// handle supplies constants, enumeration, sampling and JSON codecs.
class Semiring {
 public:
  static const Semiring& boolean();
  static const Semiring& rational();
  static const Semiring& gauss();
  static const Semiring& gf9();
  static const Semiring& by_name(std::string_view name);  // input_error
  static const std::vector<Semiring>& all();

  ScalarKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  Scalar zero() const { return zero_; }
  Scalar one() const { return one_; }

  bool enumerable() const { return elements_ != nullptr; }
  const std::vector<Scalar>& elements() const;  // input_error if not enumerable

  Scalar sample(Rng& rng) const;

  // Strict JSON codecs per the shipped encodings: bool as true/false,
  // rational as "p/q" string, gauss as {"re","im"} of rational strings,
  // gf9 as {"re":0..2,"im":0..2}.
  Scalar scalar_from_json(const nlohmann::json& j) const;

 private:
  Semiring(ScalarKind k, std::string name, Scalar zero, Scalar one,
           std::shared_ptr<const std::vector<Scalar>> elements)
      : kind_(k),
        name_(std::move(name)),
        zero_(std::move(zero)),
        one_(std::move(one)),
        elements_(std::move(elements)) {}

  ScalarKind kind_;
  std::string name_;
  Scalar zero_, one_;
  std::shared_ptr<const std::vector<Scalar>> elements_;
};

inline bool operator==(const Semiring& a, const Semiring& b) {
  return a.kind() == b.kind();
}
inline bool operator!=(const Semiring& a, const Semiring& b) {
  return !(a == b);
}

nlohmann::json scalar_to_json(const Scalar& s);

// Operation table used by the law checker. Built from a Semiring via of();
// tests substitute members to exercise deliberately broken instances.
struct SemiringModel {
  std::string name;
  Scalar zero, one;
  std::function<Scalar(const Scalar&, const Scalar&)> add, mul;
  std::function<Scalar(const Scalar&)> conj;
  std::vector<Scalar> elements;          // empty => not enumerable
  std::function<Scalar(Rng&)> sample;    // used when not enumerable

  static SemiringModel of(const Semiring& s);
};

// Checks every involutive-commutative-semiring law with exact comparisons:
// exhaustive over `elements` when enumerable, otherwise `sample_budget`
// seeded tuples per law. Failures become report entries with a witness.
Report law_check_involutive_semiring(const SemiringModel& m, int sample_budget,
                                     std::uint64_t seed);
Report law_check_involutive_semiring(const Semiring& s, int sample_budget,
                                     std::uint64_t seed);

}  // namespace involute
