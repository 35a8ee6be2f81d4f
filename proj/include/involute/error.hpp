#pragma once

#include <stdexcept>
#include <string>

namespace involute {

// Malformed input: bad JSON, unknown names, mismatched scalar kinds,
// violated operation preconditions. The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A checked algebraic law failed with a concrete witness. Raised only by
// operations whose contract requires a law to hold on their input (plain
// law *checks* report failures instead of throwing). The CLI maps this to
// exit code 1.
struct law_violation : std::runtime_error {
  law_violation(const std::string& law, const std::string& witness)
      : std::runtime_error(law + ": " + witness),
        law_name(law),
        witness(witness) {}

  std::string law_name;
  std::string witness;
};

}  // namespace involute
