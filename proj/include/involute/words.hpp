#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "involute/error.hpp"
#include "involute/report.hpp"
#include "involute/scalar.hpp"

namespace involute {

enum class Sign : std::uint8_t { plus, minus };

inline Sign negate(Sign s) {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

enum class WordMode { reversing, non_reversing };

std::string_view mode_name(WordMode m);
WordMode mode_by_name(std::string_view name);

// Declared finite symbol set. Words over different alphabets do not mix.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);  // deduped + sorted

  int size() const { return static_cast<int>(symbols_->size()); }
  const std::string& symbol(int i) const { return (*symbols_)[static_cast<size_t>(i)]; }
  int index(const std::string& symbol) const;  // input_error if unknown

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_ || *a.symbols_ == *b.symbols_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> symbols_;
};

// Element of the free involutive monoid on an alphabet: a list of signed
// symbols. The list itself is the normal form; there is no rewriting.
class SignedWord {
 public:
  using Letter = std::pair<Sign, int>;

  static SignedWord unit(Alphabet a) { return SignedWord(std::move(a), {}); }
  static SignedWord eta(const Alphabet& a, const std::string& symbol);
  static SignedWord of(Alphabet a, std::vector<Letter> letters);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  std::string text() const;  // "1" or "a * ~b * c"
  nlohmann::json to_json() const;
  static SignedWord from_json(const Alphabet& a, const nlohmann::json& j);

  friend bool operator==(const SignedWord& a, const SignedWord& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

 private:
  SignedWord(Alphabet a, std::vector<Letter> ls)
      : alphabet_(std::move(a)), letters_(std::move(ls)) {}

  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

SignedWord word_concat(const SignedWord& w1, const SignedWord& w2);

// Non-reversing: flip every sign in place. Reversing: flip every sign and
// reverse the list.
SignedWord word_involve(const SignedWord& w, WordMode mode);

// Expression grammar:  word ::= "1" | atom ("*" atom)*
//                      atom ::= ["~"] (identifier | "(" word ")")
// "~" binds tighter than "*"; "~(...)" involves the sub-word in `mode`.
// The alphabet is the set of identifiers occurring in the expression,
// unless a wider one is supplied. Parse errors carry the byte position.
SignedWord parse_word(const std::string& text, WordMode mode);
SignedWord parse_word(const std::string& text, WordMode mode,
                      const Alphabet& alphabet);

// An involutive monoid with elements of type E, as a runtime table of
// operations. `elements` nonempty marks the monoid enumerable.
template <class E>
struct InvolutiveMonoid {
  std::string name;
  WordMode mode = WordMode::non_reversing;
  bool commutative = false;  // commutative monoids satisfy both mode laws
  E unit;
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> involve;
  std::function<std::string(const E&)> show;
  std::vector<E> elements;
};

// The unique extension of f along insertion: a left-to-right fold that
// multiplies f(v) for positive letters and involve(f(v)) for negative ones.
// The empty word maps to the unit.
template <class E>
E word_extend(const std::map<std::string, E>& f, const InvolutiveMonoid<E>& m,
              const SignedWord& w) {
  E acc = m.unit;
  for (const auto& [sign, idx] : w.letters()) {
    const std::string& symbol = w.alphabet().symbol(idx);
    auto it = f.find(symbol);
    if (it == f.end())
      throw input_error("symbol '" + symbol + "' outside the map's domain");
    acc = m.mul(acc, sign == Sign::plus ? it->second : m.involve(it->second));
  }
  return acc;
}

// Hook for fault-injection tests: the broken evaluator ignores signs.
enum class ExtendVariant { standard, fault_ignore_sign };

// For every map f: alphabet -> m.elements, checks that the extension
// preserves unit, concatenation and involution on all words up to max_len,
// agrees with f on insertions, and is the only homomorphism doing so
// (derived values forced by the generators must coincide with the fold).
Report word_universal_check(const Alphabet& alphabet,
                            const InvolutiveMonoid<int>& m, WordMode mode,
                            int max_len,
                            ExtendVariant variant = ExtendVariant::standard);

// Shipped extension targets. Enumerable ones carry elements as indices
// 0..n-1 with table-backed operations.
InvolutiveMonoid<int> z2_group();           // {1, g}, involution = inverse
InvolutiveMonoid<int> gf9_mult_monoid();    // (GF(9), *, 1, conj)
InvolutiveMonoid<BigInt> int_add_monoid();  // (Z, +, 0, negation)

}  // namespace involute
