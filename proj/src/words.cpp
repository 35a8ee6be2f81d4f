#include "involute/words.hpp"

#include <algorithm>
#include <cctype>

namespace involute {

std::string_view mode_name(WordMode m) {
  return m == WordMode::reversing ? "reversing" : "non-reversing";
}

WordMode mode_by_name(std::string_view name) {
  if (name == "reversing") return WordMode::reversing;
  if (name == "non-reversing" || name == "nonreversing")
    return WordMode::non_reversing;
  throw input_error("unknown involution mode: '" + std::string(name) + "'");
}

Alphabet::Alphabet(std::vector<std::string> symbols) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  for (const auto& s : symbols)
    if (s.empty()) throw input_error("empty alphabet symbol");
  symbols_ = std::make_shared<const std::vector<std::string>>(
      std::move(symbols));
}

int Alphabet::index(const std::string& symbol) const {
  auto it = std::lower_bound(symbols_->begin(), symbols_->end(), symbol);
  if (it == symbols_->end() || *it != symbol)
    throw input_error("symbol '" + symbol + "' not in alphabet");
  return static_cast<int>(it - symbols_->begin());
}

SignedWord SignedWord::eta(const Alphabet& a, const std::string& symbol) {
  return SignedWord(a, {{Sign::plus, a.index(symbol)}});
}

SignedWord SignedWord::of(Alphabet a, std::vector<Letter> letters) {
  for (const auto& [sign, idx] : letters) {
    (void)sign;
    if (idx < 0 || idx >= a.size())
      throw input_error("letter index out of alphabet range");
  }
  return SignedWord(std::move(a), std::move(letters));
}

std::string SignedWord::text() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += " * ";
    if (letters_[i].first == Sign::minus) out += "~";
    out += alphabet_.symbol(letters_[i].second);
  }
  return out;
}

nlohmann::json SignedWord::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [sign, idx] : letters_)
    arr.push_back({sign == Sign::plus ? "+" : "-", alphabet_.symbol(idx)});
  return arr;
}

SignedWord SignedWord::from_json(const Alphabet& a, const nlohmann::json& j) {
  if (!j.is_array()) throw input_error("word JSON must be an array");
  std::vector<Letter> ls;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw input_error("word letter must be [sign, symbol]");
    std::string sign = entry[0].get<std::string>();
    if (sign != "+" && sign != "-")
      throw input_error("word letter sign must be \"+\" or \"-\"");
    ls.emplace_back(sign == "+" ? Sign::plus : Sign::minus,
                    a.index(entry[1].get<std::string>()));
  }
  return SignedWord::of(a, std::move(ls));
}

SignedWord word_concat(const SignedWord& w1, const SignedWord& w2) {
  if (!(w1.alphabet() == w2.alphabet()))
    throw input_error("cannot concatenate words over different alphabets");
  std::vector<SignedWord::Letter> ls = w1.letters();
  ls.insert(ls.end(), w2.letters().begin(), w2.letters().end());
  return SignedWord::of(w1.alphabet(), std::move(ls));
}

SignedWord word_involve(const SignedWord& w, WordMode mode) {
  std::vector<SignedWord::Letter> ls = w.letters();
  for (auto& [sign, idx] : ls) {
    (void)idx;
    sign = negate(sign);
  }
  if (mode == WordMode::reversing) std::reverse(ls.begin(), ls.end());
  return SignedWord::of(w.alphabet(), std::move(ls));
}

namespace {

struct Parser {
  const std::string& src;
  size_t pos = 0;
  WordMode mode;
  const Alphabet& alphabet;

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error("parse error at position " + std::to_string(pos) +
                      ": " + msg);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    skip_ws();
    if (pos >= src.size() || !ident_start(src[pos])) fail("expected identifier");
    size_t start = pos;
    while (pos < src.size() && ident_char(src[pos])) ++pos;
    return src.substr(start, pos - start);
  }

  SignedWord atom() {
    skip_ws();
    bool involve = eat('~');
    skip_ws();
    SignedWord w = SignedWord::unit(alphabet);
    if (eat('(')) {
      w = word();
      if (!eat(')')) fail("expected ')'");
    } else {
      w = SignedWord::eta(alphabet, identifier());
    }
    return involve ? word_involve(w, mode) : w;
  }

  SignedWord word() {
    skip_ws();
    // "1" denotes the empty word when it stands alone as a factor
    if (pos < src.size() && src[pos] == '1') {
      ++pos;
      SignedWord w = SignedWord::unit(alphabet);
      while (eat('*')) w = word_concat(w, atom());
      return w;
    }
    SignedWord w = atom();
    while (eat('*')) w = word_concat(w, atom());
    return w;
  }

  SignedWord parse() {
    SignedWord w = word();
    skip_ws();
    if (pos != src.size()) fail("unexpected trailing input");
    return w;
  }
};

// First pass: collect identifiers so the alphabet covers the expression.
std::vector<std::string> collect_identifiers(const std::string& text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (Parser::ident_start(c)) {
      size_t start = i;
      while (i < text.size() && Parser::ident_char(text[i])) ++i;
      out.push_back(text.substr(start, i - start));
    } else if (c == '~' || c == '*' || c == '(' || c == ')' || c == '1' ||
               std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw input_error("parse error at position " + std::to_string(i) +
                        ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

}  // namespace

SignedWord parse_word(const std::string& text, WordMode mode,
                      const Alphabet& alphabet) {
  Parser p{text, 0, mode, alphabet};
  return p.parse();
}

SignedWord parse_word(const std::string& text, WordMode mode) {
  Alphabet a(collect_identifiers(text));
  return parse_word(text, mode, a);
}

InvolutiveMonoid<int> z2_group() {
  InvolutiveMonoid<int> m;
  m.name = "z2-group";
  m.mode = WordMode::reversing;  // groups reverse; Z/2 is commutative anyway
  m.commutative = true;
  m.unit = 0;
  m.mul = [](const int& a, const int& b) { return a ^ b; };
  m.involve = [](const int& a) { return a; };  // both elements self-inverse
  m.show = [](const int& a) { return a ? std::string("g") : std::string("1"); };
  m.elements = {0, 1};
  return m;
}

InvolutiveMonoid<int> gf9_mult_monoid() {
  InvolutiveMonoid<int> m;
  m.name = "gf9-mult";
  m.mode = WordMode::non_reversing;
  m.commutative = true;
  m.unit = gf9_index(Gf9{1, 0});
  m.mul = [](const int& a, const int& b) {
    return gf9_index(gf9_mul(gf9_of_index(a), gf9_of_index(b)));
  };
  m.involve = [](const int& a) {
    return gf9_index(gf9_conj(gf9_of_index(a)));
  };
  m.show = [](const int& a) { return to_string(Scalar(gf9_of_index(a))); };
  m.elements.resize(9);
  for (int i = 0; i < 9; ++i) m.elements[static_cast<size_t>(i)] = i;
  return m;
}

InvolutiveMonoid<BigInt> int_add_monoid() {
  InvolutiveMonoid<BigInt> m;
  m.name = "int-add";
  m.mode = WordMode::non_reversing;
  m.commutative = true;
  m.unit = 0;
  m.mul = [](const BigInt& a, const BigInt& b) { return BigInt(a + b); };
  m.involve = [](const BigInt& a) { return BigInt(-a); };
  m.show = [](const BigInt& a) { return a.str(); };
  return m;
}

namespace {

// All words of length <= max_len, in a deterministic order.
std::vector<SignedWord> words_up_to(const Alphabet& a, int max_len) {
  std::vector<SignedWord> out{SignedWord::unit(a)};
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (int v = 0; v < a.size(); ++v)
        for (Sign s : {Sign::plus, Sign::minus}) {
          std::vector<SignedWord::Letter> ls = out[i].letters();
          ls.emplace_back(s, v);
          out.push_back(SignedWord::of(a, std::move(ls)));
        }
    level_begin = level_end;
  }
  return out;
}

int extend_indexed(const std::map<std::string, int>& f,
                   const InvolutiveMonoid<int>& m, const SignedWord& w,
                   ExtendVariant variant) {
  if (variant == ExtendVariant::standard) return word_extend(f, m, w);
  // broken variant: multiplies f(v) regardless of the letter's sign
  int acc = m.unit;
  for (const auto& [sign, idx] : w.letters()) {
    (void)sign;
    acc = m.mul(acc, f.at(w.alphabet().symbol(idx)));
  }
  return acc;
}

}  // namespace

Report word_universal_check(const Alphabet& alphabet,
                            const InvolutiveMonoid<int>& m, WordMode mode,
                            int max_len, ExtendVariant variant) {
  if (m.elements.empty())
    throw input_error("word_universal_check needs an enumerable monoid");
  if (m.mode != mode && !m.commutative)
    throw input_error("monoid mode does not match the requested mode");

  Report rep;
  const int n = static_cast<int>(m.elements.size());
  const int v = alphabet.size();
  const std::vector<SignedWord> words = words_up_to(alphabet, max_len);
  const std::vector<SignedWord> short_words =
      words_up_to(alphabet, std::min(max_len, (max_len + 1) / 2));

  auto law = [&](const std::string& name) {
    LawResult r;
    r.suite = "words";
    r.law = name;
    r.instance = m.name + "/" + std::string(mode_name(mode)) + "/V" +
                 std::to_string(v);
    return r;
  };
  LawResult r_eta = law("extend-eta");
  LawResult r_unit = law("extend-unit");
  LawResult r_concat = law("extend-concat");
  LawResult r_invol = law("extend-involution");
  LawResult r_unique = law("extend-uniqueness");

  // odometer over all maps f: alphabet -> m.elements
  std::vector<int> fv(static_cast<size_t>(v), 0);
  while (true) {
    std::map<std::string, int> f;
    for (int k = 0; k < v; ++k)
      f[alphabet.symbol(k)] = m.elements[static_cast<size_t>(fv[static_cast<size_t>(k)])];

    auto ext = [&](const SignedWord& w) {
      return extend_indexed(f, m, w, variant);
    };

    // precompute the fold on every word once per f
    std::vector<int> val(words.size());
    for (size_t i = 0; i < words.size(); ++i) val[i] = ext(words[i]);

    ++r_unit.checked;
    if (r_unit.pass && val[0] != m.unit) {
      r_unit.pass = false;
      r_unit.witness = "empty word maps to " + m.show(val[0]);
    }
    for (int k = 0; k < v; ++k) {
      ++r_eta.checked;
      int got = ext(SignedWord::eta(alphabet, alphabet.symbol(k)));
      if (r_eta.pass && got != f[alphabet.symbol(k)]) {
        r_eta.pass = false;
        r_eta.witness = "eta(" + alphabet.symbol(k) + ") -> " + m.show(got) +
                        " != f = " + m.show(f[alphabet.symbol(k)]);
      }
    }
    // homomorphism: concatenation (on pairs of shorter words, so products
    // stay inside the evaluated range) and involution on every word
    for (const auto& w1 : short_words)
      for (const auto& w2 : short_words) {
        ++r_concat.checked;
        int lhs = ext(word_concat(w1, w2));
        int rhs = m.mul(ext(w1), ext(w2));
        if (r_concat.pass && lhs != rhs) {
          r_concat.pass = false;
          r_concat.witness = "w1=" + w1.text() + ", w2=" + w2.text() +
                             ": " + m.show(lhs) + " != " + m.show(rhs);
        }
      }
    for (size_t i = 0; i < words.size(); ++i) {
      ++r_invol.checked;
      int lhs = ext(word_involve(words[i], mode));
      int rhs = m.involve(val[i]);
      if (r_invol.pass && lhs != rhs) {
        r_invol.pass = false;
        r_invol.witness =
            "w=" + words[i].text() + ": " + m.show(lhs) + " != " + m.show(rhs);
      }
    }
    // uniqueness: the homomorphism equations force the value of every word
    // from the generator images; the forced value must equal the fold
    for (size_t i = 0; i < words.size(); ++i) {
      const auto& ls = words[i].letters();
      int forced = m.unit;
      for (const auto& [sign, idx] : ls) {
        int gen = f[alphabet.symbol(idx)];
        forced = m.mul(forced, sign == Sign::plus ? gen : m.involve(gen));
      }
      ++r_unique.checked;
      if (r_unique.pass && forced != val[i]) {
        r_unique.pass = false;
        r_unique.witness = "w=" + words[i].text() + ": forced " +
                           m.show(forced) + " != fold " + m.show(val[i]);
      }
    }

    int k = v - 1;
    while (k >= 0 && ++fv[static_cast<size_t>(k)] == n) {
      fv[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }

  rep.add(r_unit);
  rep.add(r_eta);
  rep.add(r_concat);
  rep.add(r_invol);
  rep.add(r_unique);
  return rep;
}

}  // namespace involute
