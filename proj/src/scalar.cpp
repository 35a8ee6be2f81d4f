#include "involute/scalar.hpp"

#include <cctype>

#include "involute/error.hpp"

namespace involute {

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) throw input_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  v_ = BigRat(std::move(num), std::move(den));  // reduces to lowest terms
}

namespace {

// "0" or nonzero decimal without leading zeros.
bool valid_unsigned_decimal(std::string_view s) {
  if (s.empty()) return false;
  if (s == "0") return true;
  if (s[0] == '0') return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool neg = !num.empty() && num[0] == '-';
  std::string_view mag = neg ? num.substr(1) : num;
  if (!valid_unsigned_decimal(mag) || (neg && mag == "0"))
    throw input_error("malformed rational: '" + std::string(text) + "'");
  BigInt n{std::string(mag)};
  if (neg) n = -n;
  if (den.data() == nullptr) return Rational(std::move(n), 1);
  if (!valid_unsigned_decimal(den) || den == "0" || den == "1")
    throw input_error("malformed rational: '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (boost::multiprecision::gcd(BigInt(abs(n)), d) != 1)
    throw input_error("rational not in lowest terms: '" + std::string(text) +
                      "'");
  return Rational(std::move(n), std::move(d));
}

std::string Rational::str() const {
  BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

GaussianRational operator+(const GaussianRational& a,
                           const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational operator*(const GaussianRational& a,
                           const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Gf9 gf9_add(Gf9 a, Gf9 b) {
  return {static_cast<std::uint8_t>((a.re + b.re) % 3),
          static_cast<std::uint8_t>((a.im + b.im) % 3)};
}

Gf9 gf9_mul(Gf9 a, Gf9 b) {
  int re = (a.re * b.re + 3 * 3 - a.im * b.im) % 3;  // i^2 = -1
  int im = (a.re * b.im + a.im * b.re) % 3;
  return {static_cast<std::uint8_t>(re), static_cast<std::uint8_t>(im)};
}

Gf9 gf9_conj(Gf9 a) {
  return {a.re, static_cast<std::uint8_t>((3 - a.im) % 3)};
}

Gf9 gf9_of_index(int idx) {
  return {static_cast<std::uint8_t>(idx / 3),
          static_cast<std::uint8_t>(idx % 3)};
}

int gf9_index(Gf9 a) { return 3 * a.re + a.im; }

std::string_view kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::boolean: return "bool";
    case ScalarKind::rational: return "rat";
    case ScalarKind::gauss: return "gauss";
    case ScalarKind::gf9: return "gf9";
  }
  return "?";
}

namespace {

[[noreturn]] void wrong_kind(const Scalar& s, ScalarKind want) {
  throw input_error("scalar of kind '" + std::string(kind_name(s.kind())) +
                    "' used where '" + std::string(kind_name(want)) +
                    "' was required");
}

void require_same(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind())
    throw input_error("mixed scalar kinds: '" +
                      std::string(kind_name(a.kind())) + "' and '" +
                      std::string(kind_name(b.kind())) + "'");
}

}  // namespace

bool Scalar::as_bool() const {
  if (kind() != ScalarKind::boolean) wrong_kind(*this, ScalarKind::boolean);
  return std::get<bool>(v_);
}

const Rational& Scalar::as_rational() const {
  if (kind() != ScalarKind::rational) wrong_kind(*this, ScalarKind::rational);
  return std::get<Rational>(v_);
}

const GaussianRational& Scalar::as_gauss() const {
  if (kind() != ScalarKind::gauss) wrong_kind(*this, ScalarKind::gauss);
  return std::get<GaussianRational>(v_);
}

Gf9 Scalar::as_gf9() const {
  if (kind() != ScalarKind::gf9) wrong_kind(*this, ScalarKind::gf9);
  return std::get<Gf9>(v_);
}

Scalar add(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.kind()) {
    case ScalarKind::boolean: return Scalar(a.as_bool() || b.as_bool());
    case ScalarKind::rational:
      return Scalar(a.as_rational() + b.as_rational());
    case ScalarKind::gauss: return Scalar(a.as_gauss() + b.as_gauss());
    case ScalarKind::gf9: return Scalar(gf9_add(a.as_gf9(), b.as_gf9()));
  }
  throw input_error("unreachable scalar kind");
}

Scalar mul(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.kind()) {
    case ScalarKind::boolean: return Scalar(a.as_bool() && b.as_bool());
    case ScalarKind::rational:
      return Scalar(a.as_rational() * b.as_rational());
    case ScalarKind::gauss: return Scalar(a.as_gauss() * b.as_gauss());
    case ScalarKind::gf9: return Scalar(gf9_mul(a.as_gf9(), b.as_gf9()));
  }
  throw input_error("unreachable scalar kind");
}

Scalar conj(const Scalar& a) {
  switch (a.kind()) {
    case ScalarKind::boolean: return a;
    case ScalarKind::rational: return a;
    case ScalarKind::gauss: {
      const GaussianRational& g = a.as_gauss();
      return Scalar(GaussianRational{g.re, Rational(0) - g.im});
    }
    case ScalarKind::gf9: return Scalar(gf9_conj(a.as_gf9()));
  }
  throw input_error("unreachable scalar kind");
}

bool is_zero(const Scalar& a) {
  switch (a.kind()) {
    case ScalarKind::boolean: return !a.as_bool();
    case ScalarKind::rational: return a.as_rational().is_zero();
    case ScalarKind::gauss:
      return a.as_gauss().re.is_zero() && a.as_gauss().im.is_zero();
    case ScalarKind::gf9: return a.as_gf9() == Gf9{0, 0};
  }
  return false;
}

bool is_one(const Scalar& a) {
  switch (a.kind()) {
    case ScalarKind::boolean: return a.as_bool();
    case ScalarKind::rational: return a.as_rational().is_one();
    case ScalarKind::gauss:
      return a.as_gauss().re.is_one() && a.as_gauss().im.is_zero();
    case ScalarKind::gf9: return a.as_gf9() == Gf9{1, 0};
  }
  return false;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case ScalarKind::boolean: return a.as_bool() < b.as_bool();
    case ScalarKind::rational: return a.as_rational() < b.as_rational();
    case ScalarKind::gauss: {
      const auto& x = a.as_gauss();
      const auto& y = b.as_gauss();
      if (!(x.re == y.re)) return x.re < y.re;
      return x.im < y.im;
    }
    case ScalarKind::gf9: return gf9_index(a.as_gf9()) < gf9_index(b.as_gf9());
  }
  return false;
}

namespace {

std::string complex_pair_str(const std::string& re, const std::string& im) {
  std::string s = re;
  if (!im.empty() && im[0] == '-') {
    s += "-" + im.substr(1) + "i";
  } else {
    s += "+" + im + "i";
  }
  return s;
}

}  // namespace

std::string to_string(const Scalar& a) {
  switch (a.kind()) {
    case ScalarKind::boolean: return a.as_bool() ? "true" : "false";
    case ScalarKind::rational: return a.as_rational().str();
    case ScalarKind::gauss:
      return complex_pair_str(a.as_gauss().re.str(), a.as_gauss().im.str());
    case ScalarKind::gf9:
      return complex_pair_str(std::to_string(a.as_gf9().re),
                              std::to_string(a.as_gf9().im));
  }
  return "?";
}

}  // namespace involute
