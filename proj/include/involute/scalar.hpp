#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace involute {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational in lowest terms with positive denominator. Backed by
// boost::multiprecision, which keeps the canonical form on every operation;
// equality is therefore structural.
class Rational {
 public:
  Rational() = default;  // 0/1
  Rational(long long n) : v_(n) {}
  Rational(BigInt num, BigInt den);  // den == 0 -> input_error

  // Strict decoder for the textual form "p" or "p/q": lowest terms,
  // q >= 2, no leading zeros, no "-0". Anything else -> input_error.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }

  std::string str() const;  // "p" or "p/q"

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.v_ * b.v_);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }

 private:
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  BigRat v_;
};

// Gaussian rational a + ib, componentwise canonical.
struct GaussianRational {
  Rational re;
  Rational im;

  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;
};

GaussianRational operator+(const GaussianRational& a,
                           const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a,
                           const GaussianRational& b);

// Element of the nine-element field Z/3[i] (i^2 = -1; -1 is not a square
// mod 3, so this is a field). Components are always in {0,1,2}.
struct Gf9 {
  std::uint8_t re = 0;
  std::uint8_t im = 0;

  friend bool operator==(const Gf9&, const Gf9&) = default;
};

Gf9 gf9_add(Gf9 a, Gf9 b);
Gf9 gf9_mul(Gf9 a, Gf9 b);
Gf9 gf9_conj(Gf9 a);
// Index <-> element bijection, idx = 3*re + im.
Gf9 gf9_of_index(int idx);
int gf9_index(Gf9 a);

enum class ScalarKind : std::uint8_t { boolean, rational, gauss, gf9 };

std::string_view kind_name(ScalarKind k);

// Exact scalar value. The alternative selects the involutive-semiring
// instance it belongs to; mixing kinds in one operation is an input error.
class Scalar {
 public:
  Scalar() : v_(false) {}
  explicit Scalar(bool b) : v_(b) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(GaussianRational g) : v_(std::move(g)) {}
  explicit Scalar(Gf9 g) : v_(g) {}

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }

  bool as_bool() const;
  const Rational& as_rational() const;
  const GaussianRational& as_gauss() const;
  Gf9 as_gf9() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  std::variant<bool, Rational, GaussianRational, Gf9> v_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar conj(const Scalar& a);
bool is_zero(const Scalar& a);
bool is_one(const Scalar& a);

// Representational total order (variant index, then componentwise). Used
// only for canonical sorting and set containers, not as semiring structure.
bool scalar_less(const Scalar& a, const Scalar& b);

std::string to_string(const Scalar& a);

}  // namespace involute
