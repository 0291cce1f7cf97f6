// Exact rational scalar used for every finite-game payoff. The solution
// concepts in this library quantify over payoff *equality*, which floating
// point cannot decide, so finite games never touch doubles.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "flatgame/errors.hpp"

namespace flatgame {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "p/q" and plain decimals such as "-3.25". Throws
  // BadRationalError on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt num() const { return numerator(value_); }
  BigInt den() const { return denominator(value_); }

  // "p" when the denominator is 1, otherwise "p/q" in lowest terms.
  std::string str() const;
  double to_double() const { return value_.convert_to<double>(); }
  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

 private:
  using Impl = boost::multiprecision::cpp_rational;
  explicit Rational(Impl v) : value_(std::move(v)) {}
  Impl value_;
};

inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace flatgame
