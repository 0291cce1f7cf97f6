#include "flatgame/rational.hpp"

#include <cctype>
#include <ostream>

namespace flatgame {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long num, long long den)
    : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) {
    throw BadRationalError("zero denominator");
  }
  // The two-argument cpp_rational constructor requires a positive
  // denominator; division normalizes sign and reduces.
  value_ = Impl(num) / Impl(den);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw BadRationalError("empty rational literal");

  std::string_view body = s;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw BadRationalError("bad rational literal: " + s);

  auto slash = body.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    bool den_negative = false;
    if (!den.empty() && (den.front() == '+' || den.front() == '-')) {
      den_negative = den.front() == '-';
      den.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
      throw BadRationalError("bad rational literal: " + s);
    }
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (negative) n = -n;
    if (den_negative) d = -d;
    return Rational(n, d);  // throws BadRationalError when d == 0
  }

  auto dot = body.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw BadRationalError("bad rational literal: " + s);
    }
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw BadRationalError("bad rational literal: " + s);
    }
    BigInt n = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt d = 1;
    for (char c : frac) {
      n = n * 10 + (c - '0');
      d *= 10;
    }
    if (negative) n = -n;
    return Rational(n, d);
  }

  if (!all_digits(body)) {
    throw BadRationalError("bad rational literal: " + s);
  }
  BigInt n{std::string(body)};
  if (negative) n = -n;
  return Rational(n, BigInt(1));
}

std::string Rational::str() const {
  std::string out = num().str();
  if (den() != 1) {
    out += "/";
    out += den().str();
  }
  return out;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_.is_zero()) throw BadRationalError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace flatgame
