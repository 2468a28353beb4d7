#pragma once
// Exact rational numbers on 64-bit words. Always stored reduced with a
// positive denominator; arithmetic widens to 128 bits and checks the result
// fits back into 64 bits.
#include <cstdint>
#include <numeric>
#include <string>

#include "lipknot/errors.hpp"

namespace lipknot {

class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero rational");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool is_integer() const { return den_ == 1; }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "p" or "p/q" with optional sign.
  static Rational parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        std::int64_t n = std::stoll(text, &used);
        if (used != text.size()) throw ParseError("trailing characters in rational '" + text + "'");
        return Rational(n);
      }
      std::int64_t n = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw ParseError("bad numerator in rational '" + text + "'");
      std::int64_t d = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1)
        throw ParseError("bad denominator in rational '" + text + "'");
      return Rational(n, d);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational '" + text + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("rational out of range '" + text + "'");
    }
  }

 private:
  using i128 = __int128;

  static Rational from128(i128 n, i128 d) {
    if (d == 0) throw DomainError("zero denominator in rational");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw DomainError("rational overflow");
    return static_cast<std::int64_t>(v);
  }

  void normalize() {
    if (den_ == 0) throw DomainError("zero denominator in rational");
    *this = from128(num_, den_);
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace lipknot
