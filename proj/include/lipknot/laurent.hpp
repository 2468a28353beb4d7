#pragma once
// Laurent polynomials with exact rational exponents and integer coefficients,
// used for Kauffman brackets (variable A) and Jones polynomials (variable t).
#include <cstdint>
#include <map>
#include <string>

#include "lipknot/rational.hpp"

namespace lipknot {

class LaurentPoly {
 public:
  explicit LaurentPoly(std::string var = "t") : var_(std::move(var)) {}

  static LaurentPoly zero(std::string var = "t") { return LaurentPoly(std::move(var)); }
  static LaurentPoly one(std::string var = "t") { return term(1, Rational(0), std::move(var)); }
  static LaurentPoly term(std::int64_t coeff, const Rational& exponent, std::string var = "t");

  const std::string& var() const { return var_; }
  const std::map<Rational, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return var_ == o.var_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact division; throws DomainError when the division leaves a remainder.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Substitutes var = new_var^factor (exponents scale by factor).
  LaurentPoly substitute_power(const std::string& new_var, const Rational& factor) const;

  // var -> var^-1.
  LaurentPoly invert_variable() const;

  // Canonical form: terms in ascending exponent order, every coefficient and
  // exponent written out, fractional exponents parenthesized. "0" when empty.
  std::string str() const;

 private:
  void add_term(const Rational& exponent, std::int64_t coeff);
  void check_var(const LaurentPoly& o) const;

  std::map<Rational, std::int64_t> terms_;
  std::string var_;
};

}  // namespace lipknot
