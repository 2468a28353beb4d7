#include "lipknot/laurent.hpp"

#include <sstream>

#include "lipknot/errors.hpp"

namespace lipknot {

LaurentPoly LaurentPoly::term(std::int64_t coeff, const Rational& exponent, std::string var) {
  LaurentPoly p(std::move(var));
  p.add_term(exponent, coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Rational(0) && terms_.begin()->second == 1;
}

void LaurentPoly::add_term(const Rational& exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_[exponent] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::check_var(const LaurentPoly& o) const {
  if (var_ != o.var_)
    throw DomainError("cannot combine polynomials in different variables (" + var_ + " vs " + o.var_ +
                      ")");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_var(o);
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_var(o);
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_var(o);
  LaurentPoly out(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  check_var(divisor);
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quot(var_);
  const auto& [d_exp, d_coeff] = *divisor.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [r_exp, r_coeff] = *rem.terms_.begin();
    if (r_coeff % d_coeff != 0) throw DomainError("polynomial division leaves a remainder");
    const std::int64_t qc = r_coeff / d_coeff;
    const Rational qe = r_exp - d_exp;
    LaurentPoly t = term(qc, qe, var_);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

LaurentPoly LaurentPoly::substitute_power(const std::string& new_var, const Rational& factor) const {
  LaurentPoly out(new_var);
  for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
  return out;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t coeff = c;
    if (first) {
      first = false;
    } else if (coeff < 0) {
      os << " - ";
      coeff = -coeff;
    } else {
      os << " + ";
    }
    os << coeff << '*' << var_ << '^';
    if (e.is_integer())
      os << e.str();
    else
      os << '(' << e.str() << ')';
  }
  return os.str();
}

}  // namespace lipknot
