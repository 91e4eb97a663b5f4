#ifndef SBL_LAURENT_HPP
#define SBL_LAURENT_HPP

#include <map>
#include <string>

#include "sbl/rational.hpp"

namespace sbl {

/// Laurent polynomial in q with rational coefficients; negative exponents
/// allowed, zero coefficients never stored.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long value) { add_term(0, Rational(value)); }  // NOLINT
  explicit LaurentQ(const Rational& value) { add_term(0, value); }

  static LaurentQ q_pow(int e, const Rational& coeff = Rational(1)) {
    LaurentQ l;
    l.add_term(e, coeff);
    return l;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  void add_term(int e, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentQ& operator+=(const LaurentQ& o) { return *this = *this + o; }
  LaurentQ& operator-=(const LaurentQ& o) { return *this = *this - o; }
  LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }

  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentQ& a, const LaurentQ& b) {
    return !(a == b);
  }

  /// q -> 1/q substitution.
  LaurentQ bar() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.add_term(-e, c);
    return r;
  }

  double eval_double(double q) const;
  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ...
LaurentQ qbracket(int n);

}  // namespace sbl

#endif
