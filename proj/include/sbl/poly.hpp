#ifndef SBL_POLY_HPP
#define SBL_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sbl/rational.hpp"

namespace sbl {

/// Exact polynomial in the two loop parameters.  The first variable is the
/// plain loop weight delta (printed `x`), the second the blobbed loop weight
/// delta' (printed `y`).  Terms with zero coefficient are never stored, so
/// structural equality is polynomial equality.
class Poly {
 public:
  using Exponents = std::pair<int, int>;  // (e_delta, e_deltap)

  Poly() = default;
  Poly(long value) { add_term(0, 0, Rational(value)); }  // NOLINT(runtime/explicit)
  explicit Poly(const Rational& value) { add_term(0, 0, value); }

  static Poly delta() { return monomial(1, 0); }
  static Poly deltap() { return monomial(0, 1); }
  static Poly delta_pow(int e) { return monomial(e, 0); }
  static Poly deltap_pow(int e) { return monomial(0, e); }
  static Poly monomial(int e_delta, int e_deltap,
                       const Rational& coeff = Rational(1)) {
    Poly p;
    p.add_term(e_delta, e_deltap, coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second == 1;
  }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  int total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e.first + e.second);
    return deg;
  }

  void add_term(int e_delta, int e_deltap, const Rational& coeff) {
    if (coeff == 0) return;
    auto key = Exponents{e_delta, e_deltap};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
    return r;
  }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    return a.terms_ < b.terms_;
  }

  Poly pow(int e) const {
    if (e < 0) throw domain_error("Poly::pow: negative exponent");
    Poly r(1);
    Poly base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  Rational eval(const Rational& at_delta, const Rational& at_deltap) const;

  /// Substitute a polynomial for delta' (used for delta' = (1+delta)/2).
  Poly subst_deltap(const Poly& value) const;

  /// Exact division; throws internal_error if the divisor does not divide.
  Poly exact_div(const Poly& divisor) const;

  std::string to_string() const;
  static Poly parse(const std::string& text);

 private:
  std::map<Exponents, Rational> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) {
  return Poly(c) * p;
}

/// Chebyshev-type polynomials d_n in x (= delta): d_0 = 1, d_1 = x,
/// d_{n+2} = x d_{n+1} - d_n.
Poly chebyshev_d(int n);

}  // namespace sbl

#endif
