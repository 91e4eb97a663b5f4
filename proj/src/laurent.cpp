#include "sbl/laurent.hpp"

#include <cmath>
#include <sstream>

namespace sbl {

double LaurentQ::eval_double(double q) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += static_cast<double>(c) * std::pow(q, e);
  return sum;
}

std::string LaurentQ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentQ qbracket(int n) {
  if (n < 0) throw domain_error("qbracket: n must be >= 0");
  LaurentQ r;
  for (int e = n - 1; e >= 1 - n; e -= 2) r.add_term(e, Rational(1));
  return r;
}

}  // namespace sbl
