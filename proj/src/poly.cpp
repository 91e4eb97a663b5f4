#include "sbl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sbl {

Rational Poly::eval(const Rational& at_delta, const Rational& at_deltap) const {
  auto power = [](const Rational& base, int e) {
    Rational r(1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  };
  Rational sum(0);
  for (const auto& [e, c] : terms_)
    sum += c * power(at_delta, e.first) * power(at_deltap, e.second);
  return sum;
}

Poly Poly::subst_deltap(const Poly& value) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    Poly term = Poly(c) * Poly::delta_pow(e.first) * value.pow(e.second);
    out += term;
  }
  return out;
}

namespace {

// Graded-lex order on exponent pairs, largest first.
bool grlex_greater(const Poly::Exponents& a, const Poly::Exponents& b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

Poly Poly::exact_div(const Poly& divisor) const {
  if (divisor.is_zero()) throw internal_error("Poly::exact_div by zero");
  Poly rem = *this;
  Poly quot;
  // Leading term w.r.t. graded lex.
  auto leading = [](const Poly& p) {
    auto best = p.terms_.begin();
    for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
      if (grlex_greater(it->first, best->first)) best = it;
    return best;
  };
  auto dlt = leading(divisor);
  while (!rem.is_zero()) {
    auto rlt = leading(rem);
    int e1 = rlt->first.first - dlt->first.first;
    int e2 = rlt->first.second - dlt->first.second;
    if (e1 < 0 || e2 < 0) throw internal_error("Poly::exact_div: not divisible");
    Poly t = Poly::monomial(e1, e2, rlt->second / dlt->second);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(),
                                                      terms_.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) {
              return grlex_greater(a.first, b.first);
            });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    if (e.first > 0) {
      vars += "x";
      if (e.first > 1) vars += "^" + std::to_string(e.first);
    }
    if (e.second > 0) {
      if (!vars.empty()) vars += "*";
      vars += "y";
      if (e.second > 1) vars += "^" + std::to_string(e.second);
    }
    if (vars.empty()) {
      os << mag.str();
    } else if (mag == 1) {
      os << vars;
    } else {
      os << mag.str() << "*" << vars;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Poly parse_expr() {
    Poly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = parse_term() * Poly(neg ? -1 : 1);
    while (true) {
      skip_ws();
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc *= parse_factor();
      } else {
        char c = peek();
        // Implicit product, e.g. "3x" or "(x-1)(x+2)".
        if (c == 'x' || c == 'y' || c == '(') {
          acc *= parse_factor();
        } else {
          break;
        }
      }
    }
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    skip_ws();
    if (eat('^')) {
      int e = parse_int();
      if (e < 0) throw domain_error("poly parse: negative exponent");
      return base.pow(e);
    }
    return base;
  }

  Poly parse_atom() {
    skip_ws();
    if (eat('(')) {
      Poly inner = parse_expr();
      if (!eat(')')) throw domain_error("poly parse: expected ')'");
      return inner;
    }
    char c = peek();
    if (c == 'x') {
      ++pos;
      return Poly::delta();
    }
    if (c == 'y') {
      ++pos;
      return Poly::deltap();
    }
    // rational number, possibly a/b
    std::string num;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])))) {
      num += s[pos++];
    }
    if (num.empty()) throw domain_error("poly parse: unexpected '" +
                                        std::string(1, c) + "'");
    if (peek() == '/') {
      ++pos;
      std::string den;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos]))) {
        den += s[pos++];
      }
      if (den.empty()) throw domain_error("poly parse: missing denominator");
      return Poly(Rational(Int(num), Int(den)));
    }
    return Poly(Rational(Int(num)));
  }

  int parse_int() {
    skip_ws();
    bool neg = eat('-');
    std::string num;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      num += s[pos++];
    if (num.empty()) throw domain_error("poly parse: expected integer");
    return (neg ? -1 : 1) * std::stoi(num);
  }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
  PolyParser parser(text);
  Poly p = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw domain_error("poly parse: trailing input in '" + text + "'");
  return p;
}

Poly chebyshev_d(int n) {
  if (n < 0) throw domain_error("chebyshev_d: n must be >= 0");
  Poly prev(1);            // d_0
  Poly cur = Poly::delta();  // d_1
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Poly next = Poly::delta() * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace sbl
