#include <random>

#include "doctest.h"
#include "sbl/laurent.hpp"
#include "sbl/poly.hpp"

using namespace sbl;

namespace {

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), coeff(-5, 5);
  Poly p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t)
    p.add_term(expo(rng), expo(rng), Rational(coeff(rng)));
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("scalars");

TEST_CASE("poly arithmetic basics") {
  Poly x = Poly::delta(), y = Poly::deltap();
  CHECK((x - Poly(1)) * (x + Poly(2)) == Poly::parse("x^2+x-2"));
  CHECK(Poly(2) * y - (x + Poly(1)) == Poly::parse("2y-x-1"));
  CHECK(Poly::parse("(x-1)^2(x+2)") == Poly::parse("x^3-3x+2"));
}

TEST_CASE("poly evaluation") {
  Poly p = Poly::parse("(x-1)^2(x+2)");
  CHECK(p.eval(Rational(1), Rational(0)) == 0);
  CHECK(p.eval(Rational(-2), Rational(0)) == 0);
  CHECK(Poly::parse("x^2+x-4").eval(Rational(2), Rational(0)) == 2);
}

TEST_CASE("poly parse/print round trip") {
  for (const char* s : {"x^3 - 3*x + 2", "0", "1/2*x + 1/2", "2*y - x - 1",
                        "x^2*y - y^2 + 3"}) {
    Poly p = Poly::parse(s);
    CHECK(Poly::parse(p.to_string()) == p);
  }
  CHECK(Poly::parse("x^3-3x+2").to_string() == "x^3 - 3*x + 2");
}

TEST_CASE("poly exact division") {
  Poly num = Poly::parse("(x-1)^2(x+2)(x^2+x-4)");
  CHECK(num.exact_div(Poly::parse("(x-1)(x+2)")) ==
        Poly::parse("(x-1)(x^2+x-4)"));
  CHECK_THROWS_AS(Poly::parse("x^2+1").exact_div(Poly::parse("x-1")),
                  internal_error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int t = 0; t < 300; ++t) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("chebyshev d_n first values") {
  CHECK(chebyshev_d(0) == Poly(1));
  CHECK(chebyshev_d(1) == Poly::delta());
  CHECK(chebyshev_d(2) == Poly::parse("x^2-1"));
  CHECK(chebyshev_d(3) == Poly::parse("x^3-2x"));
  CHECK(chebyshev_d(4) == Poly::parse("x^4-3x^2+1"));
  CHECK_THROWS_AS(chebyshev_d(-1), domain_error);
}

TEST_CASE("qbracket values") {
  CHECK(qbracket(0) == LaurentQ(0));
  CHECK(qbracket(1) == LaurentQ(1));
  LaurentQ two = LaurentQ::q_pow(1) + LaurentQ::q_pow(-1);
  CHECK(qbracket(2) == two);
  // [3] derived by exact division: (q^3 - q^-3) = (q - q^-1)(q^2 + 1 + q^-2).
  LaurentQ lhs = LaurentQ::q_pow(3) - LaurentQ::q_pow(-3);
  CHECK((LaurentQ::q_pow(1) - LaurentQ::q_pow(-1)) * qbracket(3) == lhs);
  CHECK(qbracket(3) ==
        LaurentQ::q_pow(2) + LaurentQ(1) + LaurentQ::q_pow(-2));
}

TEST_CASE("chebyshev at x = q + 1/q equals qbracket(n+1)") {
  LaurentQ x = qbracket(2);
  for (int n = 0; n <= 12; ++n) {
    LaurentQ value(0);
    Poly dn = chebyshev_d(n);
    for (const auto& [e, c] : dn.terms()) {
      LaurentQ term{LaurentQ(Rational(c))};
      for (int k = 0; k < e.first; ++k) term *= x;
      value += term;
    }
    CHECK(value == qbracket(n + 1));
  }
}

TEST_SUITE_END();
