#include <random>

#include "doctest.h"
#include "sbl/brauer.hpp"

using namespace sbl;

namespace {

PairPartition random_partition(int n, int m, std::mt19937& rng) {
  int total = n + m;
  std::vector<int> pos(total);
  for (int k = 0; k < total; ++k) pos[k] = k + 1;
  std::shuffle(pos.begin(), pos.end(), rng);
  PairPartition p(n, m);
  for (int k = 0; k < total; k += 2) p.set_pair(pos[k], pos[k + 1]);
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("brauer");

TEST_CASE("worked composition with one loop") {
  PairPartition p1 = parse_diagram("J(3,5): (1,3')(2,4')(3,5')(1',2')");
  PairPartition p2 = parse_diagram("J(5,1): (1,2)(4,5)(3,1')");
  ComposeResult r = compose(p1, p2);
  CHECK(r.loops == 1);
  CHECK(r.diagram == parse_diagram("J(3,1): (2,3)(1,1')"));
}

TEST_CASE("identity composition") {
  for (const auto& p : enumerate_J(3, 3)) {
    ComposeResult r = compose(PairPartition::identity(3), p);
    CHECK(r.diagram == p);
    CHECK(r.loops == 0);
    ComposeResult r2 = compose(p, PairPartition::identity(3));
    CHECK(r2.diagram == p);
    CHECK(r2.loops == 0);
  }
}

TEST_CASE("cup over cap closes a loop") {
  ComposeResult r = compose(PairPartition::cup(), PairPartition::cap());
  CHECK(r.diagram == PairPartition(0, 0));
  CHECK(r.loops == 1);
}

TEST_CASE("context mismatch") {
  CHECK_THROWS_AS(
      compose(PairPartition::identity(2), PairPartition::identity(3)),
      domain_error);
}

TEST_CASE("associativity exhaustive at sizes <= 3") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d) {
          if ((a + b) % 2 || (b + c) % 2 || (c + d) % 2) continue;
          for (const auto& p : enumerate_J(a, b))
            for (const auto& q : enumerate_J(b, c))
              for (const auto& r : enumerate_J(c, d)) {
                ComposeResult pq = compose(p, q);
                ComposeResult qr = compose(q, r);
                ComposeResult left = compose(pq.diagram, r);
                ComposeResult right = compose(p, qr.diagram);
                CHECK(left.diagram == right.diagram);
                CHECK(pq.loops + left.loops == qr.loops + right.loops);
              }
        }
}

TEST_CASE("associativity on random triples at sizes <= 5") {
  std::mt19937 rng(4257);
  std::uniform_int_distribution<int> size(0, 5);
  int done = 0;
  while (done < 1000) {
    int a = size(rng), b = size(rng), c = size(rng), d = size(rng);
    if ((a + b) % 2 || (b + c) % 2 || (c + d) % 2) continue;
    if (a + b == 0 && b + c == 0 && c + d == 0) continue;
    PairPartition p = random_partition(a, b, rng);
    PairPartition q = random_partition(b, c, rng);
    PairPartition r = random_partition(c, d, rng);
    ComposeResult pq = compose(p, q);
    ComposeResult qr = compose(q, r);
    ComposeResult left = compose(pq.diagram, r);
    ComposeResult right = compose(p, qr.diagram);
    CHECK(left.diagram == right.diagram);
    CHECK(pq.loops + left.loops == qr.loops + right.loops);
    ++done;
  }
}

TEST_CASE("loop count symmetric under flip") {
  std::mt19937 rng(991);
  for (int t = 0; t < 300; ++t) {
    PairPartition p = random_partition(3, 3, rng);
    PairPartition q = random_partition(3, 3, rng);
    ComposeResult a = compose(p, q);
    ComposeResult b = compose(flip(q), flip(p));
    CHECK(a.loops == b.loops);
    CHECK(flip(a.diagram) == b.diagram);
  }
}

TEST_CASE("tensor compatibility of composition") {
  for (const auto& p : enumerate_J(2, 2))
    for (const auto& q : enumerate_J(2, 2))
      for (const auto& p0 : enumerate_J(1, 1))
        for (const auto& q0 : enumerate_J(1, 1)) {
          ComposeResult big = compose(tensor(p, p0), tensor(q, q0));
          ComposeResult small = compose(p, q);
          ComposeResult side = compose(p0, q0);
          CHECK(big.diagram == tensor(small.diagram, side.diagram));
          CHECK(big.loops == small.loops + side.loops);
        }
}

TEST_CASE("generators") {
  CHECK(PairPartition::u_gen(1, 2) == parse_diagram("J(2,2): (1,2)(1',2')"));
  CHECK(PairPartition::sigma(1, 2) == parse_diagram("J(2,2): (1,2')(2,1')"));
  CHECK(PairPartition::u_gen(2, 3) ==
        parse_diagram("J(3,3): (1,1')(2,3)(2',3')"));
  CHECK(generator({GenKind::u, 1}, 2) == PairPartition::u_gen(1, 2));
  CHECK_THROWS_AS(PairPartition::u_gen(3, 3), domain_error);
}

TEST_CASE("compose_sum") {
  Poly half(Rational(Int(1), Int(2)));
  DiagramSum e(PairPartition::identity(2), half);
  e.add(PairPartition::sigma(1, 2), half);
  CHECK(compose_sum(e, e) == e);  // idempotent

  // U_2 (1/2)(1 + sigma_1) U_2 = ((x+1)/2) U_2 in kJ(3,3)
  DiagramSum e3(PairPartition::identity(3), half);
  e3.add(PairPartition::sigma(1, 3), half);
  DiagramSum u2(PairPartition::u_gen(2, 3));
  DiagramSum lhs = compose_sum(compose_sum(u2, e3), u2);
  DiagramSum rhs = (half * (Poly::delta() + Poly(1))) * u2;
  CHECK(lhs == rhs);

  // scalar linearity
  DiagramSum d(PairPartition::identity(2), Poly::delta());
  DiagramSum s1(PairPartition::sigma(1, 2));
  CHECK(compose_sum(d, s1) ==
        Poly::delta() * DiagramSum(PairPartition::sigma(1, 2)));
}

TEST_CASE("relations reports") {
  CHECK(check_relations(GeneratorSet::tl(4)).all_pass());
  CHECK(check_relations(GeneratorSet::brauer(4)).all_pass());
  CHECK(check_relations(GeneratorSet::brauer(2)).all_pass());
  CHECK(check_relations(GeneratorSet::coxeter(2, 2, 4)).all_pass());
}

TEST_CASE("monoid closure small cases") {
  auto c1 = monoid_closure({PairPartition::u_gen(1, 2)}, 2);
  CHECK(c1.size() == 2);  // {1, U_1}
  auto c2 = monoid_closure(
      {PairPartition::sigma(1, 2), PairPartition::u_gen(1, 2)}, 2);
  CHECK(c2.size() == 3);  // all of J(2,2)
  auto j22 = enumerate_J(2, 2);
  CHECK(c2 == std::set<PairPartition>(j22.begin(), j22.end()));
  CHECK_THROWS_AS(monoid_closure({PairPartition::sigma(1, 4),
                                  PairPartition::u_gen(1, 4),
                                  PairPartition::u_gen(2, 4),
                                  PairPartition::u_gen(3, 4)},
                                 4, 5),
                  resource_limit_error);
}

TEST_CASE("closure independent of generator order") {
  std::vector<PairPartition> gens = {PairPartition::sigma(1, 3),
                                     PairPartition::u_gen(1, 3),
                                     PairPartition::u_gen(2, 3)};
  auto a = monoid_closure(gens, 3);
  std::reverse(gens.begin(), gens.end());
  auto b = monoid_closure(gens, 3);
  CHECK(a == b);
}

TEST_SUITE_END();
