#include <set>

#include "doctest.h"
#include "sbl/diagram.hpp"

using namespace sbl;

TEST_SUITE_BEGIN("diagram");

TEST_CASE("disk positions") {
  CHECK(disk_position({Row::top, 3}, 5, 3) == 3);
  CHECK(disk_position({Row::bottom, 1}, 5, 3) == 8);
  CHECK(disk_position({Row::bottom, 3}, 5, 3) == 6);
  CHECK_THROWS_AS(disk_position({Row::top, 6}, 5, 3), domain_error);
  CHECK_THROWS_AS(disk_position({Row::bottom, 0}, 5, 3), domain_error);
}

TEST_CASE("disk position is a bijection") {
  PairPartition p(4, 3);
  std::set<int> seen;
  for (int i = 1; i <= 4; ++i) seen.insert(p.disk_pos({Row::top, i}));
  for (int j = 1; j <= 3; ++j) seen.insert(p.disk_pos({Row::bottom, j}));
  CHECK(seen.size() == 7);
  CHECK(*seen.begin() == 1);
  CHECK(*seen.rbegin() == 7);
  for (int pos = 1; pos <= 7; ++pos)
    CHECK(p.disk_pos(p.vertex_at(pos)) == pos);
}

TEST_CASE("pairs_cross") {
  CHECK(pairs_cross({1, 3}, {2, 4}));
  CHECK_FALSE(pairs_cross({1, 2}, {3, 4}));
  // {2,7} and {3,3'} in J(7,3): disk positions (2,7) and (3,8).
  CHECK(pairs_cross(std::pair<Vertex, Vertex>{{Row::top, 2}, {Row::top, 7}},
                    std::pair<Vertex, Vertex>{{Row::top, 3}, {Row::bottom, 3}},
                    7, 3));
  CHECK_THROWS_AS(pairs_cross({1, 3}, {3, 4}), domain_error);
}

TEST_CASE("chi") {
  CHECK(chi(PairPartition::identity(4)) == 0);
  CHECK(chi(PairPartition::sigma(1, 2)) == 1);
  PairPartition p = parse_diagram("J(7,3): (1,2')(2,7)(3,3')(4,1')(5,6)");
  CHECK(chi(p) == 4);
  // brute force oracle over all pairs-of-pairs
  auto ps = p.pairs();
  int count = 0;
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (pairs_cross(ps[i], ps[j])) ++count;
  CHECK(chi(p) == count);
}

TEST_CASE("noncrossing") {
  CHECK(is_noncrossing(PairPartition::identity(3)));
  CHECK_FALSE(is_noncrossing(PairPartition::sigma(1, 2)));
  CHECK(is_noncrossing(parse_diagram("J(2,2): (1,2)(1',2')")));
}

TEST_CASE("tensor") {
  CHECK(tensor(PairPartition::identity(1), PairPartition::identity(1)) ==
        PairPartition::identity(2));
  PairPartition uu = tensor(PairPartition::cup(), PairPartition::cap());
  CHECK(uu == parse_diagram("J(2,2): (1,2)(1',2')"));
  CHECK(tensor(PairPartition::sigma(1, 2), PairPartition::identity(1)) ==
        PairPartition::sigma(1, 3));
  // unit and associativity on samples
  PairPartition e0(0, 0);
  PairPartition s = PairPartition::sigma(1, 2);
  CHECK(tensor(e0, s) == s);
  CHECK(tensor(s, e0) == s);
  PairPartition a = PairPartition::u_gen(1, 2), b = PairPartition::cup(),
                c = PairPartition::cap();
  CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
}

TEST_CASE("tensor cancellation on small exhaustive cases") {
  auto j21 = enumerate_J(2, 2);
  PairPartition w = PairPartition::u_gen(1, 2);
  for (const auto& p : j21)
    for (const auto& q : j21) {
      if (p == q) continue;
      CHECK(tensor(p, w) != tensor(q, w));
    }
}

TEST_CASE("flip") {
  CHECK(flip(PairPartition::cup()) == PairPartition::cap());
  CHECK(flip(PairPartition::identity(3)) == PairPartition::identity(3));
  CHECK(flip(PairPartition::sigma(1, 2)) == PairPartition::sigma(1, 2));
  PairPartition p = parse_diagram("J(3,1): (1,2)(3,1')");
  CHECK(flip(flip(p)) == p);
  PairPartition q = PairPartition::cup();
  CHECK(flip(tensor(p, q)) == tensor(flip(p), flip(q)));
}

TEST_CASE("shift") {
  PairPartition p = PairPartition::identity(1);
  PairPartition up = shift(p, 1);
  CHECK(up.n_top() == 2);
  CHECK(up.n_bottom() == 2);
  CHECK(up.partner_of({Row::top, 2}).has_value());
  CHECK_FALSE(up.partner_of({Row::top, 1}).has_value());
  CHECK(shift(up, -1) == p);
  CHECK_THROWS_AS(shift(PairPartition::identity(2), -1), domain_error);
}

TEST_CASE("enumerate_J counts") {
  CHECK(enumerate_J(2, 2).size() == 3);
  CHECK(enumerate_J(3, 3).size() == 15);
  CHECK(enumerate_J(4, 4, EnumFilter::noncrossing).size() == 14);  // Catalan
  CHECK(enumerate_J(0, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_J(1, 2), domain_error);
  CHECK_THROWS_AS(enumerate_J(10, 10), resource_limit_error);
}

TEST_CASE("enumeration is sorted and duplicate-free") {
  auto all = enumerate_J(3, 3);
  for (size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1] < all[k]);
}

TEST_CASE("literals") {
  PairPartition s1 = parse_diagram("J(2,2): (1,2')(2,1')");
  CHECK(s1 == PairPartition::sigma(1, 2));
  CHECK(parse_diagram(s1.to_literal()) == s1);
  CHECK_THROWS_AS(parse_diagram("J(2,2): (1,2')"), domain_error);
  CHECK_THROWS_AS(parse_diagram("J(2,2): (1,2')(2,2')"), domain_error);
  CHECK_THROWS_AS(parse_diagram("J(2,2): (1,1)(2,2')"), domain_error);
}

TEST_SUITE_END();
