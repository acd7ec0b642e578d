#include <random>

#include "doctest.h"
#include "downset/orders.hpp"
#include "downset/symmetry.hpp"

using namespace downset;

TEST_CASE("packed box basics") {
  GridShape m55({5, 5});
  PackedBox full = PackedBox::full(m55);
  CHECK(full.size() == 25);
  CHECK(full.side(0) == 5);
  PackedBox q(m55, {1, 2}, {3, 4});
  CHECK(q.size() == 9);
  CHECK(q.contains({2, 3}));
  CHECK_FALSE(q.contains({0, 2}));
  CHECK_THROWS_AS(PackedBox(m55, {3, 0}, {1, 0}), std::domain_error);
  CHECK_THROWS_AS(PackedBox(m55, {0, 0}, {5, 0}), std::domain_error);
}

TEST_CASE("is_packed recognizes products of intervals") {
  GridShape m44({4, 4});
  CHECK(is_packed(m44, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(is_packed(m44, {{3, 0}}));
  CHECK_FALSE(is_packed(m44, {}));
  CHECK_FALSE(is_packed(m44, {{0, 0}, {1, 1}}));
  CHECK_FALSE(is_packed(m44, {{0, 0}, {0, 1}, {1, 0}}));
}

TEST_CASE("reflection examples") {
  GridShape m55({5, 5});
  PackedBox full = PackedBox::full(m55);
  CHECK(reflect_point(full, 0, 1, {1, 3}) == GridPoint{3, 1});
  CHECK(reflect_point(full, 0, 1, {2, 2}) == GridPoint{2, 2});
  PackedBox q(m55, {1, 2}, {3, 4});
  CHECK(reflect_point(q, 0, 1, {1, 4}) == GridPoint{3, 2});

  CHECK_THROWS_AS(reflect_point(q, 0, 1, {0, 2}), std::domain_error);  // outside
  PackedBox uneven(m55, {0, 0}, {1, 2});
  CHECK_THROWS_AS(reflect_point(uneven, 0, 1, {0, 0}), std::domain_error);
}

TEST_CASE("reflection is a rank-preserving involution") {
  GridShape shape({6, 4, 6});
  PackedBox q(shape, {1, 0, 2}, {3, 3, 4});  // sides 3, 4, 3
  for (int x = 1; x <= 3; ++x) {
    for (int y = 0; y <= 3; ++y) {
      for (int z = 2; z <= 4; ++z) {
        GridPoint p{x, y, z};
        GridPoint r = reflect_point(q, 0, 2, p);
        CHECK(rank(r) == rank(p));
        CHECK(reflect_point(q, 0, 2, r) == p);
      }
    }
  }
}

TEST_CASE("symmetrize_point moves mass toward larger c1 offset") {
  GridShape m55({5, 5});
  PackedBox full = PackedBox::full(m55);
  CHECK(symmetrize_point(full, 0, 1, {1, 3}) == GridPoint{3, 1});
  CHECK(symmetrize_point(full, 0, 1, {3, 1}) == GridPoint{3, 1});
  CHECK(symmetrize_point(full, 0, 1, {2, 2}) == GridPoint{2, 2});
}

TEST_CASE("symmetrize_set examples") {
  GridShape m33({3, 3});
  PackedBox full = PackedBox::full(m33);
  PointSet colex4 = initial_segment(m33, DominationOrder::colex(2), 4);
  PointSet lex4 = initial_segment(m33, DominationOrder::lex(2), 4);
  CHECK(symmetrize_set(full, colex4, 1, 0) == lex4);

  // A set already on the dominant side of the diagonal is unchanged.
  PointSet below{{1, 0}, {2, 0}, {2, 1}};
  CHECK(symmetrize_set(full, below, 0, 1) == below);
}

TEST_CASE("symmetrize_set is idempotent, cardinality- and weight-preserving") {
  GridShape shape({5, 4});
  PackedBox q(shape, {1, 0}, {3, 2});
  RankWeight w = RankWeight::powers_of_two(shape.max_rank());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dx(0, 4), dy(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    PointSet a;
    for (int i = 0; i < 8; ++i) a.insert({dx(rng), dy(rng)});
    PointSet s = symmetrize_set(q, a, 0, 1);
    CHECK(s.size() == a.size());
    CHECK(weight_of(w, s) == weight_of(w, a));
    CHECK(symmetrize_set(q, s, 0, 1) == s);
  }
}

TEST_CASE("reflect-push: empty move leaves A unchanged with delta 0") {
  GridShape m33({3, 3});
  ReflectPushMove m{initial_segment(m33, DominationOrder::lex(2), 4),
                    PackedBox::full(m33), 0, 1, {}, {}, {}};
  ReflectPushResult res = apply_reflect_push(m, RankWeight::standard(m33));
  CHECK(res.result == m.a);
  CHECK(res.delta == 0);
}

TEST_CASE("reflect-push: weight-gaining move on M(7,10)") {
  GridShape shape({7, 10});
  RankWeight w = RankWeight::standard(shape);
  DownSet2D a(shape, {10, 3, 1, 0, 0, 0, 0});
  PackedBox box(shape, {1, 0}, {3, 2});
  ReflectPushMove m{a.points(), box, 0, 1,
                    {{2, 0}},
                    {{1, 3}},
                    {{reflect_point(box, 0, 1, {2, 0}), {1, 3}}}};
  ReflectPushResult res = apply_reflect_push(m, w);
  CHECK(res.delta == 2);
  CHECK(res.result.count(GridPoint{1, 3}));
  CHECK_FALSE(res.result.count(GridPoint{2, 0}));
  CHECK(is_downset(shape, res.result));
}

TEST_CASE("reflect-push: weight-preserving sigma gives delta 0") {
  GridShape shape({7, 10});
  DownSet2D a(shape, {10, 3, 1, 0, 0, 0, 0});
  ReflectPushMove m{a.points(), PackedBox(shape, {1, 0}, {3, 2}), 0, 1,
                    {{1, 2}},  // reflection (3,0) has equal rank
                    {{3, 0}},
                    {{{3, 0}, {3, 0}}}};
  CHECK(apply_reflect_push(m, RankWeight::standard(shape)).delta == 0);
}

TEST_CASE("reflect-push rejects hypothesis violations by name") {
  GridShape m33({3, 3});
  RankWeight w = RankWeight::standard(m33);
  PointSet lex4 = initial_segment(m33, DominationOrder::lex(2), 4);

  ReflectPushMove bad_a{{{1, 1}}, PackedBox::full(m33), 0, 1, {}, {}, {}};
  CHECK_THROWS_WITH_AS(apply_reflect_push(bad_a, w),
                       doctest::Contains("hypothesis 1"), std::domain_error);

  // removing (0,0) leaves holes below (0,1)
  ReflectPushMove bad_o{lex4, PackedBox::full(m33), 0, 1, {{0, 0}}, {}, {}};
  CHECK_THROWS_WITH_AS(apply_reflect_push(bad_o, w),
                       doctest::Contains("hypothesis 3"), std::domain_error);

  // inserting (2,2) is not a downset extension
  ReflectPushMove bad_p{lex4, PackedBox::full(m33), 0, 1, {}, {{2, 2}}, {}};
  CHECK_THROWS_WITH_AS(apply_reflect_push(bad_p, w),
                       doctest::Contains("hypothesis 5"), std::domain_error);

  // sigma has the wrong cardinality
  ReflectPushMove bad_sigma{lex4, PackedBox::full(m33), 0, 1, {{0, 2}}, {{1, 1}}, {}};
  CHECK_THROWS_WITH_AS(apply_reflect_push(bad_sigma, w),
                       doctest::Contains("hypothesis 6"), std::domain_error);
}
