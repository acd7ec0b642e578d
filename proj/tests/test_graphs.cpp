#include <bit>
#include <random>

#include "doctest.h"
#include "downset/graphs.hpp"

using namespace downset;

TEST_CASE("graph construction and degrees") {
  SimpleGraph k4 = complete_graph(4);
  CHECK(k4.edges.size() == 6);
  CHECK(k4.is_regular());
  SimpleGraph c5 = cycle_graph(5);
  CHECK(c5.edges.size() == 5);
  CHECK(c5.degree(2) == 2);
  CHECK_THROWS_AS(k4.add_edge(0, 0), std::domain_error);
}

TEST_CASE("induced and boundary edges") {
  SimpleGraph k4 = complete_graph(4);
  CHECK(induced_edges(k4, {}).empty());
  CHECK(boundary_edges(k4, {}).empty());
  CHECK(induced_edges(k4, {0, 1}).size() == 1);
  CHECK(boundary_edges(k4, {0, 1}).size() == 4);

  SimpleGraph c5 = cycle_graph(5);
  CHECK(induced_edges(c5, {0, 1, 2}).size() == 2);
  CHECK(boundary_edges(c5, {0, 1, 2}).size() == 2);
}

TEST_CASE("regularity identity") {
  SimpleGraph k4 = complete_graph(4);
  CHECK(check_regular_identity(k4, {0, 1}));
  CHECK(check_regular_identity(k4, {}));
  SimpleGraph j5 = johnson_graph(5);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<int> a;
    for (int v = 0; v < j5.n; ++v) {
      if (coin(rng)) a.insert(v);
    }
    CHECK(check_regular_identity(j5, a));
  }
  SimpleGraph path{3, {{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(check_regular_identity(path, {0}), std::domain_error);
}

TEST_CASE("cartesian products") {
  SimpleGraph c4 = cartesian_product(complete_graph(2), complete_graph(2));
  CHECK(c4.n == 4);
  CHECK(c4.edges.size() == 4);
  int k = -1;
  CHECK(c4.is_regular(&k));
  CHECK(k == 2);

  SimpleGraph g = complete_graph(3), h = cycle_graph(5);
  SimpleGraph prod = cartesian_product(g, h);
  CHECK(prod.edges.size() ==
        g.n * h.edges.size() + h.n * g.edges.size());

  SimpleGraph k33 = cartesian_product(complete_graph(3), complete_graph(3));
  CHECK(k33.n == 9);
  CHECK(k33.is_regular(&k));
  CHECK(k == 4);
}

TEST_CASE("johnson graphs") {
  SimpleGraph j3 = johnson_graph(3);
  CHECK(j3.n == 3);
  CHECK(j3.edges.size() == 3);  // a triangle

  SimpleGraph j4 = johnson_graph(4);
  int k = -1;
  CHECK(j4.n == 6);
  CHECK(j4.is_regular(&k));
  CHECK(k == 4);  // the octahedron

  SimpleGraph j5 = johnson_graph(5);
  CHECK(j5.n == 10);
  CHECK(j5.is_regular(&k));
  CHECK(k == 6);  // degree 2(n-2)

  auto [a1, a2] = johnson_vertex_pair(5, 7);
  CHECK(johnson_pair_vertex(5, a1, a2) == 7);
}

TEST_CASE("sigma bridge") {
  CHECK(sigma_bridge(1, 2) == GridPoint{0, 0});
  CHECK(sigma_bridge(2, 5) == GridPoint{1, 3});
  CHECK(sigma_bridge(6, 7) == GridPoint{5, 5});  // {n-1, n} at n = 7
  CHECK_THROWS_AS(sigma_bridge(3, 3), std::domain_error);

  // Bijection onto the triangle, compatible with the triangle order.
  int n = 6;
  TriangleShape tri(n - 1);
  PointSet image;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      GridPoint p = sigma_bridge(a, b);
      CHECK(tri.contains(p));
      image.insert(p);
    }
  CHECK(static_cast<long long>(image.size()) == tri.size());
}

TEST_CASE("adjacent pairs and the Johnson identity") {
  SimpleGraph star{4, {{0, 1}, {0, 2}, {0, 3}}};
  CHECK(adjacent_pairs(star) == 3);
  SimpleGraph path{3, {{0, 1}, {1, 2}}};
  CHECK(adjacent_pairs(path) == 1);

  // P(G) equals the induced-edge count of E_G inside J(n,2), for random G.
  int n = 6;
  SimpleGraph j = johnson_graph(n);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    SimpleGraph g{n, {}};
    std::set<int> as_vertices;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        if (coin(rng)) {
          g.add_edge(a - 1, b - 1);
          as_vertices.insert(johnson_pair_vertex(n, a, b));
        }
      }
    CHECK(adjacent_pairs(g) ==
          static_cast<long long>(induced_edges(j, as_vertices).size()));
  }
}

TEST_CASE("Ahlswede-Katona closed form vs brute force") {
  CHECK(ak_optimum(4, 3) == 3);
  CHECK(ak_bruteforce(4, 3) == 3);
  CHECK(ak_bruteforce(5, 0) == 0);
  for (long long m = 0; m <= 10; ++m) CHECK(ak_optimum(5, m) == ak_bruteforce(5, m));
  CHECK_THROWS_AS(ak_bruteforce(8, 3), resource_error);
}

TEST_CASE("delta sequences") {
  SimpleGraph k4 = complete_graph(4);
  CHECK(delta_sequence(k4, {0, 1, 2, 3}).values == std::vector<double>{0, 1, 2, 3});
  SimpleGraph k2 = complete_graph(2);
  CHECK(delta_sequence(k2, {0, 1}).values == std::vector<double>{0, 1});
  SimpleGraph c4 = cycle_graph(4);
  CHECK(delta_sequence(c4, {0, 1, 2, 3}).values == std::vector<double>{0, 1, 1, 2});
  CHECK_THROWS_AS(delta_sequence(k4, {0, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(delta_sequence(k4, {0, 0, 1, 2}), std::domain_error);
}

TEST_CASE("product weight tables") {
  DeltaSequence d3{{0, 1, 2}}, d4{{0, 1, 2, 3}};
  WeightFn w = product_weight_table({d3, d4});
  CHECK(w({2, 3}) == 5);  // complete-graph factors give the rank
  CHECK(w({0, 0}) == 0);
  WeightFn single = product_weight_table({d4});
  CHECK(single({2}) == 2);
  CHECK_THROWS_AS(w({1}), std::domain_error);
  CHECK_THROWS_AS(w({1, 9}), std::domain_error);

  // Table weight equals actual induced edges on K3 x K4 for every downset.
  SimpleGraph prod = cartesian_product(complete_graph(3), complete_graph(4));
  GridShape shape({3, 4});
  enumerate_downsets_2d(3, 4, [&](const std::vector<int>& h) {
    std::set<int> vertices;
    double table_weight = 0;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < h[x]; ++y) {
        vertices.insert(x * 4 + y);
        table_weight += w({x, y});
      }
    CHECK(table_weight == static_cast<double>(induced_edges(prod, vertices).size()));
  });
}

TEST_CASE("phi powers") {
  SetFunction pairs = SetFunction::from(4, [](unsigned mask) {
    int k = std::popcount(mask);
    return k * (k - 1) / 2.0;
  });
  CHECK(phi_power(pairs, 2, {}) == 0);

  // d = 1 reduces to phi itself.
  CHECK(phi_power(pairs, 1, {{0}, {2}, {3}}) == 3.0);

  // phi(S) = C(|S|,2) squared recovers induced edges of K_n x K_n.
  SimpleGraph prod = cartesian_product(complete_graph(4), complete_graph(4));
  GridShape shape({4, 4});
  enumerate_downsets_2d(4, 4, [&](const std::vector<int>& h) {
    PointSet a;
    std::set<int> vertices;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < h[x]; ++y) {
        a.insert({x, y});
        vertices.insert(x * 4 + y);
      }
    CHECK(phi_power(pairs, 2, a) ==
          static_cast<double>(induced_edges(prod, vertices).size()));
  });
}

TEST_CASE("push-down recognition") {
  SetFunction pairs = SetFunction::from(4, [](unsigned mask) {
    int k = std::popcount(mask);
    return k * (k - 1) / 2.0;
  });
  CHECK(is_push_down(pairs).ok);

  SetFunction modular = SetFunction::from(4, [](unsigned mask) {
    return static_cast<double>(std::popcount(mask));
  });
  CHECK(is_push_down(modular).ok);

  SetFunction singleton = SetFunction::from(3, [](unsigned mask) {
    return std::popcount(mask) == 1 ? 1.0 : 0.0;
  });
  PushDownCheck check = is_push_down(singleton);
  CHECK_FALSE(check.ok);
  CHECK(check.violation.find("submodularity") != std::string::npos);

  SetFunction big = SetFunction::from(6, [](unsigned) { return 0.0; });
  CHECK_THROWS_AS(is_push_down(big), resource_error);
}

TEST_CASE("delta of phi") {
  SetFunction pairs = SetFunction::from(5, [](unsigned mask) {
    int k = std::popcount(mask);
    return k * (k - 1) / 2.0;
  });
  CHECK(delta_of_phi(pairs).values == std::vector<double>{0, 1, 2, 3, 4});
  SetFunction modular = SetFunction::from(4, [](unsigned mask) {
    return 2.5 * std::popcount(mask);
  });
  CHECK(delta_of_phi(modular).values == std::vector<double>{2.5, 2.5, 2.5, 2.5});

  // Telescoping reproduces phi on prefixes.
  DeltaSequence d = delta_of_phi(pairs);
  double acc = 0;
  for (int i = 1; i <= 5; ++i) {
    acc += d.values[i - 1];
    CHECK(acc == pairs((1u << i) - 1));
  }
}

TEST_CASE("pushing-down compression") {
  GridShape m22({2, 2});
  PointSet a{{0, 0}, {1, 1}};
  CHECK(push_down_compress(m22, a, {1}, DominationOrder::lex(1)) ==
        PointSet{{0, 0}, {1, 0}});

  // Fixed point when already compressed, idempotent in general, and
  // cardinality-preserving; repeated compression over all coordinate sets
  // stabilizes on M(4,4).
  GridShape m44({4, 4});
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dv(0, 3);
  std::vector<std::set<int>> subsets{{0}, {1}, {0, 1}};
  for (int trial = 0; trial < 100; ++trial) {
    PointSet s;
    for (int i = 0; i < 9; ++i) s.insert({dv(rng), dv(rng)});
    PointSet cur = s;
    for (int round = 0; round < 64; ++round) {
      PointSet next = cur;
      for (const auto& sub : subsets) {
        DominationOrder order = DominationOrder::lex(static_cast<int>(sub.size()));
        next = push_down_compress(m44, next, sub, order);
        CHECK(next.size() == cur.size());
        CHECK(push_down_compress(m44, next, sub, order) == next);
      }
      if (next == cur) break;
      cur = next;
      CHECK(round < 63);  // must stabilize
    }
  }
}

TEST_CASE("compression never decreases phi^2 for push-down phi on downsets") {
  SetFunction pairs = SetFunction::from(4, [](unsigned mask) {
    int k = std::popcount(mask);
    return k * (k - 1) / 2.0;
  });
  GridShape m44({4, 4});
  enumerate_downsets_2d(4, 4, [&](const std::vector<int>& h) {
    PointSet a;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < h[x]; ++y) a.insert({x, y});
    for (const std::set<int>& sub : {std::set<int>{0}, std::set<int>{1}}) {
      PointSet c = push_down_compress(m44, a, sub, DominationOrder::lex(1));
      CHECK(phi_power(pairs, 2, c) >= phi_power(pairs, 2, a));
    }
  });
}

TEST_CASE("local-global and Lindsay reports") {
  AgreementReport lg = verify_local_global(3, 3);
  CHECK(lg.all_agree);
  CHECK(lg.agree.size() == 28);

  CHECK(lindsay_check({3, 4}).all_agree);
  CHECK(lindsay_check({2}).all_agree);
  CHECK_THROWS_AS(lindsay_check({}), std::domain_error);
}
