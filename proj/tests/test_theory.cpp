#include <catch2/catch_amalgamated.hpp>

#include <crater/theory.hpp>

using namespace crater;
using Catch::Matchers::ContainsSubstring;

namespace {
using Profile = std::map<u64, u64>;

u64 mass(const Profile& p) {
  u64 t = 0;
  for (auto [sz, cnt] : p) t += sz * cnt;
  return t;
}
}  // namespace

TEST_CASE("crater classification") {
  QuadOrder O71(-71);
  auto cc = classify_crater(O71, 5);
  REQUIRE(cc.splitting == Splitting::split);
  REQUIRE(cc.l == QuadIdeal(O71, 5, 3, 1));
  REQUIRE(cc.eigenvalue == 2);
  REQUIRE(cc.n == 7);
  REQUIRE(cc.lambda == QuadOrder::Elem{-277, -4});
  REQUIRE(cc.shape == CraterShape::cycle);
  REQUIRE(crater_shape(O71, 5) == CraterShape::cycle);

  QuadOrder O44(-44);
  auto c44 = classify_crater(O44, 3);
  REQUIRE(c44.l == QuadIdeal(O44, 3, 2, 1));
  REQUIRE(c44.eigenvalue == 1);
  REQUIRE(c44.n == 3);
  REQUIRE(c44.lambda == QuadOrder::Elem{4, -1});

  QuadOrder O124(-124);
  auto c124 = classify_crater(O124, 5);
  REQUIRE(c124.l == QuadIdeal(O124, 5, 3, 1));
  REQUIRE(c124.n == 3);
  REQUIRE(c124.lambda == QuadOrder::Elem{-1, -2});

  // the four degenerate shapes
  REQUIRE(crater_shape(QuadOrder(-7), 2) == CraterShape::two_loops);
  REQUIRE(classify_crater(QuadOrder(-7), 2).n == 1);
  REQUIRE(classify_crater(QuadOrder(-7), 2).lambda == QuadOrder::Elem{0, -1});
  REQUIRE(crater_shape(QuadOrder(-8), 2) == CraterShape::one_loop);
  REQUIRE(crater_shape(QuadOrder(-20), 2) == CraterShape::single_edge);
  REQUIRE(classify_crater(QuadOrder(-20), 2).n == 2);
  REQUIRE(classify_crater(QuadOrder(-20), 2).lambda == QuadOrder::Elem{2, 0});

  // inert: explicit refusal
  REQUIRE(classify_crater(O44, 7).splitting == Splitting::inert);
  REQUIRE_THROWS_WITH(crater_shape(O44, 7), ContainsSubstring("totally disconnected"));
  // ell inside the conductor is not a crater direction at all
  REQUIRE_THROWS_AS(classify_crater(O44, 2), std::invalid_argument);
}

TEST_CASE("vertex count closed forms") {
  REQUIRE(vertex_count(7, 6, LevelKind::gamma0) == 84);
  REQUIRE(vertex_count(3, 5, LevelKind::gamma1) == 36);
  REQUIRE(vertex_count(5, 2, LevelKind::gamma1) == 15);
  REQUIRE(vertex_count(4, 1, LevelKind::full) == 4);
  REQUIRE(structure_count(5, LevelKind::full) == 240);
  REQUIRE(structure_count(6, LevelKind::full) == 144);
  REQUIRE(structure_count(2, LevelKind::full) == 6);
  REQUIRE(structure_count(12, LevelKind::full) == 2304);
  // closed form against brute enumeration (the ring only sees N)
  QuadOrder O71(-71);
  for (u64 N = 2; N <= 8; ++N) {
    ResRing R(O71, N);
    for (LevelKind k : {LevelKind::gamma0, LevelKind::gamma1, LevelKind::full})
      REQUIRE(structure_count(N, k) == enumerate_structures(R, k).size());
  }
}

TEST_CASE("predictions for the three worked examples") {
  QuadOrder O71(-71), O44(-44), O124(-124);

  auto p1 = predict(O71, 5, 6, LevelKind::gamma0);
  REQUIRE(p1.n == 7);
  REQUIRE(p1.profile == Profile{{7, 6}, {14, 3}});
  REQUIRE(p1.vertex_total == 84);
  REQUIRE(p1.structure_profile == Profile{{1, 6}, {2, 3}});
  REQUIRE_FALSE(p1.two_generator_differs);
  REQUIRE(p1.strata.size() == 9);
  u64 total = 0;
  for (const auto& row : p1.strata) {
    REQUIRE(row.structures == row.phi / 2);
    REQUIRE(row.structures == row.orbit_size * row.components);
    total += row.structures;
  }
  REQUIRE(total == 12);

  auto p2 = predict(O124, 5, 3, LevelKind::gamma0);
  REQUIRE(p2.n == 3);
  REQUIRE(p2.profile == Profile{{12, 1}});
  REQUIRE(p2.strata.size() == 1);
  REQUIRE(p2.strata[0].orbit_size == 4);
  REQUIRE(p2.fast_path_checked);

  auto p3 = predict(O44, 3, 5, LevelKind::gamma1);
  REQUIRE(p3.n == 3);
  REQUIRE(p3.profile == Profile{{3, 2}, {6, 1}, {12, 2}});
  REQUIRE(p3.vertex_total == 36);
  REQUIRE(p3.two_generator_profile == Profile{{6, 2}, {24, 1}});
  REQUIRE(p3.two_generator_differs);
  REQUIRE(p3.fast_path_checked);
  REQUIRE_FALSE(p3.fast_path_literal_differs);
  // stratum inventory: the two eigen-directions and the free part
  REQUIRE(p3.strata.size() == 3);
  REQUIRE(p3.strata[0].annihilator == QuadIdeal(O44, 5, 3, 1));
  REQUIRE(p3.strata[0].level_ideal == QuadIdeal(O44, 5, 2, 1));
  REQUIRE(p3.strata[0].orbit_size == 2);
  REQUIRE(p3.strata[1].annihilator == QuadIdeal(O44, 5, 2, 1));
  REQUIRE(p3.strata[1].orbit_size == 1);
  REQUIRE(p3.strata[2].annihilator == QuadIdeal::of_integer(O44, 5));
  REQUIRE(p3.strata[2].orbit_size == 4);
  REQUIRE(p3.strata[2].structures == 8);

  auto p3b = predict(O44, 3, 5, LevelKind::gamma0);
  REQUIRE(p3b.profile == Profile{{3, 2}, {12, 1}});

  auto p3f = predict(O44, 3, 5, LevelKind::full);
  REQUIRE(p3f.profile == Profile{{12, 60}});
  REQUIRE(p3f.vertex_total == 720);
  REQUIRE(p3f.two_generator_profile == Profile{{24, 30}});
}

TEST_CASE("degenerate and edge levels") {
  QuadOrder O71(-71);
  for (LevelKind k : {LevelKind::gamma0, LevelKind::gamma1, LevelKind::full}) {
    auto p = predict(O71, 5, 1, k);
    REQUIRE(p.profile == Profile{{7, 1}});
    REQUIRE(p.vertex_total == 7);
  }
  // a split-principal direction (n = 1) still produces a genuine cycle
  auto p7 = predict(QuadOrder(-7), 2, 3, LevelKind::gamma0);
  REQUIRE(p7.n == 1);
  REQUIRE(p7.shape == CraterShape::two_loops);
  REQUIRE(p7.profile == Profile{{4, 1}});
  // ramified crater direction with two vertices
  auto p8 = predict(QuadOrder(-8), 2, 3, LevelKind::gamma0);
  REQUIRE(p8.n == 1);
  REQUIRE(p8.profile == Profile{{1, 2}, {2, 1}});
  // level 2: no +-identification anywhere
  auto p2 = predict(O71, 5, 2, LevelKind::gamma1);
  REQUIRE(p2.vertex_total == 21);
  REQUIRE(mass(p2.profile) == 21);
}

TEST_CASE("prime level with ramified factorization flags the literal text") {
  QuadOrder O44(-44);
  auto pg1 = predict(O44, 3, 11, LevelKind::gamma1);
  REQUIRE(pg1.profile == Profile{{15, 1}, {165, 1}});
  REQUIRE(pg1.vertex_total == 180);
  REQUIRE(pg1.fast_path_checked);
  REQUIRE(pg1.fast_path_literal_differs);
  auto pg0 = predict(O44, 3, 11, LevelKind::gamma0);
  REQUIRE(pg0.profile == Profile{{3, 1}, {33, 1}});
}

TEST_CASE("prediction parameter validation") {
  QuadOrder O71(-71), O44(-44);
  REQUIRE_THROWS_AS(predict(O71, 5, 10, LevelKind::gamma0), std::invalid_argument);
  REQUIRE_THROWS_AS(predict(O44, 3, 10, LevelKind::gamma0), std::invalid_argument);
  REQUIRE_THROWS_WITH(predict(O44, 7, 5, LevelKind::gamma0),
                      ContainsSubstring("totally disconnected"));
  REQUIRE_THROWS_AS(predict(O71, 6, 5, LevelKind::gamma0), std::invalid_argument);
  REQUIRE_THROWS_AS(predict(O71, 5, 0, LevelKind::gamma0), std::invalid_argument);
}

TEST_CASE("prediction sanity across a small parameter box") {
  for (i64 D : {-71, -44, -124}) {
    QuadOrder O(D);
    i64 f = conductor_of(D);
    for (u64 ell : {2, 3, 5, 7}) {
      if (f % static_cast<i64>(ell) == 0) continue;
      if (primes_over(O, ell).type == Splitting::inert) continue;
      for (u64 N = 2; N <= 8; ++N) {
        if (std::gcd(N, ell) != 1 || std::gcd(static_cast<i64>(N), f) != 1) continue;
        for (LevelKind k : {LevelKind::gamma0, LevelKind::gamma1, LevelKind::full}) {
          auto p = predict(O, ell, N, k);
          REQUIRE(mass(p.profile) == p.vertex_total);
          for (auto [sz, cnt] : p.profile) {
            (void)cnt;
            REQUIRE(sz % p.n == 0);
          }
          // gamma0 profiles cannot see the difference between l and lbar
          if (k == LevelKind::gamma0) REQUIRE_FALSE(p.two_generator_differs);
          REQUIRE(mass(p.two_generator_profile) == p.vertex_total);
        }
      }
    }
  }
}

TEST_CASE("generalized class group orders") {
  QuadOrder O71(-71), O44(-44), O124(-124);
  REQUIRE(suborder_class_number(O124, 3) == 12);
  REQUIRE(suborder_class_number(O71, 2) == 7);
  REQUIRE(suborder_class_number(O71, 1) == 7);
  REQUIRE(suborder_class_number(O44, 3) == 6);
  REQUIRE(suborder_class_number(QuadOrder(-3), 2) == 1);
  REQUIRE(suborder_class_number(QuadOrder(-4), 2) == 1);
  REQUIRE_THROWS_AS(suborder_class_number(O44, 2), std::invalid_argument);

  REQUIRE(ray_class_number(O44, 5) == 24);
  REQUIRE(ray_class_number(O71, 6) == 14);
  REQUIRE(ray_class_number(O71, 2) == 7);
  REQUIRE(ray_class_number(O71, 1) == 7);
  REQUIRE(ray_class_number(O124, 3) == 12);
  REQUIRE(generalized_class_group_orders(O124, 3) == std::pair<u64, u64>{12, 12});

  // subgroup orders inside the ray class group
  auto rs = ray_subgroup(O44, 3, 5);
  REQUIRE(rs.n == 3);
  REQUIRE(rs.order_l == 12);
  REQUIRE(rs.order_pair == 24);
  auto rs71 = ray_subgroup(O71, 5, 6);
  REQUIRE(rs71.n == 7);
  REQUIRE(rs71.order_l == 14);
  REQUIRE(rs71.order_pair == 14);

  // principality tests behind those orders
  REQUIRE(ray_principal(O44, 3, 5, 0, 0));
  REQUIRE(ray_principal(O44, 3, 5, 12, 0));
  REQUIRE_FALSE(ray_principal(O44, 3, 5, 3, 0));
  REQUIRE_FALSE(ray_principal(O44, 3, 5, 6, 0));
  REQUIRE_FALSE(ray_principal(O44, 3, 5, 1, 1));
  REQUIRE(ray_principal(O44, 3, 5, 2, 2));
  // order of <[l], [lbar]> shows up as the largest merged component
  auto p3 = predict(O44, 3, 5, LevelKind::gamma1);
  REQUIRE(p3.two_generator_profile.rbegin()->first == rs.order_pair);
}
