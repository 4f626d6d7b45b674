#include <catch2/catch_amalgamated.hpp>

#include <crater/resring.hpp>

using namespace crater;

namespace {

// Stabilizer of a structure by brute filter over the unit group.
std::vector<ResRing::Elem> stab_filter(const ResRing& R, LevelKind kind, const LevelStructure& S) {
  std::vector<ResRing::Elem> out;
  for (const auto& u : R.all_units())
    if (act_unit(R, kind, S, u) == S) out.push_back(u);
  return out;
}

u64 structure_total(const std::map<u64, u64>& prof) {
  u64 t = 0;
  for (auto [sz, cnt] : prof) t += sz * cnt;
  return t;
}

}  // namespace

TEST_CASE("residue ring arithmetic and units") {
  QuadOrder O44(-44);
  ResRing R(O44, 5);
  REQUIRE(R.all_units().size() == 16);
  REQUIRE(R.make(-1, -2) == ResRing::Elem{4, 3});
  auto lam = R.make(4, -1);  // 4 - Phi
  REQUIRE(R.is_unit(lam));
  REQUIRE(R.unit_order(lam) == 4);
  REQUIRE(R.pow(lam, 2) == R.make(0, 2));  // lambda^2 = 2 Phi mod 5
  REQUIRE(R.mul(lam, R.inv(lam)) == R.one());
  for (const auto& u : R.all_units()) {
    REQUIRE(R.mul(u, R.inv(u)) == R.one());
    for (const auto& v : R.all_units()) {
      REQUIRE(R.norm(R.mul(u, v)) == (R.norm(u) * R.norm(v)) % R.N);
      REQUIRE(R.conj(R.mul(u, v)) == R.mul(R.conj(u), R.conj(v)));
    }
  }

  QuadOrder O71(-71);
  ResRing R6(O71, 6);
  REQUIRE(R6.all_units().size() == 4);
  REQUIRE(R6.unit_order(R6.make(5, 2)) == 2);  // the projected walk generator
  REQUIRE(R6.additive_order(R6.make(2, 4)) == 3);
  REQUIRE(R6.additive_order(R6.make(1, 3)) == 6);
}

TEST_CASE("structure inventories by kind") {
  QuadOrder O71(-71);
  ResRing R6(O71, 6);
  REQUIRE(enumerate_structures(R6, LevelKind::gamma0).size() == 12);
  REQUIRE(enumerate_structures(R6, LevelKind::gamma1).size() == 12);
  REQUIRE(enumerate_structures(R6, LevelKind::full).size() == 144);

  ResRing R2(O71, 2);
  REQUIRE(enumerate_structures(R2, LevelKind::gamma0).size() == 3);
  REQUIRE(enumerate_structures(R2, LevelKind::gamma1).size() == 3);
  REQUIRE(enumerate_structures(R2, LevelKind::full).size() == 6);

  QuadOrder O44(-44);
  ResRing R5(O44, 5);
  REQUIRE(enumerate_structures(R5, LevelKind::gamma0).size() == 6);
  REQUIRE(enumerate_structures(R5, LevelKind::gamma1).size() == 12);
  REQUIRE(enumerate_structures(R5, LevelKind::full).size() == 240);
}

TEST_CASE("orbit profiles reproduce the worked examples") {
  // Size-5 level over disc -44: lambda = 4 - Phi acting on point structures.
  QuadOrder O44(-44);
  ResRing R5(O44, 5);
  auto lam = R5.make(4, -1);
  auto lam_bar = R5.conj(lam);
  auto prof = orbit_profile(R5, LevelKind::gamma1, {lam});
  REQUIRE(prof == std::map<u64, u64>{{1, 2}, {2, 1}, {4, 2}});
  // with the conjugate adjoined the free stratum fuses into one orbit of 8
  auto prof2 = orbit_profile(R5, LevelKind::gamma1, {lam, lam_bar});
  REQUIRE(prof2 == std::map<u64, u64>{{2, 2}, {8, 1}});

  // the free-point orbit itself: 4 under lambda, 8 under both generators
  auto free_struct = canonical_structure(R5, LevelKind::gamma1, {{1, 0}});
  for (const auto& orb : structure_orbits(R5, LevelKind::gamma1, {lam}))
    if (std::find(orb.begin(), orb.end(), free_struct) != orb.end()) REQUIRE(orb.size() == 4);
  for (const auto& orb : structure_orbits(R5, LevelKind::gamma1, {lam, lam_bar}))
    if (std::find(orb.begin(), orb.end(), free_struct) != orb.end()) REQUIRE(orb.size() == 8);

  // Size-6 level over disc -71, gamma0: three orbits of 2 and six fixed.
  QuadOrder O71(-71);
  ResRing R6(O71, 6);
  auto prof71 = orbit_profile(R6, LevelKind::gamma0, {R6.make(5, 2)});
  REQUIRE(prof71 == std::map<u64, u64>{{1, 6}, {2, 3}});

  // Size-2 level over disc -71, gamma1: everything is fixed.
  ResRing R2(O71, 2);
  auto prof2g = orbit_profile(R2, LevelKind::gamma1, {R2.make(1, 0)});
  REQUIRE(prof2g == std::map<u64, u64>{{1, 3}});

  // Size-3 level over disc -124 (inert), gamma0: one orbit of all four lines.
  QuadOrder O124(-124);
  ResRing R3(O124, 3);
  auto lam124 = R3.make(-1, -2);
  REQUIRE(R3.unit_order(lam124) == 8);
  auto prof124 = orbit_profile(R3, LevelKind::gamma0, {lam124});
  REQUIRE(prof124 == std::map<u64, u64>{{4, 1}});
}

TEST_CASE("orbit bookkeeping is conservative") {
  QuadOrder O44(-44);
  ResRing R5(O44, 5);
  auto lam = R5.make(4, -1);
  for (LevelKind kind : {LevelKind::gamma0, LevelKind::gamma1, LevelKind::full}) {
    auto total = enumerate_structures(R5, kind).size();
    auto prof = orbit_profile(R5, kind, {lam});
    REQUIRE(structure_total(prof) == total);
    // orbit sizes divide the order of the acting unit
    for (auto [sz, cnt] : prof) {
      (void)cnt;
      REQUIRE(R5.unit_order(lam) % sz == 0);
    }
  }
}

TEST_CASE("annihilators of points and bases") {
  QuadOrder O44(-44);
  ResRing R5(O44, 5);
  auto fiveO = QuadIdeal::of_integer(O44, 5);
  auto free_pt = canonical_structure(R5, LevelKind::gamma1, {{1, 0}});
  REQUIRE(structure_annihilator(R5, LevelKind::gamma1, free_pt) == fiveO);
  // (3, 1) spans the prime (5, Phi + 3), so the other prime kills it
  auto bound_pt = canonical_structure(R5, LevelKind::gamma1, {{3, 1}});
  REQUIRE(structure_annihilator(R5, LevelKind::gamma1, bound_pt) == QuadIdeal(O44, 5, 2, 1));
  auto basis = canonical_structure(R5, LevelKind::full, {{1, 0}, {0, 1}});
  REQUIRE(structure_annihilator(R5, LevelKind::full, basis) == fiveO);
}

TEST_CASE("stabilizers match their lattice descriptions") {
  QuadOrder O44(-44);
  ResRing R5(O44, 5);

  auto basis = canonical_structure(R5, LevelKind::full, {{1, 0}, {0, 1}});
  auto stab_full = stab_filter(R5, LevelKind::full, basis);
  REQUIRE(stab_full == std::vector<ResRing::Elem>{{1, 0}, {4, 0}});  // exactly +-1

  // free point: stabilizer is +-1 mod NO
  auto free_pt = canonical_structure(R5, LevelKind::gamma1, {{1, 0}});
  REQUIRE(stab_filter(R5, LevelKind::gamma1, free_pt).size() == 2);

  // bound point: alpha = +-1 modulo the annihilator
  auto bound_pt = canonical_structure(R5, LevelKind::gamma1, {{3, 1}});
  auto ann = structure_annihilator(R5, LevelKind::gamma1, bound_pt);
  auto stab = stab_filter(R5, LevelKind::gamma1, bound_pt);
  REQUIRE(stab.size() == 8);
  for (const auto& al : R5.all_units()) {
    bool plus = ann.contains({static_cast<i64>(al.first) - 1, static_cast<i64>(al.second)});
    bool minus = ann.contains({static_cast<i64>(al.first) + 1, static_cast<i64>(al.second)});
    bool in_stab = std::find(stab.begin(), stab.end(), al) != stab.end();
    REQUIRE(in_stab == (plus || minus));
  }

  // cyclic subgroup generated by 1: stabilized exactly by the scalars
  auto line = canonical_structure(R5, LevelKind::gamma0, {{1, 0}});
  auto stab0 = stab_filter(R5, LevelKind::gamma0, line);
  REQUIRE(stab0 == std::vector<ResRing::Elem>{{1, 0}, {2, 0}, {3, 0}, {4, 0}});

  // inclusion chain along forgetting structure
  auto stab1 = stab_filter(R5, LevelKind::gamma1, free_pt);
  for (const auto& u : stab_full)
    REQUIRE(std::find(stab1.begin(), stab1.end(), u) != stab1.end());
  for (const auto& u : stab1) REQUIRE(std::find(stab0.begin(), stab0.end(), u) != stab0.end());
}

TEST_CASE("ideal quotient rings agree with the mod-N ring") {
  QuadOrder O44(-44);
  QuotientRing Q5(QuadIdeal::of_integer(O44, 5));
  REQUIRE(Q5.unit_order(Q5.from({4, -1})) == 4);
  // modulo the two primes above 5 the walk generator projects to 1 and 2
  QuotientRing Qa(QuadIdeal(O44, 5, 2, 1));
  REQUIRE(Qa.unit_order(Qa.from({4, -1})) == 1);
  QuotientRing Qb(QuadIdeal(O44, 5, 3, 1));
  REQUIRE(Qb.unit_order(Qb.from({4, -1})) == 4);
  REQUIRE(Qb.from({4, -1}) == QuotientRing::Elem{2, 0});
  // unit recognition across the box
  QuadOrder O71(-71);
  QuotientRing Q6(QuadIdeal::of_integer(O71, 6));
  ResRing R6(O71, 6);
  u64 units = 0;
  for (i64 x = 0; x < 6; ++x)
    for (i64 y = 0; y < 6; ++y)
      if (Q6.is_unit(Q6.reduce(x, y))) ++units;
  REQUIRE(units == R6.all_units().size());
}
