#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxsort/set_system.hpp"
#include "oracles.hpp"

using namespace coxsort;

namespace {

SetMask mask_of(std::initializer_list<int> one_based) {
  SetMask m = 0;
  for (int i : one_based) m |= SetMask{1} << (i - 1);
  return m;
}

SetSystem system_of(int n, std::initializer_list<std::initializer_list<int>> fam) {
  std::vector<SetMask> sets;
  for (auto s : fam) sets.push_back(mask_of(s));
  return SetSystem::make(n, std::move(sets));
}

// the sorted family of the dihedral square word, hardcoded
SetSystem i24_family() {
  return system_of(4, {{}, {1}, {2}, {1, 2}, {2, 3}, {1, 2, 3}, {2, 3, 4},
                       {1, 2, 3, 4}});
}

}  // namespace

TEST_CASE("accessibility") {
  CHECK(is_accessible(system_of(2, {{}, {1}, {1, 2}})));
  CHECK_FALSE(is_accessible(system_of(2, {{}, {1, 2}})));
  CHECK_FALSE(is_accessible(system_of(2, {{1}, {1, 2}})));  // no empty set
  CHECK(is_accessible(i24_family()));
  CHECK(is_accessible(SetSystem::make(0, {0})));
}

TEST_CASE("the three antimatroid conditions") {
  AntimatroidReport good = is_antimatroid(i24_family());
  CHECK(good.all());
  CHECK(good.flags_agree());

  AntimatroidReport bad = is_antimatroid(system_of(2, {{}, {1}, {2}}));
  CHECK(bad.accessible);
  CHECK_FALSE(bad.augmentation);
  CHECK_FALSE(bad.union_closed);
  CHECK_FALSE(bad.local);

  CHECK(is_antimatroid(system_of(2, {{}, {1}, {2}, {1, 2}})).all());
}

TEST_CASE("supersolvable antimatroids") {
  CHECK(is_supersolvable_antimatroid(i24_family()));
  CHECK_FALSE(is_supersolvable_antimatroid(system_of(2, {{}, {2}, {1, 2}})));
  CHECK_FALSE(is_supersolvable_antimatroid(system_of(2, {{1}, {1, 2}})));

  SetSystem line4 = line_convex_geometry(4);
  CHECK(is_antimatroid(line4).all());
  CHECK_FALSE(is_supersolvable_antimatroid(line4));
  CHECK_FALSE(supersolvable_order_search(line4).has_value());

  // supersolvable under a reordering: swap the roles of 1 and 2
  SetSystem twisted = system_of(2, {{}, {2}, {1, 2}});
  auto witness = supersolvable_order_search(twisted);
  REQUIRE(witness.has_value());
  CHECK(*witness == std::vector<int>{1, 0});
  CHECK(is_supersolvable_antimatroid(twisted, *witness));
}

TEST_CASE("every supersolvable antimatroid is an antimatroid") {
  std::mt19937 rng(512);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    SetSystem sys =
        SetSystem::make(4, oracles::random_accessible_family(4, rng));
    if (!is_supersolvable_antimatroid(sys)) continue;
    ++checked;
    CHECK(is_antimatroid(sys).all());
  }
  CHECK(checked > 20);
}

TEST_CASE("complements") {
  SetSystem sys = system_of(2, {{}, {1}, {1, 2}});
  SetSystem comp = complement_system(sys);
  CHECK(comp == system_of(2, {{1, 2}, {2}, {}}));
  CHECK(complement_system(comp) == sys);
  SetSystem c24 = complement_system(i24_family());
  CHECK(c24.sets.size() == 8);
  CHECK(is_intersection_closed(c24));
  std::mt19937 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    SetSystem r = SetSystem::make(5, oracles::random_accessible_family(5, rng));
    CHECK(complement_system(complement_system(r)) == r);
  }
}

TEST_CASE("closure operators and anti-exchange") {
  // closed sets of 4 collinear points: the contiguous blocks
  SetSystem blocks = complement_system(line_convex_geometry(4));
  ClosureOperator cl(blocks);
  CHECK(cl.tau(0) == 0);
  CHECK(cl.tau(mask_of({1, 3})) == mask_of({1, 2, 3}));
  CHECK(satisfies_antiexchange(cl));

  // rank-2 uniform matroid on 3 points: an exchange closure, so it fails
  SetSystem uniform = system_of(3, {{}, {1}, {2}, {3}, {1, 2, 3}});
  CHECK_FALSE(satisfies_antiexchange(ClosureOperator(uniform)));

  CHECK(satisfies_antiexchange(ClosureOperator(SetSystem::make(0, {0}))));

  CHECK_THROWS_AS(ClosureOperator(system_of(2, {{}, {1}, {2}})),
                  std::invalid_argument);  // ground set missing
  CHECK_THROWS_AS(satisfies_antiexchange(
                      ClosureOperator(system_of(2, {{1}, {2}, {1, 2}}))),
                  std::invalid_argument);  // empty set not closed
}

TEST_CASE("closure operator axioms on small ground sets") {
  std::vector<SetSystem> spaces{
      complement_system(line_convex_geometry(5)),
      complement_system(i24_family()),
      system_of(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}),
      system_of(3, {{}, {1}, {2}, {3}, {1, 2, 3}}),
  };
  for (const SetSystem& space : spaces) {
    ClosureOperator cl(space);
    CHECK(cl.tau(0) == 0);  // empty set closed in all of these
    for (SetMask a = 0; a <= space.full(); ++a) {
      SetMask ta = cl.tau(a);
      CHECK((a & ~ta) == 0);       // extensive
      CHECK(cl.tau(ta) == ta);     // idempotent
      for (SetMask b = a;; b = (b + 1) | a) {  // supersets of a
        CHECK((cl.tau(a) & ~cl.tau(b)) == 0);  // monotone
        if (b == space.full()) break;
      }
      if (space.full() == 0) break;
    }
  }
}

TEST_CASE("line convex geometry") {
  SetSystem g4 = line_convex_geometry(4);
  CHECK(g4 == system_of(4, {{},
                            {1},
                            {4},
                            {1, 2},
                            {1, 4},
                            {3, 4},
                            {1, 2, 3},
                            {1, 2, 4},
                            {1, 3, 4},
                            {2, 3, 4},
                            {1, 2, 3, 4}}));
  CHECK(line_convex_geometry(1) == system_of(1, {{}, {1}}));
  CHECK(line_convex_geometry(0) == SetSystem::make(0, {0}));
  CHECK_THROWS_AS(line_convex_geometry(-1), std::invalid_argument);
}

TEST_CASE("antimatroid conditions agree on all accessible systems, |E| <= 4") {
  for (int n = 0; n <= 4; ++n) {
    SetMask full = n == 0 ? 0 : ((SetMask{1} << n) - 1);
    std::uint32_t families = std::uint32_t{1} << (full + 1);
    for (std::uint32_t bits = 0; bits < families; ++bits) {
      std::vector<SetMask> sets;
      for (SetMask a = 0; a <= full; ++a)
        if (bits >> a & 1) sets.push_back(a);
      SetSystem sys = SetSystem::make(n, std::move(sets));
      if (!is_accessible(sys)) continue;
      AntimatroidReport rep = is_antimatroid(sys);
      CHECK(rep.flags_agree());

      // complement correspondence, on systems covering the ground set
      if (rep.all() && sys.union_of_all() == sys.full()) {
        SetSystem comp = complement_system(sys);
        REQUIRE(comp.contains(0));
        REQUIRE(is_intersection_closed(comp));
        CHECK(satisfies_antiexchange(ClosureOperator(comp)));
      }
      if (rep.accessible && !rep.all() && sys.union_of_all() == sys.full()) {
        SetSystem comp = complement_system(sys);
        bool convex_geometry = is_intersection_closed(comp) &&
                               comp.contains(0) &&
                               satisfies_antiexchange(ClosureOperator(
                                   SetSystem::make(comp.n, comp.sets)));
        CHECK_FALSE(convex_geometry);
      }
    }
  }
}

TEST_CASE("antimatroid conditions agree on 500 random systems, |E| = 5") {
  std::mt19937 rng(20080914);
  for (int trial = 0; trial < 500; ++trial) {
    SetSystem sys = SetSystem::make(5, oracles::random_accessible_family(5, rng));
    REQUIRE(is_accessible(sys));
    CHECK(is_antimatroid(sys).flags_agree());
  }
}
