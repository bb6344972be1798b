#include <random>

#include "doctest.h"
#include "primaltop/primal.hpp"
#include "primaltop/theorems.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace primaltop;

TEST_SUITE_BEGIN("primal");

namespace {

SetFamily family_from_mask(const UniversePtr& u, std::uint64_t mask) {
  std::vector<Bits> members;
  for (Bits m = 0; m <= u->full_mask(); ++m)
    if ((mask >> m) & 1u) members.push_back(m);
  return SetFamily(u, std::move(members));
}

}  // namespace

TEST_CASE("validation accepts the axioms and names violations") {
  auto u = fixtures::abc();
  CHECK_NOTHROW(Primal::validate(SetFamily::of(u, {{}, {"b"}, {"c"}, {"b", "c"}})));
  CHECK_NOTHROW(Primal::validate(
      SetFamily::of(u, {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}})));

  try {
    Primal::validate(SetFamily::of(u, {{}, {"a", "b"}}));
    FAIL("expected a downward-closure violation");
  } catch (const PrimalValidationError& e) {
    CHECK(e.kind() == PrimalValidationError::Kind::NotDownwardClosed);
    CHECK(e.code() == "not-downward-closed");
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == Subset::of(u, {"a", "b"}).bits());
    CHECK((e.witness()[1] & ~e.witness()[0]) == 0);  // witness is a missing subset
  }

  try {
    Primal::validate(family_from_mask(u, 0xFF));  // the full powerset
    FAIL("expected a contains-universe violation");
  } catch (const PrimalValidationError& e) {
    CHECK(e.kind() == PrimalValidationError::Kind::ContainsUniverse);
  }

  const SetFamily bad = SetFamily::of(u, {{}, {"a"}, {"b"}});
  try {
    Primal::validate(bad);
    FAIL("expected an intersection violation");
  } catch (const PrimalValidationError& e) {
    CHECK(e.kind() == PrimalValidationError::Kind::IntersectionViolation);
    REQUIRE(e.witness().size() == 2);
    CHECK(bad.contains_bits(e.witness()[0] & e.witness()[1]));
    CHECK(!bad.contains_bits(e.witness()[0]));
    CHECK(!bad.contains_bits(e.witness()[1]));
  }
}

TEST_CASE("empty family is a primal, the powerset is not") {
  auto u = fixtures::abc();
  CHECK_NOTHROW(Primal::empty(u));
  CHECK(satisfies_primal_axioms(SetFamily(u, {})));
  CHECK(satisfies_primal_axioms_dual(SetFamily(u, {})));
  CHECK(!satisfies_primal_axioms_dual(family_from_mask(u, 0xFF)));
}

TEST_CASE("direct and dual axiom forms agree on every family up to three points") {
  for (int n = 1; n <= 3; ++n) {
    auto u = Universe::make(default_point_names(n));
    const std::uint64_t families = std::uint64_t{1} << (u->full_mask() + 1);
    for (std::uint64_t mask = 0; mask < families; ++mask) {
      const SetFamily f = family_from_mask(u, mask);
      CHECK(satisfies_primal_axioms(f) == satisfies_primal_axioms_dual(f));
      CHECK(satisfies_primal_axioms(f) ==
            naive::is_primal(naive::Family(f.member_bits().begin(), f.member_bits().end()), n));
    }
  }
}

TEST_CASE("axiom forms agree on sampled families at four points") {
  auto u = Universe::make(default_point_names(4));
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 5000; ++i) {
    const SetFamily f = family_from_mask(u, rng() & 0xFFFF);
    CHECK(satisfies_primal_axioms(f) == satisfies_primal_axioms_dual(f));
  }
}

TEST_CASE("point primal") {
  auto u = fixtures::abc();
  CHECK(Primal::point_primal(u, "a").members() ==
        SetFamily::of(u, {{}, {"b"}, {"c"}, {"b", "c"}}));
  auto one = Universe::make({"a"});
  CHECK(Primal::point_primal(one, "a").members() == SetFamily::of(one, {{}}));
  CHECK_THROWS_AS(Primal::point_primal(u, "z"), UnknownPointError);
  for (int n = 1; n <= 4; ++n) {
    auto v = Universe::make(default_point_names(n));
    for (const auto& name : v->points())
      CHECK_NOTHROW(Primal::point_primal(v, name));  // validated on construction
  }
}

TEST_CASE("enumeration is canonical, complete and bounded") {
  auto one = Universe::make({"a"});
  const auto primals1 = enumerate_primals(one);
  REQUIRE(primals1.size() == 2);
  CHECK(primals1[0].members().empty());
  CHECK(primals1[1].members() == SetFamily::of(one, {{}}));

  auto two = Universe::make({"a", "b"});
  CHECK(enumerate_primals(two).size() == 4);
  auto three = fixtures::abc();
  const auto primals3 = enumerate_primals(three);
  CHECK(primals3.size() == 8);

  for (const Primal& p : primals3) CHECK(satisfies_primal_axioms_dual(p.members()));

  // Canonical order: strictly increasing characteristic masks.
  std::uint64_t previous = 0;
  bool first = true;
  for (const Primal& p : primals3) {
    std::uint64_t mask = 0;
    for (Bits m : p.members().member_bits()) mask |= std::uint64_t{1} << m;
    if (!first) CHECK(mask > previous);
    previous = mask;
    first = false;
  }

  auto five = Universe::make(default_point_names(5));
  CHECK_THROWS_AS(enumerate_primals(five), BoundError);
}

TEST_CASE("every enumerated primal avoids some witness set") {
  // Second route: on a finite universe the primals are exactly the families
  // {B : S not within B} for S over the subsets of X.
  for (int n = 1; n <= 4; ++n) {
    auto u = Universe::make(default_point_names(n));
    const auto enumerated = enumerate_primals(u);
    std::vector<std::vector<Bits>> expected;
    for (Bits s = 0; s <= u->full_mask(); ++s) {
      std::vector<Bits> members;
      for (Bits b = 0; b <= u->full_mask(); ++b)
        if (s & ~b) members.push_back(b);
      expected.push_back(SetFamily(u, members).member_bits());
    }
    std::sort(expected.begin(), expected.end());
    std::vector<std::vector<Bits>> actual;
    for (const Primal& p : enumerated) actual.push_back(p.members().member_bits());
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);
  }
}

TEST_CASE("primal space construction checks the shared universe") {
  auto u = fixtures::abc();
  auto v = Universe::make({"x", "y"});
  CHECK_THROWS_AS(
      PrimalSpace::create(Topology::indiscrete(u), Primal::empty(v)), UniverseMismatchError);
  CHECK_NOTHROW(PrimalSpace::create(Topology::indiscrete(u), Primal::point_primal(u, "a")));
}

TEST_SUITE_END();
