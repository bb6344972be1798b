#include <algorithm>

#include "doctest.h"
#include "primaltop/theorems.hpp"
#include "primaltop/topology.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace primaltop;

TEST_SUITE_BEGIN("topology");

namespace {

Topology topo(const UniversePtr& u,
              std::initializer_list<std::initializer_list<std::string_view>> opens) {
  return Topology::validate(SetFamily::of(u, opens));
}

}  // namespace

TEST_CASE("validation accepts the axioms and names violations") {
  auto u = fixtures::abc();
  CHECK_NOTHROW(Topology::indiscrete(u));
  CHECK_NOTHROW(topo(u, {{}, {"b"}, {"c"}, {"b", "c"}, {"a", "c"}, {"a", "b", "c"}}));

  try {
    topo(u, {{}, {"a"}, {"b"}, {"a", "b", "c"}});
    FAIL("expected a union-closure violation");
  } catch (const TopologyValidationError& e) {
    CHECK(e.kind() == TopologyValidationError::Kind::NotClosedUnderUnion);
    CHECK(e.code() == "not-closed-under-union");
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == Subset::of(u, {"a"}).bits());
    CHECK(e.witness()[1] == Subset::of(u, {"b"}).bits());
  }

  CHECK_THROWS_WITH_AS(topo(u, {{"a"}, {"a", "b", "c"}}), "the empty set is not open",
                       TopologyValidationError);
  try {
    topo(u, {{}, {"a"}});
    FAIL("expected a missing-universe violation");
  } catch (const TopologyValidationError& e) {
    CHECK(e.kind() == TopologyValidationError::Kind::MissingUniverse);
  }
  try {
    topo(u, {{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}});
    FAIL("expected an intersection-closure violation");
  } catch (const TopologyValidationError& e) {
    CHECK(e.kind() == TopologyValidationError::Kind::NotClosedUnderIntersection);
  }
}

TEST_CASE("interior and closure") {
  auto u = fixtures::abc();
  Topology ind = Topology::indiscrete(u);
  CHECK(ind.interior(Subset::of(u, {"a"})) == Subset::empty(u));
  CHECK(ind.closure(Subset::full(u)) == Subset::full(u));

  Topology t = topo(u, {{}, {"a"}, {"c"}, {"a", "c"}, {"a", "b", "c"}});
  CHECK(t.closure(Subset::of(u, {"a"})) == Subset::of(u, {"a", "b"}));
  CHECK(t.closure(Subset::of(u, {"a"})).bits() ==
        naive::closure({0b000, 0b001, 0b100, 0b101, 0b111}, 3, 0b001));
  // Duality against the interior of the complement.
  for (const Subset& a : Powerset(u))
    CHECK(t.closure(a) == t.interior(a.complement()).complement());
}

TEST_CASE("open neighborhoods") {
  auto u = fixtures::abc();
  CHECK(Topology::indiscrete(u).open_neighborhoods("a") ==
        SetFamily::of(u, {{"a", "b", "c"}}));
  Topology t = topo(u, {{}, {"a"}, {"c"}, {"a", "c"}, {"a", "b", "c"}});
  CHECK(t.open_neighborhoods("b") == SetFamily::of(u, {{"a", "b", "c"}}));
  CHECK(t.open_neighborhoods("a") ==
        SetFamily::of(u, {{"a"}, {"a", "c"}, {"a", "b", "c"}}));
  CHECK_THROWS_AS(t.open_neighborhoods("z"), UnknownPointError);
}

TEST_CASE("regular open families") {
  auto u = fixtures::abc();
  Topology ta = fixtures::ex_a().topology();
  CHECK(ta.regular_open_family() ==
        SetFamily::of(u, {{}, {"b"}, {"a", "c"}, {"a", "b", "c"}}));

  Topology td = fixtures::ex_d().topology();
  CHECK(td.regular_open_family() == SetFamily::of(u, {{}, {"a", "b", "c"}}));

  for (const Topology* t : {&ta, &td}) {
    CHECK(t->is_regular_open(Subset::empty(u)));
    CHECK(t->is_regular_open(Subset::full(u)));
  }
  CHECK(ta.regular_closed_family() ==
        SetFamily::of(u, {{}, {"b"}, {"a", "c"}, {"a", "b", "c"}}));
}

TEST_CASE("delta interior and closure") {
  auto u = fixtures::abc();
  Topology td = fixtures::ex_d().topology();
  CHECK(td.delta_interior(Subset::full(u)) == Subset::full(u));
  CHECK(td.delta_interior(Subset::of(u, {"a", "b"})) == Subset::empty(u));
  CHECK(td.delta_closure(Subset::of(u, {"c"})) == Subset::full(u));
}

TEST_CASE("delta open family") {
  auto u = fixtures::abc();
  CHECK(fixtures::ex_d().topology().delta_open_family() ==
        SetFamily::of(u, {{}, {"a", "b", "c"}}));
  Topology te = fixtures::ex_e().topology();
  CHECK(te.delta_open_family() == te.opens());
  CHECK(Topology::indiscrete(u).delta_open_family() == SetFamily::of(u, {{}, {"a", "b", "c"}}));

  CHECK(te.is_delta_open(Subset::of(u, {"a", "b"})));
  CHECK(te.is_delta_closed(Subset::of(u, {"c"})));
  CHECK(!te.is_delta_open(Subset::of(u, {"a", "c"})));
}

TEST_CASE("regularity and hausdorff predicates") {
  auto u = fixtures::abc();
  CHECK(Topology::discrete(u).is_regular_space());
  CHECK(Topology::indiscrete(u).is_regular_space());
  CHECK(!fixtures::ex_d().topology().is_regular_space());

  CHECK(Topology::discrete(u).is_hausdorff());
  CHECK(!Topology::indiscrete(u).is_hausdorff());
  CHECK(!fixtures::ex_d().topology().is_hausdorff());

  // A clopen partition topology is regular but not Hausdorff.
  Topology part = topo(u, {{}, {"a"}, {"b", "c"}, {"a", "b", "c"}});
  CHECK(part.is_regular_space());
  CHECK(!part.is_hausdorff());
}

TEST_CASE("one-point universe needs no special cases") {
  auto u = Universe::make({"a"});
  Topology t = Topology::indiscrete(u);
  CHECK(t.opens() == Topology::discrete(u).opens());
  CHECK(t.interior(Subset::full(u)) == Subset::full(u));
  CHECK(t.delta_open_family().size() == 2);
  CHECK(t.is_regular_space());
  CHECK(t.is_hausdorff());
}

TEST_CASE("duality and structural invariants over every small topology") {
  for (int n = 1; n <= 4; ++n) {
    auto u = Universe::make(default_point_names(n));
    for (const Topology& t : enumerate_topologies(u)) {
      for (const Subset& a : Powerset(u)) {
        CHECK(t.delta_closure(a.complement()) == t.delta_interior(a).complement());
        CHECK(t.delta_interior(a.complement()) == t.delta_closure(a).complement());
      }
      // Regular opens intersect within the family; every regular open and
      // every delta-open set is open; tau_delta is itself a topology.
      const auto& ro = t.regular_open_family();
      for (const Subset& x : ro.members())
        for (const Subset& y : ro.members()) CHECK(ro.contains(x & y));
      for (const Subset& x : ro.members()) CHECK(t.is_open(x));
      for (const Subset& x : t.delta_open_family().members()) CHECK(t.is_open(x));
      CHECK_NOTHROW(Topology::validate(t.delta_open_family()));
    }
  }
}

TEST_CASE("axiom checking on families too large for the pair scan") {
  auto u = Universe::make(default_point_names(12));
  std::vector<Bits> all;
  for (Bits m = 0; m <= u->full_mask(); ++m) all.push_back(m);
  CHECK_NOTHROW(require_topology_axioms(SetFamily(u, all)));

  std::vector<Bits> broken = all;
  broken.erase(std::find(broken.begin(), broken.end(), Bits{3}));  // drop {a,b}
  try {
    require_topology_axioms(SetFamily(u, broken));
    FAIL("expected a union-closure violation");
  } catch (const TopologyValidationError& e) {
    CHECK(e.kind() == TopologyValidationError::Kind::NotClosedUnderUnion);
    REQUIRE(e.witness().size() == 2);
    CHECK((e.witness()[0] | e.witness()[1]) == 3);
  }

  std::vector<Bits> no_min;  // unions of {a,b} and {b,c} without their meet {b}
  for (Bits m = 0; m <= u->full_mask(); ++m)
    if (m != 2 && m != 6 && m != 3) no_min.push_back(m);
  try {
    require_topology_axioms(SetFamily(u, no_min));
    FAIL("expected a closure violation");
  } catch (const TopologyValidationError& e) {
    const SetFamily f(u, no_min);
    REQUIRE(e.witness().size() == 2);
    CHECK(f.contains_bits(e.witness()[0]));
    CHECK(f.contains_bits(e.witness()[1]));
    const Bits combined = e.kind() == TopologyValidationError::Kind::NotClosedUnderUnion
                              ? (e.witness()[0] | e.witness()[1])
                              : (e.witness()[0] & e.witness()[1]);
    CHECK(!f.contains_bits(combined));
  }
}

TEST_CASE("caches match naive recomputation") {
  auto check_topology = [](const Topology& t) {
    const int n = t.universe().size();
    const naive::Family opens(t.open_bits().begin(), t.open_bits().end());
    CHECK(t.regular_open_family().member_bits() == naive::regular_open_family(opens, n));
    CHECK(t.delta_open_family().member_bits() == naive::delta_open_family(opens, n));
    for (Bits m = 0; m <= t.universe().full_mask(); ++m) {
      CHECK(t.interior_bits(m) == naive::interior(opens, m));
      CHECK(t.closure_bits(m) == naive::closure(opens, n, m));
      CHECK(t.delta_interior_bits(m) == naive::delta_interior(opens, n, m));
      CHECK(t.delta_closure_bits(m) == naive::delta_closure(opens, n, m));
    }
  };
  check_topology(fixtures::ex_a().topology());
  check_topology(fixtures::ex_c().topology());
  check_topology(fixtures::ex_d().topology());
}

TEST_SUITE_END();
