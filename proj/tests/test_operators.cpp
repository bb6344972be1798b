#include "doctest.h"
#include "primaltop/operators.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace primaltop;

TEST_SUITE_BEGIN("operators");

namespace {

naive::Family to_naive(const SetFamily& f) {
  return naive::Family(f.member_bits().begin(), f.member_bits().end());
}

}  // namespace

TEST_CASE("diamond") {
  auto u = fixtures::abc();
  for (const PrimalSpace& s : {fixtures::ex_a(), fixtures::ex_c(), fixtures::ex_d()})
    CHECK(diamond(s, Subset::empty(u)) == Subset::empty(u));

  // Frozen spot value, cross-checked against the from-definition oracle.
  const PrimalSpace exd = fixtures::ex_d();
  CHECK(diamond(exd, Subset::of(u, {"c"})) == Subset::of(u, {"c"}));
  CHECK(naive::diamond(to_naive(exd.topology().opens()), to_naive(exd.primal().members()), 3,
                       Subset::of(u, {"c"}).bits()) == Subset::of(u, {"c"}).bits());

  // The indiscrete space is regular, so both diamonds agree.
  const PrimalSpace exb = fixtures::ex_b();
  CHECK(diamond(exb, Subset::of(u, {"a"})) == Subset::full(u));

  auto v = Universe::make({"x"});
  CHECK_THROWS_AS(diamond(exd, Subset::empty(v)), UniverseMismatchError);
}

TEST_CASE("diamond-r reproduces the worked examples") {
  auto u = fixtures::abc();
  CHECK(diamond_r(fixtures::ex_a(), Subset::of(u, {"b", "c"})) == Subset::empty(u));
  CHECK(diamond_r(fixtures::ex_b(), Subset::of(u, {"a"})) == Subset::full(u));
  const PrimalSpace exc = fixtures::ex_c();
  CHECK(diamond_r(exc, Subset::of(u, {"b"})) == Subset::of(u, {"b"}));
  CHECK(diamond_r(exc, Subset::of(u, {"c"})) == Subset::of(u, {"b", "c"}));
}

TEST_CASE("closure operators") {
  auto u = fixtures::abc();
  const PrimalSpace exa = fixtures::ex_a();
  CHECK(cl_diamond(exa, Subset::empty(u)) == Subset::empty(u));
  CHECK(cl_diamond(exa, Subset::full(u)) == Subset::full(u));
  CHECK(cl_diamond_r(exa, Subset::empty(u)) == Subset::empty(u));
  CHECK(cl_diamond_r(exa, Subset::full(u)) == Subset::full(u));
  CHECK(cl_diamond_r(exa, Subset::of(u, {"b", "c"})) == Subset::of(u, {"b", "c"}));

  // On a regular space the two closures coincide everywhere.
  const PrimalSpace exb = fixtures::ex_b();
  REQUIRE(exb.topology().is_regular_space());
  for (const Subset& a : Powerset(u)) CHECK(cl_diamond(exb, a) == cl_diamond_r(exb, a));
}

TEST_CASE("operator tables") {
  const PrimalSpace exa = fixtures::ex_a();
  const OperatorTable table = OperatorTable::build(exa, OperatorTable::Kind::DiamondR);
  CHECK(table.size() == 8);
  CHECK(table.name() == "diamond-r");
  for (const Subset& a : Powerset(exa.universe_ptr()))
    CHECK(table.value(a) == diamond_r(exa, a));

  auto v = Universe::make({"x"});
  CHECK_THROWS_AS(table.value(Subset::empty(v)), UniverseMismatchError);
}

TEST_CASE("kuratowski axioms") {
  auto u = fixtures::abc();
  CHECK(kuratowski_check(OperatorTable::identity(u)).all_passed());

  for (const PrimalSpace& s : {fixtures::ex_a(), fixtures::ex_b(), fixtures::ex_c(),
                               fixtures::ex_d(), fixtures::ex_e(), fixtures::ex_f()})
    CHECK(kuratowski_check(OperatorTable::build(s, OperatorTable::Kind::ClDiamondR)).all_passed());

  // The raw diamond-r on EX-A is not extensive; {b,c} is a violating set.
  const PrimalSpace exa = fixtures::ex_a();
  const KuratowskiReport report =
      kuratowski_check(OperatorTable::build(exa, OperatorTable::Kind::DiamondR));
  CHECK(!report.extensive.passed);
  REQUIRE(report.extensive.witness.size() == 1);
  const Bits w = report.extensive.witness[0];
  CHECK((w & ~diamond_r_bits(exa, w)) != 0);
  CHECK(diamond_r(exa, Subset::of(u, {"b", "c"})) == Subset::empty(u));  // {b,c} violates too
}

TEST_CASE("induced topologies") {
  auto u = fixtures::abc();
  const PrimalSpace exd = fixtures::ex_d();
  CHECK(tau_diamond_r(exd) ==
        SetFamily::of(u, {{}, {"c"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}}));
  CHECK(tau_diamond(exd).size() == 8);  // the full powerset

  CHECK(tau_diamond_r(fixtures::ex_e()).size() == 8);
  const PrimalSpace exf = fixtures::ex_f();
  CHECK(tau_diamond_r(exf) == exf.topology().opens());
  CHECK(tau_diamond_r(exf) == exf.topology().delta_open_family());
}

TEST_CASE("base family and generation") {
  auto u = fixtures::abc();
  const PrimalSpace exd = fixtures::ex_d();
  CHECK(base_family(exd) ==
        SetFamily::of(u, {{}, {"c"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}}));
  CHECK(topology_from_base(base_family(exd)).opens() == tau_diamond_r(exd));

  // With the maximal primal the only non-member is X, so the base is
  // exactly the delta-open family.
  for (const Topology& t : {fixtures::ex_a().topology(), fixtures::ex_d().topology()}) {
    const PrimalSpace s = PrimalSpace::create(t, Primal::all_proper_subsets(u));
    CHECK(base_family(s) == t.delta_open_family());
  }
}

TEST_CASE("topology generation from explicit bases") {
  auto u = fixtures::abc();
  CHECK(topology_from_base(SetFamily::of(u, {{"a", "b", "c"}})).opens() ==
        SetFamily::of(u, {{}, {"a", "b", "c"}}));
  CHECK(topology_from_base(SetFamily::of(u, {{"a"}, {"b"}, {"a", "b", "c"}})).opens() ==
        SetFamily::of(u, {{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}}));
  CHECK_THROWS_AS(topology_from_base(SetFamily::of(u, {{"a"}, {"b"}})), BaseError);

  // {a,b} and {b,c} meet in {b}, which no member reaches: the closure under
  // unions is not intersection-closed.
  const SetFamily bad = SetFamily::of(u, {{"a", "b"}, {"b", "c"}, {"a", "b", "c"}});
  CHECK(!check_base_condition(bad).ok);
  CHECK(check_base_condition(bad).witness.has_value());
  CHECK_THROWS_AS(topology_from_base(bad), TopologyValidationError);
  CHECK(check_base_condition(base_family(fixtures::ex_d())).ok);
}

TEST_CASE("induced topology report") {
  const InducedTopologyReport report = InducedTopologyReport::build(fixtures::ex_d());
  using R = InducedTopologyReport;
  CHECK(report.includes[R::kTauDiamondR][R::kTauDelta]);   // tau_delta within tau_r
  CHECK(!report.includes[R::kTauDelta][R::kTauDiamondR]);
  CHECK(report.includes[R::kTauDiamond][R::kTau]);          // tau within tau_diamond
  CHECK(report.includes[R::kTauDiamond][R::kTauDiamondR]);
  CHECK(!report.includes[R::kTau][R::kTauDiamondR]);        // independence both ways
  CHECK(!report.includes[R::kTauDiamondR][R::kTau]);
  CHECK(report.base == base_family(fixtures::ex_d()));
}

TEST_CASE("diamond tables match the naive oracle on the bundled spaces") {
  for (const PrimalSpace& s : {fixtures::ex_a(), fixtures::ex_b(), fixtures::ex_c(),
                               fixtures::ex_d(), fixtures::ex_e(), fixtures::ex_f()}) {
    const auto opens = to_naive(s.topology().opens());
    const auto primal = to_naive(s.primal().members());
    for (Bits m = 0; m <= s.universe().full_mask(); ++m) {
      CHECK(diamond_bits(s, m) == naive::diamond(opens, primal, 3, m));
      CHECK(diamond_r_bits(s, m) == naive::diamond_r(opens, primal, 3, m));
    }
  }
}

TEST_SUITE_END();
