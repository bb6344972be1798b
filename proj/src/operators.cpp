#include "primaltop/operators.hpp"

#include <algorithm>

namespace primaltop {

namespace {

void require_space_subset(const PrimalSpace& s, const Subset& a, const char* op) {
  if (!same_universe(s.universe_ptr(), a.universe_ptr()))
    throw UniverseMismatchError(std::string(op) + " of a subset over a different universe");
}

// Shared pointwise evaluation of the diamond condition over a neighborhood
// family (open or regular open sets).
Bits diamond_over(const PrimalSpace& s, const std::vector<Bits>& neighborhoods, Bits a) {
  const Bits full = s.universe().full_mask();
  const Bits ac = a ^ full;
  const Primal& p = s.primal();
  Bits result = 0;
  for (int x = 0; x < s.universe().size(); ++x) {
    const Bits px = static_cast<Bits>(1u) << x;
    bool all = true;
    for (Bits u : neighborhoods) {
      if (!(u & px)) continue;
      if (!p.contains_bits(ac | (u ^ full))) {
        all = false;
        break;
      }
    }
    if (all) result |= px;
  }
  return result;
}

}  // namespace

Bits diamond_bits(const PrimalSpace& s, Bits a) {
  return diamond_over(s, s.topology().open_bits(), a);
}

Bits diamond_r_bits(const PrimalSpace& s, Bits a) {
  return diamond_over(s, s.topology().regular_open_bits(), a);
}

Subset diamond(const PrimalSpace& s, const Subset& a) {
  require_space_subset(s, a, "diamond");
  return Subset(s.universe_ptr(), diamond_bits(s, a.bits()));
}

Subset diamond_r(const PrimalSpace& s, const Subset& a) {
  require_space_subset(s, a, "diamond-r");
  return Subset(s.universe_ptr(), diamond_r_bits(s, a.bits()));
}

Subset cl_diamond(const PrimalSpace& s, const Subset& a) {
  require_space_subset(s, a, "cl-diamond");
  return Subset(s.universe_ptr(), a.bits() | diamond_bits(s, a.bits()));
}

Subset cl_diamond_r(const PrimalSpace& s, const Subset& a) {
  require_space_subset(s, a, "cl-diamond-r");
  return Subset(s.universe_ptr(), a.bits() | diamond_r_bits(s, a.bits()));
}

OperatorTable OperatorTable::build(const PrimalSpace& s, Kind kind) {
  const Bits full = s.universe().full_mask();
  std::vector<Bits> values;
  values.reserve(static_cast<size_t>(full) + 1);
  for (Bits m = 0;; ++m) {
    Bits v = 0;
    switch (kind) {
      case Kind::Diamond: v = diamond_bits(s, m); break;
      case Kind::DiamondR: v = diamond_r_bits(s, m); break;
      case Kind::ClDiamond: v = m | diamond_bits(s, m); break;
      case Kind::ClDiamondR: v = m | diamond_r_bits(s, m); break;
      case Kind::Identity: v = m; break;
    }
    values.push_back(v);
    if (m == full) break;
  }
  std::string name;
  switch (kind) {
    case Kind::Diamond: name = "diamond"; break;
    case Kind::DiamondR: name = "diamond-r"; break;
    case Kind::ClDiamond: name = "cl"; break;
    case Kind::ClDiamondR: name = "cl-r"; break;
    case Kind::Identity: name = "identity"; break;
  }
  return OperatorTable(s.universe_ptr(), kind, std::move(name), std::move(values));
}

OperatorTable OperatorTable::identity(UniversePtr universe) {
  const Bits full = universe->full_mask();
  std::vector<Bits> values;
  values.reserve(static_cast<size_t>(full) + 1);
  for (Bits m = 0;; ++m) {
    values.push_back(m);
    if (m == full) break;
  }
  return OperatorTable(std::move(universe), Kind::Identity, "identity", std::move(values));
}

Subset OperatorTable::value(const Subset& a) const {
  if (!same_universe(universe_, a.universe_ptr()))
    throw UniverseMismatchError("operator table applied to a subset over a different universe");
  return Subset(universe_, values_[a.bits()]);
}

KuratowskiReport kuratowski_check(const OperatorTable& table) {
  const Bits full = table.universe_ptr()->full_mask();
  const auto& v = table.values();
  KuratowskiReport report;

  if (v[0] != 0) {
    report.preserves_empty.passed = false;
    report.preserves_empty.witness = {0};
  }
  for (Bits m = 0;; ++m) {
    if (m & ~v[m]) {
      report.extensive.passed = false;
      report.extensive.witness = {m};
      break;
    }
    if (m == full) break;
  }
  for (Bits a = 0; report.additive.passed; ++a) {
    for (Bits b = a;; ++b) {
      if (v[a | b] != (v[a] | v[b])) {
        report.additive.passed = false;
        report.additive.witness = {a, b};
        break;
      }
      if (b == full) break;
    }
    if (a == full) break;
  }
  for (Bits m = 0;; ++m) {
    if (v[v[m]] != v[m]) {
      report.idempotent.passed = false;
      report.idempotent.witness = {m};
      break;
    }
    if (m == full) break;
  }
  return report;
}

namespace {

// {A : A^c ∪ (A^c)-image = A^c}, i.e. the complements of the fixed points of
// the closure A ↦ A ∪ image(A).
SetFamily induced_topology(const PrimalSpace& s, Bits (*image)(const PrimalSpace&, Bits)) {
  const Bits full = s.universe().full_mask();
  std::vector<Bits> members;
  for (Bits m = 0;; ++m) {
    const Bits c = m ^ full;
    if ((image(s, c) & ~c) == 0) members.push_back(m);
    if (m == full) break;
  }
  SetFamily family(s.universe_ptr(), std::move(members));
  require_topology_axioms(family);  // guaranteed; a failure here is an engine bug
  return family;
}

}  // namespace

SetFamily tau_diamond_r(const PrimalSpace& s) { return induced_topology(s, &diamond_r_bits); }

SetFamily tau_diamond(const PrimalSpace& s) { return induced_topology(s, &diamond_bits); }

SetFamily base_family(const PrimalSpace& s) {
  const Bits full = s.universe().full_mask();
  std::vector<Bits> members;
  for (Bits t : s.topology().delta_open_family().member_bits()) {
    for (Bits p = 0;; ++p) {
      if (!s.primal().contains_bits(p)) members.push_back(t & p);
      if (p == full) break;
    }
  }
  return SetFamily(s.universe_ptr(), std::move(members));
}

BaseConditionReport check_base_condition(const SetFamily& base) {
  const auto& members = base.member_bits();
  const int n = base.universe().size();
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i; j < members.size(); ++j) {
      const Bits both = members[i] & members[j];
      for (int x = 0; x < n; ++x) {
        const Bits px = static_cast<Bits>(1u) << x;
        if (!(both & px)) continue;
        bool covered = false;
        for (Bits m : members) {
          if ((m & px) && (m & ~both) == 0) {
            covered = true;
            break;
          }
        }
        if (!covered)
          return {false, std::make_pair(base.at(i), base.at(j))};
      }
    }
  }
  return {};
}

Topology topology_from_base(const SetFamily& base) {
  const Bits full = base.universe().full_mask();
  if (base.union_all().bits() != full)
    throw BaseError("the base members cover only " + base.union_all().to_string() +
                    ", not the whole space");

  std::vector<Bits> closure = base.member_bits();
  closure.push_back(0);  // the empty union
  std::sort(closure.begin(), closure.end());
  closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t count = closure.size();
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = i + 1; j < count; ++j) {
        const Bits un = closure[i] | closure[j];
        if (!std::binary_search(closure.begin(), closure.end(), un)) {
          closure.insert(std::lower_bound(closure.begin(), closure.end(), un), un);
          grew = true;
        }
      }
    }
  }
  return Topology::validate(SetFamily(base.universe_ptr(), std::move(closure)));
}

InducedTopologyReport InducedTopologyReport::build(const PrimalSpace& s) {
  InducedTopologyReport report{
      s.topology().opens(),
      s.topology().delta_open_family(),
      tau_diamond_r(s),
      tau_diamond(s),
      base_family(s),
      {},
  };
  const std::array<const SetFamily*, 4> families = {&report.tau, &report.tau_delta, &report.tau_r,
                                                    &report.tau_d};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) report.includes[i][j] = families[i]->includes(*families[j]);
  return report;
}

const SetFamily& InducedTopologyReport::family(int index) const {
  switch (index) {
    case kTau: return tau;
    case kTauDelta: return tau_delta;
    case kTauDiamondR: return tau_r;
    case kTauDiamond: return tau_d;
    default: throw InternalError("induced topology index out of range");
  }
}

}  // namespace primaltop
