#include "primaltop/primal.hpp"

namespace primaltop {

namespace {

constexpr int kEnumerationMaxPoints = 4;

// Finds a member A and a subset B of A outside the family. Returns {A, B}.
bool find_downward_violation(const SetFamily& f, Bits* a_out, Bits* b_out) {
  for (Bits a : f.member_bits()) {
    // Iterate proper submasks of a.
    for (Bits b = (a - 1) & a;; b = (b - 1) & a) {
      if (!f.contains_bits(b)) {
        *a_out = a;
        *b_out = b;
        return true;
      }
      if (b == 0) break;
    }
  }
  return false;
}

// Finds A, B with A∩B in the family but neither A nor B in it. Assumes the
// exclusion and downward-closure conditions already hold: the non-members
// are then upward closed and nonempty, so intersection splitting holds
// exactly when the intersection of all non-members is itself a non-member.
bool find_intersection_violation(const SetFamily& f, Bits full, Bits* a_out, Bits* b_out) {
  Bits meet = full;
  for (Bits m = 0;; ++m) {
    if (!f.contains_bits(m)) meet &= m;
    if (m == full) break;
  }
  if (!f.contains_bits(meet)) return false;
  Bits acc = full;
  for (Bits b = 0;; ++b) {
    if (!f.contains_bits(b)) {
      if (f.contains_bits(acc & b)) {
        *a_out = acc;
        *b_out = b;
        return true;
      }
      acc &= b;
    }
    if (b == full) break;
  }
  return false;  // unreachable: acc descends to a member intersection
}

}  // namespace

Primal Primal::validate(const SetFamily& members) {
  const Universe& u = members.universe();
  const Bits full = u.full_mask();

  if (members.contains_bits(full))
    throw PrimalValidationError(PrimalValidationError::Kind::ContainsUniverse, "contains-universe",
                                "the whole space " + bits_to_string(u, full) +
                                    " belongs to the family",
                                {full});
  Bits a = 0, b = 0;
  if (find_downward_violation(members, &a, &b))
    throw PrimalValidationError(
        PrimalValidationError::Kind::NotDownwardClosed, "not-downward-closed",
        bits_to_string(u, a) + " is a member but its subset " + bits_to_string(u, b) + " is not",
        {a, b});
  if (find_intersection_violation(members, full, &a, &b))
    throw PrimalValidationError(
        PrimalValidationError::Kind::IntersectionViolation, "intersection-violation",
        "the intersection of " + bits_to_string(u, a) + " and " + bits_to_string(u, b) +
            " is a member but neither operand is",
        {a, b});
  return Primal(members);
}

Primal Primal::empty(UniversePtr universe) { return validate(SetFamily(std::move(universe), {})); }

Primal Primal::all_proper_subsets(UniversePtr universe) {
  const Bits full = universe->full_mask();
  std::vector<Bits> members;
  members.reserve(full);
  for (Bits m = 0; m < full; ++m) members.push_back(m);
  return validate(SetFamily(std::move(universe), std::move(members)));
}

Primal Primal::point_primal(UniversePtr universe, std::string_view point) {
  const Bits p = static_cast<Bits>(1u) << universe->index_of(point);
  const Bits full = universe->full_mask();
  std::vector<Bits> members;
  for (Bits m = 0;; ++m) {
    if ((m & p) == 0) members.push_back(m);
    if (m == full) break;
  }
  return validate(SetFamily(std::move(universe), std::move(members)));
}

bool satisfies_primal_axioms(const SetFamily& f) noexcept {
  const Bits full = f.universe().full_mask();
  if (f.contains_bits(full)) return false;
  Bits a = 0, b = 0;
  if (find_downward_violation(f, &a, &b)) return false;
  if (find_intersection_violation(f, full, &a, &b)) return false;
  return true;
}

bool satisfies_primal_axioms_dual(const SetFamily& f) noexcept {
  const Bits full = f.universe().full_mask();
  if (f.contains_bits(full)) return false;
  // Non-members are upward closed: B outside, B ⊆ A forces A outside.
  for (Bits b = 0;; ++b) {
    if (!f.contains_bits(b)) {
      for (Bits a = b;; ++a) {
        if ((b & ~a) == 0 && f.contains_bits(a)) return false;
        if (a == full) break;
      }
    }
    if (b == full) break;
  }
  // Non-members are closed under intersection.
  for (Bits a = 0;; ++a) {
    if (!f.contains_bits(a)) {
      for (Bits b = a;; ++b) {
        if (!f.contains_bits(b) && f.contains_bits(a & b)) return false;
        if (b == full) break;
      }
    }
    if (a == full) break;
  }
  return true;
}

std::vector<Primal> enumerate_primals(const UniversePtr& universe) {
  const int n = universe->size();
  if (n > kEnumerationMaxPoints)
    throw BoundError("bound-exceeded",
                     "primal enumeration supports at most " +
                         std::to_string(kEnumerationMaxPoints) + " points, got " + std::to_string(n));
  const Bits full = universe->full_mask();
  const std::uint32_t subset_count = static_cast<std::uint32_t>(full) + 1;
  const std::uint64_t family_count = std::uint64_t{1} << subset_count;

  std::vector<Primal> out;
  std::vector<Bits> members;
  for (std::uint64_t family = 0; family < family_count; ++family) {
    // Subsets excluding X, downward closed first, then intersection splitting.
    if ((family >> full) & 1u) continue;
    members.clear();
    for (std::uint32_t m = 0; m < subset_count; ++m)
      if ((family >> m) & 1u) members.push_back(static_cast<Bits>(m));
    bool downward = true;
    for (Bits a : members) {
      for (Bits b = (a - 1) & a;; b = (b - 1) & a) {
        if (!((family >> b) & 1u)) {
          downward = false;
          break;
        }
        if (b == 0) break;
      }
      if (!downward) break;
    }
    if (!downward) continue;
    SetFamily f(universe, members);
    Bits wa = 0, wb = 0;
    if (find_intersection_violation(f, full, &wa, &wb)) continue;
    out.push_back(Primal::validate(f));
  }
  return out;
}

PrimalSpace PrimalSpace::create(Topology topology, Primal primal) {
  if (!same_universe(topology.universe_ptr(), primal.universe_ptr()))
    throw UniverseMismatchError("topology and primal are over different universes");
  return PrimalSpace(std::move(topology), std::move(primal));
}

}  // namespace primaltop
