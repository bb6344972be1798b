#pragma once

#include <string_view>
#include <vector>

#include "primaltop/set_core.hpp"
#include "primaltop/topology.hpp"

namespace primaltop {

/// A primal on a finite universe X: a family of subsets that excludes X,
/// is downward closed, and splits intersections (A∩B a member forces A or B
/// to be a member). The empty family qualifies.
class Primal {
 public:
  /// Checks the three axioms; throws PrimalValidationError naming the
  /// violated condition and a witness.
  static Primal validate(const SetFamily& members);

  /// The empty primal.
  static Primal empty(UniversePtr universe);
  /// The maximal primal 2^X minus {X}.
  static Primal all_proper_subsets(UniversePtr universe);
  /// {A : p not in A} for a point p; always a valid primal.
  static Primal point_primal(UniversePtr universe, std::string_view point);

  const UniversePtr& universe_ptr() const noexcept { return members_.universe_ptr(); }
  const Universe& universe() const noexcept { return members_.universe(); }
  const SetFamily& members() const noexcept { return members_; }

  bool contains(const Subset& a) const { return members_.contains(a); }
  bool contains_bits(Bits bits) const noexcept { return members_.contains_bits(bits); }
  size_t size() const noexcept { return members_.size(); }

  bool operator==(const Primal& other) const noexcept { return members_ == other.members_; }
  bool operator!=(const Primal& other) const noexcept { return !(*this == other); }

 private:
  explicit Primal(SetFamily members) : members_(std::move(members)) {}
  SetFamily members_;
};

/// Predicate form of the direct axioms (exclude X, downward closed,
/// intersection splitting).
bool satisfies_primal_axioms(const SetFamily& f) noexcept;

/// Predicate form of the complement-side conditions: X excluded, non-members
/// upward closed, non-members closed under intersection. Agrees with
/// satisfies_primal_axioms on every family.
bool satisfies_primal_axioms_dual(const SetFamily& f) noexcept;

/// All primals on the universe, in canonical order of the family's
/// characteristic bit pattern over the canonically ordered powerset.
/// Bounded to universes of at most 4 points.
std::vector<Primal> enumerate_primals(const UniversePtr& universe);

/// A topology and a primal over one universe; the ambient object all
/// diamond operators take.
class PrimalSpace {
 public:
  static PrimalSpace create(Topology topology, Primal primal);

  const UniversePtr& universe_ptr() const noexcept { return topology_.universe_ptr(); }
  const Universe& universe() const noexcept { return topology_.universe(); }
  const Topology& topology() const noexcept { return topology_; }
  const Primal& primal() const noexcept { return primal_; }

 private:
  PrimalSpace(Topology topology, Primal primal)
      : topology_(std::move(topology)), primal_(std::move(primal)) {}
  Topology topology_;
  Primal primal_;
};

}  // namespace primaltop
