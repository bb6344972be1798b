#pragma once

#include <string_view>
#include <vector>

#include "primaltop/set_core.hpp"

namespace primaltop {

/// A validated topology on a finite universe.
///
/// Validation checks the open-set axioms (empty set, whole space, closure
/// under pairwise union and intersection; on a finite family pairwise union
/// closure is equivalent to arbitrary union closure). Construction also
/// derives and caches the closed sets, the regular-open family RO(X), the
/// regular-closed family RC(X) and the delta-open family tau_delta.
///
/// Instances are immutable; every operation is a pure function.
class Topology {
 public:
  /// Validates the open-set axioms; throws TopologyValidationError naming
  /// the violated axiom and a witnessing pair.
  static Topology validate(const SetFamily& opens);

  static Topology discrete(UniversePtr universe);
  static Topology indiscrete(UniversePtr universe);

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const Universe& universe() const noexcept { return *universe_; }

  const SetFamily& opens() const noexcept { return opens_; }
  const SetFamily& closed_sets() const noexcept { return closed_; }
  const SetFamily& regular_open_family() const noexcept { return regular_open_; }
  const SetFamily& regular_closed_family() const noexcept { return regular_closed_; }
  const SetFamily& delta_open_family() const noexcept { return delta_open_; }

  bool is_open(const Subset& a) const;
  bool is_closed(const Subset& a) const;

  /// Union of all open sets contained in `a`.
  Subset interior(const Subset& a) const;
  /// Intersection of all closed sets containing `a`; equals the complement
  /// of the interior of the complement.
  Subset closure(const Subset& a) const;

  /// All open sets containing the point.
  SetFamily open_neighborhoods(std::string_view point) const;
  SetFamily open_neighborhoods(int point_index) const;
  /// All regular open sets containing the point.
  SetFamily regular_open_neighborhoods(std::string_view point) const;
  SetFamily regular_open_neighborhoods(int point_index) const;

  /// a = int(cl(a)).
  bool is_regular_open(const Subset& a) const;
  bool is_regular_closed(const Subset& a) const;

  /// Union of all regular open sets contained in `a`. Cross-checked on every
  /// call against the open-neighborhood form {x : exists open U at x with
  /// int(cl(U)) contained in a}.
  Subset delta_interior(const Subset& a) const;
  /// Points whose every regular open neighborhood meets `a`. Cross-checked
  /// against the form {x : every open U at x has int(cl(U)) meeting a}.
  Subset delta_closure(const Subset& a) const;

  bool is_delta_open(const Subset& a) const;
  bool is_delta_closed(const Subset& a) const;

  /// Regularity in the separation sense, with no T1 requirement: every point
  /// and every closed set missing it admit disjoint open supersets.
  bool is_regular_space() const noexcept { return regular_space_; }
  /// Any two distinct points admit disjoint open neighborhoods. On a finite
  /// universe this forces the discrete topology.
  bool is_hausdorff() const noexcept { return hausdorff_; }

  // Bit-level access used by the operator and sweep machinery.
  Bits interior_bits(Bits a) const noexcept;
  Bits closure_bits(Bits a) const noexcept;
  Bits delta_interior_bits(Bits a) const;
  Bits delta_closure_bits(Bits a) const;
  const std::vector<Bits>& open_bits() const noexcept { return opens_.member_bits(); }
  const std::vector<Bits>& regular_open_bits() const noexcept { return regular_open_.member_bits(); }
  /// int(cl(U)) for each open set, indexed like open_bits().
  const std::vector<Bits>& interior_closure_of_opens() const noexcept { return int_cl_of_open_; }

 private:
  Topology(UniversePtr universe, SetFamily opens);

  UniversePtr universe_;
  SetFamily opens_;
  SetFamily closed_;
  SetFamily regular_open_;
  SetFamily regular_closed_;
  SetFamily delta_open_;
  std::vector<Bits> int_cl_of_open_;
  bool regular_space_ = false;
  bool hausdorff_ = false;
};

/// Checks the open-set axioms alone, without building a Topology or its
/// caches; throws TopologyValidationError as Topology::validate does.
void require_topology_axioms(const SetFamily& opens);

/// Validates the open-set axioms over `u`; alias of Topology::validate.
Topology validate_topology(const SetFamily& opens);

}  // namespace primaltop
