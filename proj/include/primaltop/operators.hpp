#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primaltop/primal.hpp"

namespace primaltop {

/// A^⋄: points x whose every open neighborhood U satisfies
/// complement(A) ∪ complement(U) ∈ primal.
Subset diamond(const PrimalSpace& s, const Subset& a);

/// A^⋄_R: same condition quantified over regular open neighborhoods.
Subset diamond_r(const PrimalSpace& s, const Subset& a);

/// cl^⋄(A) = A ∪ A^⋄.
Subset cl_diamond(const PrimalSpace& s, const Subset& a);

/// cl^⋄_R(A) = A ∪ A^⋄_R. A Kuratowski closure operator.
Subset cl_diamond_r(const PrimalSpace& s, const Subset& a);

// Bit-level evaluations used by tables and sweeps.
Bits diamond_bits(const PrimalSpace& s, Bits a);
Bits diamond_r_bits(const PrimalSpace& s, Bits a);

/// A total map from every subset of the universe to its operator value,
/// materialized over the whole powerset.
class OperatorTable {
 public:
  enum class Kind { Diamond, DiamondR, ClDiamond, ClDiamondR, Identity };

  static OperatorTable build(const PrimalSpace& s, Kind kind);
  static OperatorTable identity(UniversePtr universe);

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const std::string& name() const noexcept { return name_; }
  Kind kind() const noexcept { return kind_; }

  size_t size() const noexcept { return values_.size(); }
  Bits value_bits(Bits a) const { return values_.at(a); }
  Subset value(const Subset& a) const;
  const std::vector<Bits>& values() const noexcept { return values_; }

 private:
  OperatorTable(UniversePtr universe, Kind kind, std::string name, std::vector<Bits> values)
      : universe_(std::move(universe)), kind_(kind), name_(std::move(name)), values_(std::move(values)) {}

  UniversePtr universe_;
  Kind kind_;
  std::string name_;
  std::vector<Bits> values_;
};

/// Pass/fail per Kuratowski closure axiom, with the canonically first
/// witness for each failure.
struct KuratowskiReport {
  struct Axiom {
    bool passed = true;
    std::vector<Bits> witness;  // one subset, or a pair for additivity
  };

  Axiom preserves_empty;  // c({}) = {}
  Axiom extensive;        // A ⊆ c(A)
  Axiom additive;         // c(A∪B) = c(A) ∪ c(B)
  Axiom idempotent;       // c(c(A)) = c(A)

  bool all_passed() const noexcept {
    return preserves_empty.passed && extensive.passed && additive.passed && idempotent.passed;
  }
};

KuratowskiReport kuratowski_check(const OperatorTable& table);

/// The topology {A : cl^⋄_R(complement(A)) = complement(A)} induced by the
/// space's topology and primal. The result is checked against the open-set
/// axioms before it is returned.
SetFamily tau_diamond_r(const PrimalSpace& s);
/// Same construction through cl^⋄.
SetFamily tau_diamond(const PrimalSpace& s);

/// The base {T ∩ P : T delta-open, P outside the primal}, deduplicated and
/// in canonical order. Generates exactly tau_diamond_r.
SetFamily base_family(const PrimalSpace& s);

/// Whether every pairwise intersection of members is a union of members,
/// with the first violating pair when not.
struct BaseConditionReport {
  bool ok = true;
  std::optional<std::pair<Subset, Subset>> witness;
};
BaseConditionReport check_base_condition(const SetFamily& base);

/// Closes a covering family under arbitrary unions (the empty union
/// included) and validates the result. Throws BaseError when the family
/// does not cover the universe; a family violating the base intersection
/// condition surfaces as a TopologyValidationError from validation.
Topology topology_from_base(const SetFamily& base);

/// The four induced families of one space plus their inclusion comparisons.
struct InducedTopologyReport {
  enum Index { kTau = 0, kTauDelta = 1, kTauDiamondR = 2, kTauDiamond = 3 };
  static constexpr std::array<const char*, 4> kNames = {"tau", "tau-delta", "tau-r", "tau-diamond"};

  SetFamily tau;
  SetFamily tau_delta;
  SetFamily tau_r;
  SetFamily tau_d;
  SetFamily base;
  /// includes[i][j] is true when family i contains every member of family j.
  std::array<std::array<bool, 4>, 4> includes;

  static InducedTopologyReport build(const PrimalSpace& s);
  const SetFamily& family(int index) const;
};

}  // namespace primaltop
