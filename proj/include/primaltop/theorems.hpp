#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primaltop/operators.hpp"

namespace primaltop {

enum class TheoremKind { Direct, Converse };

/// One entry of the executable theorem catalog. Direct entries must hold on
/// every valid space; Converse entries are refutable claims for which the
/// engine searches witnesses.
struct TheoremInfo {
  std::string_view id;
  TheoremKind kind;
  std::string_view description;
};

std::span<const TheoremInfo> theorem_catalog();
/// nullptr when the id is unknown.
const TheoremInfo* find_theorem(std::string_view id);
/// Throws Error("unknown-theorem") when the id is unknown.
const TheoremInfo& require_theorem(std::string_view id);

/// A (topology, primal, subsets) tuple pinpointing where a property failed
/// or where a converse claim is refuted.
struct SpaceWitness {
  SetFamily topology_opens;
  SetFamily primal_members;
  std::vector<Subset> subsets;
  std::string note;
};

/// Outcome of evaluating one theorem over one space or over a sweep grid.
/// `passed` is false exactly when witnesses are present.
struct CheckReport {
  std::string theorem_id;
  TheoremKind kind = TheoremKind::Direct;
  long long spaces_checked = 0;
  bool passed = true;
  std::vector<SpaceWitness> witnesses;
  double elapsed_seconds = 0.0;  // not part of machine reports
  std::string strategy;
  std::optional<std::uint64_t> seed;
  std::string info;
};

/// Evaluates one catalog entry over every subset tuple of one space.
CheckReport check_theorem(std::string_view id, const PrimalSpace& space);

struct SweepStrategy {
  enum class Mode { Exhaustive, Sampled };
  Mode mode = Mode::Exhaustive;
  int samples = 1000;        // sampled mode only
  std::uint64_t seed = 0;    // sampled mode only

  static SweepStrategy exhaustive() { return {}; }
  static SweepStrategy sampled(int samples, std::uint64_t seed) {
    return {Mode::Sampled, samples, seed};
  }
  std::string label() const;
};

/// Evaluates one theorem over the full grid of labeled topologies and
/// primals on n points (exhaustive, n <= 3) or over seeded samples from
/// that grid (n <= 4).
CheckReport sweep_theorem(std::string_view id, int n, const SweepStrategy& strategy);

/// Runs several theorems over the grid in one pass; reports are returned in
/// the order the ids were given.
std::vector<CheckReport> sweep_catalog(std::span<const std::string> ids, int n,
                                       const SweepStrategy& strategy);

/// Searches the grid in canonical order for the first witness refuting a
/// Converse entry; stops as soon as one is found.
CheckReport find_counterexample(std::string_view id, int n, const SweepStrategy& strategy);

/// All labeled topologies on the universe in canonical order of the family's
/// characteristic bit pattern. Bounded to 4 points; the counts for 1..4
/// points are 1, 4, 29 and 355.
std::vector<Topology> enumerate_topologies(const UniversePtr& universe);

/// "a", "b", ... point names used for sweep universes.
std::vector<std::string> default_point_names(int n);

}  // namespace primaltop
