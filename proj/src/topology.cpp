#include "primaltop/topology.hpp"

#include <algorithm>

namespace primaltop {

namespace {

std::string pair_text(const Universe& u, Bits a, Bits b) {
  return bits_to_string(u, a) + " and " + bits_to_string(u, b);
}

[[noreturn]] void throw_union_violation(const Universe& u, Bits a, Bits b) {
  throw TopologyValidationError(
      TopologyValidationError::Kind::NotClosedUnderUnion, "not-closed-under-union",
      "union of " + pair_text(u, a, b) + " is " + bits_to_string(u, a | b) +
          ", which is not open",
      {a, b});
}

[[noreturn]] void throw_intersection_violation(const Universe& u, Bits a, Bits b) {
  throw TopologyValidationError(
      TopologyValidationError::Kind::NotClosedUnderIntersection, "not-closed-under-intersection",
      "intersection of " + pair_text(u, a, b) + " is " + bits_to_string(u, a & b) +
          ", which is not open",
      {a, b});
}

// Families beyond this size are checked through the minimal-neighborhood
// characterization instead of the quadratic pair scan.
constexpr size_t kPairwiseCheckLimit = 2048;

// A family containing {} and X is closed under pairwise union and
// intersection exactly when every minimal neighborhood N(x) (intersection
// of the members containing x) is a member and every union of minimal
// neighborhoods is a member. Witness pairs are recovered greedily.
void require_axioms_via_min_neighborhoods(const SetFamily& opens) {
  const Universe& u = opens.universe();
  const Bits full = u.full_mask();
  const int n = u.size();

  std::vector<Bits> min_nbhd(static_cast<size_t>(n), full);
  for (Bits m : opens.member_bits())
    for (int x = 0; x < n; ++x)
      if ((m >> x) & 1u) min_nbhd[x] &= m;

  for (int x = 0; x < n; ++x) {
    if (opens.contains_bits(min_nbhd[x])) continue;
    Bits acc = full;
    for (Bits m : opens.member_bits()) {
      if (!((m >> x) & 1u)) continue;
      if (!opens.contains_bits(acc & m)) throw_intersection_violation(u, acc, m);
      acc &= m;
    }
  }

  std::vector<Bits> generated(static_cast<size_t>(full) + 1, 0);
  for (Bits s = 1;; ++s) {
    const Bits low = s & (~s + 1);
    generated[s] = generated[s ^ low] | min_nbhd[std::countr_zero(low)];
    if (!opens.contains_bits(generated[s])) {
      Bits acc = 0;
      for (int x = 0; x < n; ++x) {
        if (!((s >> x) & 1u)) continue;
        if (!opens.contains_bits(acc | min_nbhd[x])) throw_union_violation(u, acc, min_nbhd[x]);
        acc |= min_nbhd[x];
      }
    }
    if (s == full) break;
  }
}

}  // namespace

void require_topology_axioms(const SetFamily& opens) {
  const Universe& u = opens.universe();
  const Bits full = u.full_mask();
  const auto& members = opens.member_bits();

  if (!opens.contains_bits(0))
    throw TopologyValidationError(TopologyValidationError::Kind::MissingEmpty, "missing-empty",
                                  "the empty set is not open", {});
  if (!opens.contains_bits(full))
    throw TopologyValidationError(TopologyValidationError::Kind::MissingUniverse, "missing-universe",
                                  "the whole space " + bits_to_string(u, full) + " is not open", {full});
  if (members.size() > kPairwiseCheckLimit) {
    require_axioms_via_min_neighborhoods(opens);
    return;
  }
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (!opens.contains_bits(members[i] | members[j]))
        throw_union_violation(u, members[i], members[j]);
      if (!opens.contains_bits(members[i] & members[j]))
        throw_intersection_violation(u, members[i], members[j]);
    }
  }
}

Topology Topology::validate(const SetFamily& opens) {
  require_topology_axioms(opens);
  return Topology(opens.universe_ptr(), opens);
}

Topology Topology::discrete(UniversePtr universe) {
  std::vector<Bits> all;
  const Bits full = universe->full_mask();
  all.reserve(static_cast<size_t>(full) + 1);
  for (Bits m = 0;; ++m) {
    all.push_back(m);
    if (m == full) break;
  }
  return validate(SetFamily(std::move(universe), std::move(all)));
}

Topology Topology::indiscrete(UniversePtr universe) {
  const Bits full = universe->full_mask();
  return validate(SetFamily(std::move(universe), {0, full}));
}

Topology::Topology(UniversePtr universe, SetFamily opens)
    : universe_(std::move(universe)),
      opens_(std::move(opens)),
      closed_(universe_, {}),
      regular_open_(universe_, {}),
      regular_closed_(universe_, {}),
      delta_open_(universe_, {}) {
  const Bits full = universe_->full_mask();
  const int n = universe_->size();

  std::vector<Bits> closed;
  closed.reserve(opens_.size());
  for (Bits m : opens_.member_bits()) closed.push_back(m ^ full);
  closed_ = SetFamily(universe_, std::move(closed));

  std::vector<Bits> ro;
  for (Bits m = 0;; ++m) {
    if (interior_bits(closure_bits(m)) == m) ro.push_back(m);
    if (m == full) break;
  }
  regular_open_ = SetFamily(universe_, ro);

  std::vector<Bits> rc;
  rc.reserve(ro.size());
  for (Bits m : ro) rc.push_back(m ^ full);
  regular_closed_ = SetFamily(universe_, std::move(rc));

  int_cl_of_open_.reserve(opens_.size());
  for (Bits m : opens_.member_bits()) int_cl_of_open_.push_back(interior_bits(closure_bits(m)));

  std::vector<Bits> delta;
  for (Bits m = 0;; ++m) {
    if (delta_interior_bits(m) == m) delta.push_back(m);
    if (m == full) break;
  }
  delta_open_ = SetFamily(universe_, std::move(delta));

  // Regularity (no T1): each point and closed set missing it have disjoint
  // open supersets.
  regular_space_ = true;
  for (int x = 0; x < n && regular_space_; ++x) {
    const Bits px = static_cast<Bits>(1u) << x;
    for (Bits c : closed_.member_bits()) {
      if (c & px) continue;
      bool separated = false;
      for (Bits uo : opens_.member_bits()) {
        if (!(uo & px)) continue;
        for (Bits vo : opens_.member_bits()) {
          if ((c & ~vo) == 0 && (uo & vo) == 0) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) {
        regular_space_ = false;
        break;
      }
    }
  }

  hausdorff_ = true;
  for (int x = 0; x < n && hausdorff_; ++x) {
    for (int y = x + 1; y < n && hausdorff_; ++y) {
      const Bits px = static_cast<Bits>(1u) << x;
      const Bits py = static_cast<Bits>(1u) << y;
      bool separated = false;
      for (Bits uo : opens_.member_bits()) {
        if (!(uo & px)) continue;
        for (Bits vo : opens_.member_bits()) {
          if ((vo & py) && (uo & vo) == 0) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) hausdorff_ = false;
    }
  }
}

bool Topology::is_open(const Subset& a) const { return opens_.contains(a); }

bool Topology::is_closed(const Subset& a) const { return closed_.contains(a); }

Subset Topology::interior(const Subset& a) const {
  if (!same_universe(universe_, a.universe_ptr()))
    throw UniverseMismatchError("interior of a subset over a different universe");
  return Subset(universe_, interior_bits(a.bits()));
}

Subset Topology::closure(const Subset& a) const {
  if (!same_universe(universe_, a.universe_ptr()))
    throw UniverseMismatchError("closure of a subset over a different universe");
  return Subset(universe_, closure_bits(a.bits()));
}

SetFamily Topology::open_neighborhoods(std::string_view point) const {
  return open_neighborhoods(universe_->index_of(point));
}

SetFamily Topology::open_neighborhoods(int point_index) const {
  const Bits p = static_cast<Bits>(1u) << point_index;
  std::vector<Bits> out;
  for (Bits m : opens_.member_bits())
    if (m & p) out.push_back(m);
  return SetFamily(universe_, std::move(out));
}

SetFamily Topology::regular_open_neighborhoods(std::string_view point) const {
  return regular_open_neighborhoods(universe_->index_of(point));
}

SetFamily Topology::regular_open_neighborhoods(int point_index) const {
  const Bits p = static_cast<Bits>(1u) << point_index;
  std::vector<Bits> out;
  for (Bits m : regular_open_.member_bits())
    if (m & p) out.push_back(m);
  return SetFamily(universe_, std::move(out));
}

bool Topology::is_regular_open(const Subset& a) const {
  if (!same_universe(universe_, a.universe_ptr()))
    throw UniverseMismatchError("regular-open test over a different universe");
  return regular_open_.contains_bits(a.bits());
}

bool Topology::is_regular_closed(const Subset& a) const {
  if (!same_universe(universe_, a.universe_ptr()))
    throw UniverseMismatchError("regular-closed test over a different universe");
  return regular_closed_.contains_bits(a.bits());
}

Subset Topology::delta_interior(const Subset& a) const {
  if (!same_universe(universe_, a.universe_ptr()))
    throw UniverseMismatchError("delta-interior of a subset over a different universe");
  return Subset(universe_, delta_interior_bits(a.bits()));
}

Subset Topology::delta_closure(const Subset& a) const {
  if (!same_universe(universe_, a.universe_ptr()))
    throw UniverseMismatchError("delta-closure of a subset over a different universe");
  return Subset(universe_, delta_closure_bits(a.bits()));
}

bool Topology::is_delta_open(const Subset& a) const { return delta_open_.contains(a); }

bool Topology::is_delta_closed(const Subset& a) const {
  if (!same_universe(universe_, a.universe_ptr()))
    throw UniverseMismatchError("delta-closed test over a different universe");
  return delta_open_.contains_bits(a.bits() ^ universe_->full_mask());
}

Bits Topology::interior_bits(Bits a) const noexcept {
  Bits acc = 0;
  for (Bits m : opens_.member_bits())
    if ((m & ~a) == 0) acc |= m;
  return acc;
}

Bits Topology::closure_bits(Bits a) const noexcept {
  const Bits full = universe_->full_mask();
  return interior_bits(a ^ full) ^ full;
}

Bits Topology::delta_interior_bits(Bits a) const {
  Bits acc = 0;
  for (Bits m : regular_open_.member_bits())
    if ((m & ~a) == 0) acc |= m;

  // Alternate form via open neighborhoods and int(cl(U)).
  Bits alt = 0;
  const auto& opens = opens_.member_bits();
  for (size_t i = 0; i < opens.size(); ++i)
    if ((int_cl_of_open_[i] & ~a) == 0) alt |= opens[i];
  if (alt != acc)
    throw InternalError("delta-interior forms disagree on " + bits_to_string(*universe_, a));
  return acc;
}

Bits Topology::delta_closure_bits(Bits a) const {
  const int n = universe_->size();
  Bits acc = 0;
  for (int x = 0; x < n; ++x) {
    const Bits px = static_cast<Bits>(1u) << x;
    bool every = true;
    for (Bits m : regular_open_.member_bits()) {
      if ((m & px) && (m & a) == 0) {
        every = false;
        break;
      }
    }
    if (every) acc |= px;
  }

  Bits alt = 0;
  const auto& opens = opens_.member_bits();
  for (int x = 0; x < n; ++x) {
    const Bits px = static_cast<Bits>(1u) << x;
    bool every = true;
    for (size_t i = 0; i < opens.size(); ++i) {
      if ((opens[i] & px) && (int_cl_of_open_[i] & a) == 0) {
        every = false;
        break;
      }
    }
    if (every) alt |= px;
  }
  if (alt != acc)
    throw InternalError("delta-closure forms disagree on " + bits_to_string(*universe_, a));
  return acc;
}

Topology validate_topology(const SetFamily& opens) { return Topology::validate(opens); }

}  // namespace primaltop
