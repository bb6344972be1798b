#pragma once

#include <initializer_list>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primaltop/errors.hpp"

namespace primaltop {

/// An ordered finite list of distinct point names. The order fixes the bit
/// position of every point in all subsets over this universe.
///
/// Universes are immutable and shared by pointer; all values derived from a
/// universe hold a shared_ptr to it.
class Universe {
 public:
  static constexpr int kMaxPoints = 16;

  explicit Universe(std::vector<std::string> points);

  static std::shared_ptr<const Universe> make(std::vector<std::string> points);
  static std::shared_ptr<const Universe> make(std::initializer_list<const char*> points);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& name_of(int index) const { return points_.at(static_cast<size_t>(index)); }

  /// Index of a point name; throws UnknownPointError when absent.
  int index_of(std::string_view name) const;
  std::optional<int> find(std::string_view name) const noexcept;

  Bits full_mask() const noexcept { return static_cast<Bits>((1u << points_.size()) - 1u); }

  /// Universes are equal when they list the same names in the same order.
  bool operator==(const Universe& other) const noexcept { return points_ == other.points_; }
  bool operator!=(const Universe& other) const noexcept { return !(*this == other); }

 private:
  std::vector<std::string> points_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// True when the two handles denote the same universe (pointer fast path,
/// structural comparison otherwise).
bool same_universe(const UniversePtr& a, const UniversePtr& b) noexcept;

/// A subset of a universe, stored as a bit vector. Immutable value type;
/// all set algebra is pure and requires both operands to share a universe.
class Subset {
 public:
  Subset(UniversePtr universe, Bits bits);

  static Subset empty(UniversePtr universe);
  static Subset full(UniversePtr universe);
  /// Builds a subset from point names; throws UnknownPointError.
  static Subset of(UniversePtr universe, std::initializer_list<std::string_view> names);
  static Subset of(UniversePtr universe, const std::vector<std::string>& names);

  Bits bits() const noexcept { return bits_; }
  const Universe& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }

  int count() const noexcept;
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == universe_->full_mask(); }
  bool contains_index(int index) const noexcept { return (bits_ >> index) & 1u; }
  bool contains(std::string_view name) const;

  Subset complement() const { return Subset(universe_, bits_ ^ universe_->full_mask()); }
  bool is_subset_of(const Subset& other) const;

  /// Point names present in this subset, in universe order.
  std::vector<std::string> names() const;
  /// Brace rendering in universe order, e.g. "{a,c}"; "{}" for the empty set.
  std::string to_string() const;

  bool operator==(const Subset& other) const noexcept;
  bool operator!=(const Subset& other) const noexcept { return !(*this == other); }

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);

 private:
  UniversePtr universe_;
  Bits bits_;
};

/// A duplicate-free collection of subsets over one universe, kept in
/// canonical order (ascending bit pattern). Membership tests are O(1)
/// through a bit table indexed by pattern.
class SetFamily {
 public:
  SetFamily(UniversePtr universe, std::vector<Bits> members);
  static SetFamily from_subsets(UniversePtr universe, const std::vector<Subset>& members);
  static SetFamily of(UniversePtr universe,
                      std::initializer_list<std::initializer_list<std::string_view>> members);

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const Universe& universe() const noexcept { return *universe_; }

  size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Bits>& member_bits() const noexcept { return members_; }
  Subset at(size_t i) const { return Subset(universe_, members_.at(i)); }
  std::vector<Subset> members() const;

  bool contains(const Subset& s) const;
  bool contains_bits(Bits bits) const noexcept;

  /// Union of all members; the empty family yields the empty set.
  Subset union_all() const;
  /// Intersection of all members; the empty family yields the whole universe.
  Subset intersection_all() const;

  /// True when every member of `other` belongs to this family.
  bool includes(const SetFamily& other) const;

  SetFamily with(Bits extra) const;
  SetFamily without(Bits removed) const;

  std::string to_string() const;

  bool operator==(const SetFamily& other) const noexcept;
  bool operator!=(const SetFamily& other) const noexcept { return !(*this == other); }

 private:
  UniversePtr universe_;
  std::vector<Bits> members_;        // sorted ascending, unique
  std::vector<std::uint64_t> table_; // membership bit table over 2^n patterns
};

/// Iterable over all subsets of a universe in canonical order, from the
/// empty set up to the whole universe.
class Powerset {
 public:
  explicit Powerset(UniversePtr universe);

  class iterator {
   public:
    using value_type = Subset;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const UniversePtr* universe, std::uint32_t next) : universe_(universe), next_(next) {}
    Subset operator*() const { return Subset(*universe_, static_cast<Bits>(next_)); }
    iterator& operator++() { ++next_; return *this; }
    iterator operator++(int) { iterator old = *this; ++next_; return old; }
    bool operator==(const iterator& o) const noexcept { return next_ == o.next_; }
    bool operator!=(const iterator& o) const noexcept { return next_ != o.next_; }

   private:
    const UniversePtr* universe_;
    std::uint32_t next_;
  };

  iterator begin() const { return iterator(&universe_, 0); }
  iterator end() const { return iterator(&universe_, static_cast<std::uint32_t>(universe_->full_mask()) + 1); }
  size_t size() const noexcept { return static_cast<size_t>(universe_->full_mask()) + 1; }

 private:
  UniversePtr universe_;
};

/// Renders a bit pattern against a universe, e.g. "{a,c}".
std::string bits_to_string(const Universe& universe, Bits bits);

}  // namespace primaltop
