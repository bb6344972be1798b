#include "primaltop/set_core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace primaltop {

Universe::Universe(std::vector<std::string> points) : points_(std::move(points)) {
  if (points_.empty())
    throw BoundError("universe-empty", "a universe needs at least one point");
  if (points_.size() > static_cast<size_t>(kMaxPoints))
    throw BoundError("universe-too-large",
                     "universe has " + std::to_string(points_.size()) +
                         " points; the engine supports at most " + std::to_string(kMaxPoints));
  std::unordered_set<std::string_view> seen;
  for (const auto& p : points_) {
    if (p.empty()) throw UnknownPointError("point names must be non-empty");
    if (!seen.insert(p).second)
      throw UnknownPointError("duplicate point name \"" + p + "\"");
  }
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> points) {
  return std::make_shared<const Universe>(std::move(points));
}

std::shared_ptr<const Universe> Universe::make(std::initializer_list<const char*> points) {
  std::vector<std::string> names;
  names.reserve(points.size());
  for (const char* p : points) names.emplace_back(p);
  return make(std::move(names));
}

int Universe::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownPointError("point \"" + std::string(name) + "\" is not in the universe");
}

std::optional<int> Universe::find(std::string_view name) const noexcept {
  for (size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same_universe(const UniversePtr& a, const UniversePtr& b, const char* op) {
  if (!same_universe(a, b))
    throw UniverseMismatchError(std::string(op) + " requires both operands over one universe");
}

}  // namespace

Subset::Subset(UniversePtr universe, Bits bits) : universe_(std::move(universe)), bits_(bits) {
  if (!universe_) throw UniverseMismatchError("subset constructed without a universe");
  if (bits_ & ~universe_->full_mask())
    throw InternalError("subset bit pattern has bits beyond the universe size");
}

Subset Subset::empty(UniversePtr universe) { return Subset(std::move(universe), 0); }

Subset Subset::full(UniversePtr universe) {
  Bits full = universe->full_mask();
  return Subset(std::move(universe), full);
}

Subset Subset::of(UniversePtr universe, std::initializer_list<std::string_view> names) {
  Bits bits = 0;
  for (auto n : names) bits |= static_cast<Bits>(1u) << universe->index_of(n);
  return Subset(std::move(universe), bits);
}

Subset Subset::of(UniversePtr universe, const std::vector<std::string>& names) {
  Bits bits = 0;
  for (const auto& n : names) bits |= static_cast<Bits>(1u) << universe->index_of(n);
  return Subset(std::move(universe), bits);
}

int Subset::count() const noexcept { return std::popcount(bits_); }

bool Subset::contains(std::string_view name) const { return contains_index(universe_->index_of(name)); }

bool Subset::is_subset_of(const Subset& other) const {
  require_same_universe(universe_, other.universe_, "subset comparison");
  return (bits_ & ~other.bits_) == 0;
}

std::vector<std::string> Subset::names() const {
  std::vector<std::string> out;
  for (int i = 0; i < universe_->size(); ++i)
    if (contains_index(i)) out.push_back(universe_->name_of(i));
  return out;
}

std::string Subset::to_string() const { return bits_to_string(*universe_, bits_); }

bool Subset::operator==(const Subset& other) const noexcept {
  return bits_ == other.bits_ && same_universe(universe_, other.universe_);
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same_universe(a.universe_, b.universe_, "union");
  return Subset(a.universe_, a.bits_ | b.bits_);
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same_universe(a.universe_, b.universe_, "intersection");
  return Subset(a.universe_, a.bits_ & b.bits_);
}

Subset operator-(const Subset& a, const Subset& b) {
  require_same_universe(a.universe_, b.universe_, "difference");
  return Subset(a.universe_, a.bits_ & ~b.bits_);
}

SetFamily::SetFamily(UniversePtr universe, std::vector<Bits> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (!universe_) throw UniverseMismatchError("set family constructed without a universe");
  const Bits full = universe_->full_mask();
  for (Bits m : members_)
    if (m & ~full) throw InternalError("family member has bits beyond the universe size");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const size_t words = (static_cast<size_t>(full) + 64) / 64;
  table_.assign(words, 0);
  for (Bits m : members_) table_[m >> 6] |= std::uint64_t{1} << (m & 63u);
}

SetFamily SetFamily::from_subsets(UniversePtr universe, const std::vector<Subset>& members) {
  std::vector<Bits> bits;
  bits.reserve(members.size());
  for (const auto& s : members) {
    require_same_universe(universe, s.universe_ptr(), "family construction");
    bits.push_back(s.bits());
  }
  return SetFamily(std::move(universe), std::move(bits));
}

SetFamily SetFamily::of(UniversePtr universe,
                        std::initializer_list<std::initializer_list<std::string_view>> members) {
  std::vector<Bits> bits;
  bits.reserve(members.size());
  for (const auto& names : members) bits.push_back(Subset::of(universe, names).bits());
  return SetFamily(std::move(universe), std::move(bits));
}

std::vector<Subset> SetFamily::members() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (Bits m : members_) out.emplace_back(universe_, m);
  return out;
}

bool SetFamily::contains(const Subset& s) const {
  require_same_universe(universe_, s.universe_ptr(), "family membership");
  return contains_bits(s.bits());
}

bool SetFamily::contains_bits(Bits bits) const noexcept {
  return (table_[bits >> 6] >> (bits & 63u)) & 1u;
}

Subset SetFamily::union_all() const {
  Bits acc = 0;
  for (Bits m : members_) acc |= m;
  return Subset(universe_, acc);
}

Subset SetFamily::intersection_all() const {
  Bits acc = universe_->full_mask();
  for (Bits m : members_) acc &= m;
  return Subset(universe_, acc);
}

bool SetFamily::includes(const SetFamily& other) const {
  require_same_universe(universe_, other.universe_, "family inclusion");
  for (Bits m : other.members_)
    if (!contains_bits(m)) return false;
  return true;
}

SetFamily SetFamily::with(Bits extra) const {
  std::vector<Bits> members = members_;
  members.push_back(extra);
  return SetFamily(universe_, std::move(members));
}

SetFamily SetFamily::without(Bits removed) const {
  std::vector<Bits> members;
  members.reserve(members_.size());
  for (Bits m : members_)
    if (m != removed) members.push_back(m);
  return SetFamily(universe_, std::move(members));
}

std::string SetFamily::to_string() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < members_.size(); ++i) {
    out << (i ? ", " : " ") << bits_to_string(*universe_, members_[i]);
  }
  out << (members_.empty() ? "}" : " }");
  return out.str();
}

bool SetFamily::operator==(const SetFamily& other) const noexcept {
  return members_ == other.members_ && same_universe(universe_, other.universe_);
}

Powerset::Powerset(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw UniverseMismatchError("powerset of a null universe");
}

std::string bits_to_string(const Universe& universe, Bits bits) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < universe.size(); ++i) {
    if ((bits >> i) & 1u) {
      if (!first) out += ",";
      out += universe.name_of(i);
      first = false;
    }
  }
  out += "}";
  return out;
}

}  // namespace primaltop
