#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nid/bit_vector.hpp"
#include "nid/error.hpp"

namespace nid {

/// An ordered list of distinct element names. Element i is the i-th name.
/// Copies share the name table, so passing universes around is cheap.
class Universe {
 public:
  Universe() : data_(std::make_shared<Data>()) {}

  explicit Universe(std::vector<std::string> names) {
    auto data = std::make_shared<Data>();
    data->index.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!data->index.emplace(names[i], i).second)
        throw InvalidInput("duplicate element name '" + names[i] + "'");
    }
    data->names = std::move(names);
    data_ = std::move(data);
  }

  Universe(std::initializer_list<std::string> names) : Universe(std::vector<std::string>(names)) {}

  std::size_t size() const noexcept { return data_->names.size(); }
  bool empty() const noexcept { return data_->names.empty(); }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw InvalidInput("unknown element '" + std::string(name) + "'");
  }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// A subset of a universe.
class Subset {
 public:
  Subset() = default;
  explicit Subset(Universe universe) : universe_(std::move(universe)), bits_(universe_.size()) {}
  Subset(Universe universe, BitVector bits) : universe_(std::move(universe)), bits_(std::move(bits)) {
    if (bits_.size() != universe_.size())
      throw UniverseMismatch("bit-vector length does not match universe size");
  }

  static Subset of(const Universe& universe, const std::vector<std::string>& names) {
    Subset s(universe);
    for (const auto& n : names) s.insert(universe.index(n));
    return s;
  }
  static Subset of_indices(const Universe& universe, std::initializer_list<std::size_t> indices) {
    Subset s(universe);
    for (auto i : indices) s.insert(i);
    return s;
  }
  static Subset full(const Universe& universe) {
    return Subset(universe, BitVector::full(universe.size()));
  }

  const Universe& universe() const noexcept { return universe_; }
  const BitVector& bits() const& noexcept { return bits_; }
  BitVector bits() && noexcept { return std::move(bits_); }

  bool contains(std::size_t i) const { return bits_.test(i); }
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool is_subset_of(const Subset& other) const {
    check_same(other);
    return bits_.is_subset_of(other.bits_);
  }
  /// b ≬ y: the intersection is inhabited.
  bool meets(const Subset& other) const {
    check_same(other);
    return bits_.intersects(other.bits_);
  }

  Subset operator|(const Subset& o) const {
    check_same(o);
    return Subset(universe_, bits_ | o.bits_);
  }
  Subset operator&(const Subset& o) const {
    check_same(o);
    return Subset(universe_, bits_ & o.bits_);
  }
  Subset operator-(const Subset& o) const {
    check_same(o);
    return Subset(universe_, bits_ - o.bits_);
  }

  std::vector<std::size_t> indices() const { return bits_.indices(); }

  /// Element names in declaration order.
  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (auto i : bits_.indices()) out.push_back(universe_.name(i));
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto i : bits_.indices()) {
      if (!first) out += ",";
      out += universe_.name(i);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const Subset& a, const Subset& b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) { return a.bits_ <=> b.bits_; }

 private:
  void check_same(const Subset& o) const {
    if (bits_.size() != o.bits_.size()) throw UniverseMismatch();
  }

  Universe universe_;
  BitVector bits_;
};

/// A duplicate-free family of subsets of one universe, kept in canonical
/// (ascending bit-vector value) order.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(Universe universe) : universe_(std::move(universe)) {}

  SubsetFamily(Universe universe, std::vector<BitVector> members) : universe_(std::move(universe)) {
    members_.reserve(members.size());
    for (auto& m : members) {
      if (m.size() != universe_.size()) throw UniverseMismatch("family member has wrong length");
      members_.push_back(std::move(m));
    }
    normalize();
  }

  SubsetFamily(Universe universe, const std::vector<Subset>& members) : universe_(std::move(universe)) {
    members_.reserve(members.size());
    for (const auto& m : members) {
      if (!(m.universe() == universe_)) throw UniverseMismatch("family member over another universe");
      members_.push_back(m.bits());
    }
    normalize();
  }

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  Subset operator[](std::size_t i) const { return Subset(universe_, members_.at(i)); }
  const std::vector<BitVector>& bits() const& noexcept { return members_; }
  std::vector<BitVector> bits() && noexcept { return std::move(members_); }

  std::vector<Subset> members() const {
    std::vector<Subset> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.emplace_back(universe_, m);
    return out;
  }

  bool contains(const BitVector& bits) const {
    return std::binary_search(members_.begin(), members_.end(), bits);
  }
  bool contains(const Subset& s) const { return contains(s.bits()); }

  /// Every member of *this is a member of other.
  bool is_subfamily_of(const SubsetFamily& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  void insert(BitVector bits) {
    auto it = std::lower_bound(members_.begin(), members_.end(), bits);
    if (it == members_.end() || *it != bits) members_.insert(it, std::move(bits));
  }

  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) { return a.members_ == b.members_; }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  Universe universe_;
  std::vector<BitVector> members_;
};

/// Inclusion-minimal members of a list of bit vectors (duplicates removed).
/// Members are visited by increasing cardinality, so each candidate is only
/// compared with the minimal members found so far.
inline std::vector<BitVector> minimal_members(std::vector<BitVector> family) {
  std::stable_sort(family.begin(), family.end(),
                   [](const BitVector& a, const BitVector& b) { return a.count() < b.count(); });
  std::vector<BitVector> kept;
  for (auto& x : family) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const BitVector& k) { return k.is_subset_of(x); });
    if (!dominated) kept.push_back(std::move(x));
  }
  return kept;
}

inline std::vector<BitVector> maximal_members(std::vector<BitVector> family) {
  std::stable_sort(family.begin(), family.end(),
                   [](const BitVector& a, const BitVector& b) { return a.count() > b.count(); });
  std::vector<BitVector> kept;
  for (auto& x : family) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const BitVector& k) { return x.is_subset_of(k); });
    if (!dominated) kept.push_back(std::move(x));
  }
  return kept;
}

inline SubsetFamily minimal_members(const SubsetFamily& family) {
  return SubsetFamily(family.universe(), minimal_members(family.bits()));
}

inline SubsetFamily maximal_members(const SubsetFamily& family) {
  return SubsetFamily(family.universe(), maximal_members(family.bits()));
}

}  // namespace nid
