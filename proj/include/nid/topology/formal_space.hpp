#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nid/closure.hpp"

namespace nid::topology {

/// A set-presented formal space: basics ℙ, a preorder ≤, and for each basic p
/// a finite list BCov(p) of basic covers.
class FormalSpace {
 public:
  FormalSpace() = default;

  /// `leq` must already be reflexive and transitive; `bcov[p]` lists the
  /// covers of p. Throws PreconditionFailed otherwise.
  FormalSpace(Universe basics, const std::vector<std::pair<std::size_t, std::size_t>>& leq,
              std::vector<std::vector<BitVector>> bcov)
      : basics_(std::move(basics)), bcov_(std::move(bcov)) {
    const auto n = basics_.size();
    up_.assign(n, BitVector(n));
    down_.assign(n, BitVector(n));
    for (auto [p, q] : leq) {
      if (p >= n || q >= n) throw InvalidInput("order pair outside the basics");
      up_[p].set(q);
      down_[q].set(p);
    }
    for (std::size_t p = 0; p < n; ++p)
      if (!up_[p].test(p)) throw PreconditionFailed("preorder is not reflexive at " + basics_.name(p));
    for (std::size_t p = 0; p < n; ++p)
      for (auto q : up_[p].indices())
        if (!up_[q].is_subset_of(up_[p]))
          throw PreconditionFailed("preorder is not transitive at " + basics_.name(p) + " <= " + basics_.name(q));
    if (bcov_.size() < n) bcov_.resize(n);
    if (bcov_.size() > n) throw InvalidInput("covers given for more basics than declared");
    for (const auto& covers : bcov_)
      for (const auto& s : covers)
        if (s.size() != n) throw UniverseMismatch("cover is not a subset of the basics");
  }

  /// As above, after taking the reflexive-transitive closure of `leq`.
  static FormalSpace closing(Universe basics, std::vector<std::pair<std::size_t, std::size_t>> leq,
                             std::vector<std::vector<BitVector>> bcov) {
    const auto n = basics.size();
    std::vector<BitVector> up(n, BitVector(n));
    for (std::size_t p = 0; p < n; ++p) up[p].set(p);
    for (auto [p, q] : leq) {
      if (p >= n || q >= n) throw InvalidInput("order pair outside the basics");
      up[p].set(q);
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < n; ++p)
        if (up[p].test(k)) up[p] |= up[k];
    std::vector<std::pair<std::size_t, std::size_t>> closed;
    for (std::size_t p = 0; p < n; ++p)
      for (auto q : up[p].indices()) closed.emplace_back(p, q);
    return FormalSpace(std::move(basics), closed, std::move(bcov));
  }

  const Universe& basics() const noexcept { return basics_; }
  std::size_t size() const noexcept { return basics_.size(); }
  bool leq(std::size_t p, std::size_t q) const { return up_[p].test(q); }
  const BitVector& up(std::size_t p) const { return up_[p]; }
  const BitVector& down(std::size_t p) const { return down_[p]; }
  const std::vector<BitVector>& bcov(std::size_t p) const { return bcov_[p]; }

  /// ↓S = {r : r ≤ s for some s ∈ S}
  BitVector down(const BitVector& s) const {
    BitVector out(size());
    for (auto x : s.indices()) out |= down_[x];
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < size(); ++p)
      for (auto q : up_[p].indices()) out.emplace_back(p, q);
    return out;
  }

 private:
  Universe basics_;
  std::vector<BitVector> up_, down_;
  std::vector<std::vector<BitVector>> bcov_;
};

inline constexpr std::size_t kMaxCoverBasics = 12;

inline std::uint64_t mask_of(const BitVector& s) { return s.size() == 0 ? 0 : s.words()[0]; }

/// For every U ⊆ ℙ, the set {p : p ◁ U}.
class CoverRelation {
 public:
  CoverRelation() = default;
  CoverRelation(Universe basics, std::vector<BitVector> covered)
      : basics_(std::move(basics)), covered_(std::move(covered)) {}

  const Universe& basics() const noexcept { return basics_; }
  const BitVector& covered_by(const BitVector& u) const { return covered_.at(mask_of(u)); }
  bool covers(std::size_t p, const BitVector& u) const { return covered_by(u).test(p); }

  /// All U with p ◁ U, ascending.
  std::vector<BitVector> covers_of(std::size_t p) const {
    std::vector<BitVector> out;
    for (std::uint64_t m = 0; m < covered_.size(); ++m)
      if (covered_[m].test(p)) out.push_back(from_mask(m));
    return out;
  }

  BitVector from_mask(std::uint64_t m) const {
    BitVector s(basics_.size());
    for (std::size_t i = 0; i < basics_.size(); ++i)
      if ((m >> i) & 1u) s.set(i);
    return s;
  }

  friend bool operator==(const CoverRelation& a, const CoverRelation& b) { return a.covered_ == b.covered_; }

 private:
  Universe basics_;
  std::vector<BitVector> covered_;
};

/// Least cover relation containing p ◁ U for p ∈ ↓U and closed under the
/// localized axiom rule: if p ≤ q, S ∈ BCov(q) and every r ∈ ↓p ∩ ↓S has
/// r ◁ U, then p ◁ U.
inline CoverRelation saturate_cover(const FormalSpace& fs) {
  const auto n = fs.size();
  if (n > kMaxCoverBasics) throw CapExceeded(n, kMaxCoverBasics, "saturate_cover");
  std::vector<BitVector> covered;
  covered.reserve(std::size_t{1} << n);
  CoverRelation helper(fs.basics(), {});
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto c = fs.down(helper.from_mask(m));
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t p = 0; p < n; ++p) {
        if (c.test(p)) continue;
        for (auto q : fs.up(p).indices()) {
          bool fires = false;
          for (const auto& s : fs.bcov(q))
            if ((fs.down(p) & fs.down(s)).is_subset_of(c)) {
              fires = true;
              break;
            }
          if (fires) {
            c.set(p);
            changed = true;
            break;
          }
        }
      }
    }
    covered.push_back(std::move(c));
  }
  return CoverRelation(fs.basics(), std::move(covered));
}

/// The space with the same basics and order whose basic covers of p are the
/// ⊆-minimal U with p ◁ U. Its covers present `cov` exactly: p ◁ U iff some
/// basic cover of p is contained in U.
inline FormalSpace presentation_of(const FormalSpace& fs, const CoverRelation& cov) {
  std::vector<std::vector<BitVector>> bcov(fs.size());
  for (std::size_t p = 0; p < fs.size(); ++p) bcov[p] = minimal_members(cov.covers_of(p));
  return FormalSpace(fs.basics(), fs.order_pairs(), std::move(bcov));
}

/// Every cover of p in `cov` contains a basic cover of p, and conversely.
inline bool presents(const FormalSpace& fs, const CoverRelation& cov) {
  for (std::size_t p = 0; p < fs.size(); ++p) {
    for (const auto& s : fs.bcov(p))
      if (!cov.covers(p, s)) return false;
    for (const auto& u : cov.covers_of(p)) {
      bool contains = false;
      for (const auto& s : fs.bcov(p)) contains = contains || s.is_subset_of(u);
      if (!contains) return false;
    }
  }
  return true;
}

}  // namespace nid::topology
