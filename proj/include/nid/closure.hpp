#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nid/rule_system.hpp"

namespace nid {

namespace detail {

// Backtracking enumeration of closed sets. Each rule (a, b) is the clause
// "some element of a is out, or some element of b is in"; per-rule counters
// give unit propagation in both directions:
//   all of a in, all but one of b out  -> the remaining element of b is in
//   all of b out, all but one of a in  -> the remaining element of a is out
// Elements are decided in index order, "out" before "in".
class ClosedSetSearch {
 public:
  explicit ClosedSetSearch(const RuleSystem& system) : n_(system.universe().size()) {
    const auto& rules = system.rules();
    premise_.resize(rules.size());
    conclusion_.resize(rules.size());
    in_premise_.resize(n_);
    in_conclusion_.resize(n_);
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (auto e : rules[i].premise.indices()) {
        premise_[i].push_back(static_cast<std::uint32_t>(e));
        in_premise_[e].push_back(static_cast<std::uint32_t>(i));
      }
      for (auto e : rules[i].conclusion.indices()) {
        conclusion_[i].push_back(static_cast<std::uint32_t>(e));
        in_conclusion_[e].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  /// Calls visit(const BitVector&) for every closed y with
  /// forced_in ⊆ y and y ∩ forced_out = ∅, in search order.
  template <class Visit>
  void run(const BitVector& forced_in, const BitVector& forced_out, Visit&& visit) {
    reset();
    for (std::uint32_t i = 0; i < premise_.size(); ++i) queue_.push_back(i);
    if (!propagate()) return;
    for (auto e : forced_in.indices())
      if (!force(e, 1)) return;
    for (auto e : forced_out.indices())
      if (!force(e, 0)) return;
    search(0, visit);
  }

 private:
  void reset() {
    value_.assign(n_, -1);
    trail_.clear();
    queue_.clear();
    premise_in_.assign(premise_.size(), 0);
    premise_out_.assign(premise_.size(), 0);
    conclusion_in_.assign(premise_.size(), 0);
    conclusion_out_.assign(premise_.size(), 0);
  }

  bool force(std::size_t e, std::int8_t v) {
    if (value_[e] == v) return true;
    if (value_[e] != -1) return false;
    assign(e, v);
    return propagate();
  }

  template <class Visit>
  void search(std::size_t next, Visit& visit) {
    while (next < n_ && value_[next] != -1) ++next;
    if (next == n_) {
      BitVector y(n_);
      for (std::size_t e = 0; e < n_; ++e)
        if (value_[e] == 1) y.set(e);
      visit(static_cast<const BitVector&>(y));
      return;
    }
    for (std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
      const auto mark = trail_.size();
      assign(next, v);
      if (propagate()) search(next + 1, visit);
      undo(mark);
    }
  }

  void assign(std::size_t e, std::int8_t v) {
    value_[e] = v;
    trail_.push_back(static_cast<std::uint32_t>(e));
    for (auto i : in_premise_[e]) {
      ++(v ? premise_in_[i] : premise_out_[i]);
      queue_.push_back(i);
    }
    for (auto i : in_conclusion_[e]) {
      ++(v ? conclusion_in_[i] : conclusion_out_[i]);
      queue_.push_back(i);
    }
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto e = trail_.back();
      trail_.pop_back();
      const bool in = value_[e] == 1;
      for (auto i : in_premise_[e]) --(in ? premise_in_[i] : premise_out_[i]);
      for (auto i : in_conclusion_[e]) --(in ? conclusion_in_[i] : conclusion_out_[i]);
      value_[e] = -1;
    }
  }

  bool propagate() {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto i = queue_[head];
      if (premise_out_[i] > 0 || conclusion_in_[i] > 0) continue;
      const auto a = premise_[i].size();
      const auto b = conclusion_[i].size();
      if (premise_in_[i] == a) {
        if (conclusion_out_[i] == b) {
          queue_.clear();
          return false;
        }
        if (conclusion_out_[i] + 1 == b) assign(unassigned(conclusion_[i]), 1);
      } else if (conclusion_out_[i] == b && premise_in_[i] + 1 == a) {
        assign(unassigned(premise_[i]), 0);
      }
    }
    queue_.clear();
    return true;
  }

  std::size_t unassigned(const std::vector<std::uint32_t>& elements) const {
    for (auto e : elements)
      if (value_[e] == -1) return e;
    return elements.front();  // unreachable: counters guarantee one exists
  }

  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> premise_, conclusion_;
  std::vector<std::vector<std::uint32_t>> in_premise_, in_conclusion_;
  std::vector<std::int8_t> value_;
  std::vector<std::uint32_t> trail_, queue_;
  std::vector<std::uint32_t> premise_in_, premise_out_, conclusion_in_, conclusion_out_;
};

inline bool is_closed_bits(const RuleSystem& r, const BitVector& y) {
  for (const auto& rule : r.rules())
    if (rule.premise.is_subset_of(y) && !rule.conclusion.intersects(y)) return false;
  return true;
}

/// All closed sets respecting the given assumptions, unchecked against caps.
inline std::vector<BitVector> closed_sets(const RuleSystem& r, const BitVector& forced_in,
                                          const BitVector& forced_out) {
  std::vector<BitVector> out;
  ClosedSetSearch(r).run(forced_in, forced_out, [&](const BitVector& y) { out.push_back(y); });
  return out;
}

inline std::vector<BitVector> closed_sets(const RuleSystem& r) {
  const auto n = r.universe().size();
  return closed_sets(r, BitVector(n), BitVector(n));
}

inline void check_universe(const RuleSystem& r, const Subset& s) {
  if (!(s.universe() == r.universe())) throw UniverseMismatch();
}

inline void check_universe(const RuleSystem& r, const SubsetFamily& f) {
  if (!(f.universe() == r.universe())) throw UniverseMismatch("family is over a different universe");
}

/// Union over x of the minimal members containing x.
inline std::vector<BitVector> pointwise_minimal(const std::vector<BitVector>& family, std::size_t n) {
  std::vector<BitVector> out;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<BitVector> with_x;
    for (const auto& y : family)
      if (y.test(x)) with_x.push_back(y);
    for (auto& m : minimal_members(std::move(with_x))) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// a ⊆ y implies b ≬ y, for every rule (a, b).
inline bool is_closed(const RuleSystem& r, const Subset& y) {
  detail::check_universe(r, y);
  return detail::is_closed_bits(r, y.bits());
}

/// Every closed subset of the universe, canonically ordered.
inline SubsetFamily enumerate_closed(const RuleSystem& r, const Limits& limits = {}) {
  limits.check(r.universe().size(), "enumerate_closed");
  return SubsetFamily(r.universe(), detail::closed_sets(r));
}

inline SubsetFamily minimal_closed(const RuleSystem& r, const Limits& limits = {}) {
  limits.check(r.universe().size(), "minimal_closed");
  return SubsetFamily(r.universe(), minimal_members(detail::closed_sets(r)));
}

inline SubsetFamily maximal_closed(const RuleSystem& r, const Limits& limits = {}) {
  limits.check(r.universe().size(), "maximal_closed");
  return SubsetFamily(r.universe(), maximal_members(detail::closed_sets(r)));
}

/// Inclusion-minimal closed sets containing `seed`.
inline SubsetFamily minimal_closed_supersets(const RuleSystem& r, const Subset& seed, const Limits& limits = {}) {
  detail::check_universe(r, seed);
  limits.check(r.universe().size(), "minimal_closed_supersets");
  auto found = detail::closed_sets(r, seed.bits(), BitVector(r.universe().size()));
  return SubsetFamily(r.universe(), minimal_members(std::move(found)));
}

/// The smallest generating family: for each x, the minimal closed sets
/// containing x. Any generating family must contain all of them, since a
/// minimal closed set around x can only be covered at x by itself.
inline SubsetFamily least_generating_family(const RuleSystem& r, const Limits& limits = {}) {
  limits.check(r.universe().size(), "least_generating_family");
  return SubsetFamily(r.universe(), detail::pointwise_minimal(detail::closed_sets(r), r.universe().size()));
}

/// Family-level generation: every α in `cls` is the union of the members of
/// `g` below it. Membership of g in cls is not checked here.
inline bool generates(const std::vector<BitVector>& cls, const std::vector<BitVector>& g) {
  for (const auto& alpha : cls) {
    BitVector covered(alpha.size());
    for (const auto& beta : g)
      if (beta.is_subset_of(alpha)) covered |= beta;
    if (covered != alpha) return false;
  }
  return true;
}

/// Family-level strong generation: for every α in `cls` and every σ ⊆ α
/// some β ∈ g has σ ⊆ β ⊆ α. All subsets σ are tried.
inline bool strongly_generates(const std::vector<BitVector>& cls, const std::vector<BitVector>& g) {
  for (const auto& alpha : cls) {
    std::vector<const BitVector*> below;
    for (const auto& beta : g)
      if (beta.is_subset_of(alpha)) below.push_back(&beta);
    const auto elements = alpha.indices();
    if (elements.size() > 30) throw CapExceeded(elements.size(), 30, "strong generation check: set size");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elements.size()); ++mask) {
      BitVector sigma(alpha.size());
      for (std::size_t k = 0; k < elements.size(); ++k)
        if ((mask >> k) & 1u) sigma.set(elements[k]);
      bool fits = false;
      for (const auto* beta : below)
        if (sigma.is_subset_of(*beta)) {
          fits = true;
          break;
        }
      if (!fits) return false;
    }
  }
  return true;
}

namespace detail {
inline void require_closed_members(const RuleSystem& r, const SubsetFamily& g) {
  for (const auto& beta : g.bits())
    if (!is_closed_bits(r, beta))
      throw NotClosed("generating family member " + Subset(r.universe(), beta).to_string() + " is not closed");
}
}  // namespace detail

/// α = ⋃ {β ∈ g : β ⊆ α} for every closed α. Throws NotClosed when g has a
/// member that is not closed.
inline bool is_generating(const RuleSystem& r, const SubsetFamily& g, const Limits& limits = {}) {
  detail::check_universe(r, g);
  limits.check(r.universe().size(), "is_generating");
  detail::require_closed_members(r, g);
  return generates(detail::closed_sets(r), g.bits());
}

/// For every closed α and every σ ⊆ α some β ∈ g has σ ⊆ β ⊆ α.
inline bool is_strongly_generating(const RuleSystem& r, const SubsetFamily& g, const Limits& limits = {}) {
  detail::check_universe(r, g);
  limits.check(r.universe().size(), "is_strongly_generating");
  detail::require_closed_members(r, g);
  return strongly_generates(detail::closed_sets(r), g.bits());
}

/// A full family computed through the extension by a fresh element *: pick a
/// generating family of the extended system and keep F − {*} for every
/// member F containing *. The generating family used is the least one
/// together with the maximal closed sets, so that every closed set both
/// contains a member and lies below a member.
inline SubsetFamily full_family(const RuleSystem& r, const Limits& limits = {}) {
  limits.check(r.universe().size(), "full_family");
  const auto extended = star_extend(r, StarMode::plain);
  const auto n = r.universe().size();
  const auto closed = detail::closed_sets(extended);
  auto generators = detail::pointwise_minimal(closed, n + 1);
  for (auto& m : maximal_members(closed)) generators.push_back(std::move(m));

  std::vector<BitVector> family;
  for (const auto& f : generators) {
    if (!f.test(n)) continue;
    BitVector stripped(n);
    for (auto i : f.indices())
      if (i < n) stripped.set(i);
    family.push_back(std::move(stripped));
  }
  return SubsetFamily(r.universe(), std::move(family));
}

/// Least closed superset of `seed` in a deterministic system, by firing
/// every applicable rule until nothing changes.
inline Subset lfp(const RuleSystem& r, const Subset& seed) {
  detail::check_universe(r, seed);
  if (!r.deterministic())
    throw PreconditionFailed("lfp requires a deterministic rule system (every conclusion a singleton)");
  BitVector current = seed.bits();
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : r.rules()) {
      if (rule.premise.is_subset_of(current) && !rule.conclusion.is_subset_of(current)) {
        current |= rule.conclusion;
        changed = true;
      }
    }
  }
  return Subset(r.universe(), std::move(current));
}

/// Largest closed set of an elementary system (closed sets of an elementary
/// system are closed under unions). Computed by deleting every element whose
/// rule has a conclusion that misses the current set.
inline Subset greatest_closed(const RuleSystem& r) {
  if (!r.elementary()) throw PreconditionFailed("greatest_closed requires an elementary rule system");
  BitVector current = BitVector::full(r.universe().size());
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : r.rules()) {
      if (rule.premise.is_subset_of(current) && !rule.conclusion.intersects(current)) {
        current -= rule.premise;
        changed = true;
      }
    }
  }
  return Subset(r.universe(), std::move(current));
}

}  // namespace nid
