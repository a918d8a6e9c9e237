#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "nid/closure.hpp"

namespace nid::encodings {

/// One clause (σ, Γ): if σ ⊆ α then some U ∈ Γ has U ⊆ α.
struct SgaClause {
  Subset sigma;
  std::vector<Subset> gamma;
};

/// A clause system Z over a base set S; its model class is
/// M(Z) = {α ⊆ S : every clause holds in α}.
class SgaInstance {
 public:
  SgaInstance() = default;
  SgaInstance(Universe base, std::vector<SgaClause> clauses) : base_(std::move(base)), clauses_(std::move(clauses)) {
    for (const auto& c : clauses_) {
      if (!(c.sigma.universe() == base_)) throw UniverseMismatch("clause premise is not over the base set");
      for (const auto& u : c.gamma)
        if (!(u.universe() == base_)) throw UniverseMismatch("clause alternative is not over the base set");
    }
  }

  const Universe& base() const noexcept { return base_; }
  const std::vector<SgaClause>& clauses() const noexcept { return clauses_; }

 private:
  Universe base_;
  std::vector<SgaClause> clauses_;
};

inline bool satisfies(const SgaInstance& z, const BitVector& alpha) {
  for (const auto& c : z.clauses()) {
    if (!c.sigma.bits().is_subset_of(alpha)) continue;
    bool witnessed = false;
    for (const auto& u : c.gamma)
      if (u.bits().is_subset_of(alpha)) {
        witnessed = true;
        break;
      }
    if (!witnessed) return false;
  }
  return true;
}

/// M(Z) by direct evaluation over every subset of S.
inline SubsetFamily models_of_sga(const SgaInstance& z, const Limits& limits = {}) {
  const auto n = z.base().size();
  limits.check(n, "models_of_sga");
  if (n > 30) throw CapExceeded(n, 30, "models_of_sga");
  std::vector<BitVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BitVector alpha(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) alpha.set(i);
    if (satisfies(z, alpha)) out.push_back(std::move(alpha));
  }
  return SubsetFamily(z.base(), std::move(out));
}

/// Finitary rule system on S* whose closed sets decode to M(Z).
///
/// S* holds every finite subset of S (at finite scale, all of Pow(S), which
/// already contains every alternative U of every clause). Singletons come
/// first so that the closed-set search decides them before anything else.
/// Rules:
///   ({σ}, Γ)                 for each clause (σ, Γ)
///   ({U}, {{u}})             for each u ∈ U ∈ S*
///   ({{s} : s ∈ σ}, {σ})     for each σ ∈ S*
struct SgaEncoding {
  Universe base;
  RuleSystem system;
  std::vector<BitVector> members;       // S*-element -> subset of S
  std::vector<std::size_t> singleton;   // s -> index of {s} in S*
  std::vector<std::size_t> positions;   // bitmask over S -> S* index

  std::size_t index_of(const BitVector& subset) const {
    std::uint64_t mask = 0;
    for (auto i : subset.indices()) mask |= std::uint64_t{1} << i;
    return positions.at(static_cast<std::size_t>(mask));
  }

  /// γ ↦ {s ∈ S : {s} ∈ γ}
  BitVector decode(const BitVector& gamma) const {
    BitVector alpha(base.size());
    for (std::size_t s = 0; s < base.size(); ++s)
      if (gamma.test(singleton[s])) alpha.set(s);
    return alpha;
  }

  SubsetFamily decode(const std::vector<BitVector>& family) const {
    std::vector<BitVector> out;
    for (const auto& g : family) out.push_back(decode(g));
    return SubsetFamily(base, std::move(out));
  }
};

inline std::string subset_name(const Universe& u, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i)
    if ((mask >> i) & 1u) {
      if (!first) out += ",";
      out += u.name(i);
      first = false;
    }
  return out + "}";
}

inline SgaEncoding sga_to_nid(const SgaInstance& z, const Limits& limits = {}) {
  const auto n = z.base().size();
  limits.check(n, "sga_to_nid");
  if (n > 20) throw CapExceeded(n, 20, "sga_to_nid: base set");
  const std::uint64_t count = std::uint64_t{1} << n;
  limits.check_encoded(count, "sga_to_nid: S*");

  SgaEncoding enc;
  enc.base = z.base();
  enc.positions.assign(count, 0);
  std::vector<std::uint64_t> order;
  for (std::size_t s = 0; s < n; ++s) order.push_back(std::uint64_t{1} << s);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (std::popcount(mask) != 1) order.push_back(mask);

  std::vector<std::string> names;
  for (std::size_t k = 0; k < order.size(); ++k) {
    enc.positions[static_cast<std::size_t>(order[k])] = k;
    names.push_back(subset_name(z.base(), order[k]));
    BitVector m(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((order[k] >> i) & 1u) m.set(i);
    enc.members.push_back(std::move(m));
  }
  for (std::size_t s = 0; s < n; ++s) enc.singleton.push_back(s);

  const auto size = order.size();
  auto single = [size](std::size_t i) {
    BitVector v(size);
    v.set(i);
    return v;
  };
  std::vector<Rule> rules;
  for (const auto& c : z.clauses()) {
    BitVector alternatives(size);
    for (const auto& u : c.gamma) alternatives.set(enc.index_of(u.bits()));
    rules.push_back({single(enc.index_of(c.sigma.bits())), std::move(alternatives)});
  }
  for (std::size_t k = 0; k < size; ++k)
    for (auto u : enc.members[k].indices()) rules.push_back({single(k), single(enc.singleton[u])});
  for (std::size_t k = 0; k < size; ++k) {
    BitVector premise(size);
    for (auto s : enc.members[k].indices()) premise.set(enc.singleton[s]);
    rules.push_back({std::move(premise), single(k)});
  }
  enc.system = RuleSystem(Universe(std::move(names)), std::move(rules));
  return enc;
}

/// Decoded closed family of the encoding; equals M(Z).
inline SubsetFamily decoded_closed(const SgaEncoding& enc) { return enc.decode(detail::closed_sets(enc.system)); }

/// Decoded least generating family of the encoding; strongly generates M(Z).
inline SubsetFamily decoded_generators(const SgaEncoding& enc) {
  return enc.decode(detail::pointwise_minimal(detail::closed_sets(enc.system), enc.system.universe().size()));
}

/// Z := {(a, {{x} : x ∈ b}) : (a, b) ∈ R}.
inline SgaInstance nid_to_sga(const RuleSystem& r) {
  std::vector<SgaClause> clauses;
  for (std::size_t i = 0; i < r.rules().size(); ++i) {
    SgaClause c{r.premise(i), {}};
    for (auto x : r.rules()[i].conclusion.indices()) {
      Subset single(r.universe());
      single.insert(x);
      c.gamma.push_back(std::move(single));
    }
    clauses.push_back(std::move(c));
  }
  return SgaInstance(r.universe(), std::move(clauses));
}

}  // namespace nid::encodings
