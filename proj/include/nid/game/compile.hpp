#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nid/closure.hpp"
#include "nid/game/formula.hpp"

namespace nid::game {

/// Which formulas may be introduced as conjunctions. At finite scale every
/// conjunction is finitary, so `finitary` admits all of them; `elementary`
/// restricts introduction to conjunction-free formulas (which excludes every
/// conjunction), and is only faithful for theories with conjunction-free
/// hypotheses.
enum class Variant { finitary, elementary };

/// A game theory compiled to a rule system on S = P ∪ subformulas(T).
/// Letters occupy indices 0..|P|-1, so the closed-set search decides them
/// first and the rest follows by propagation.
class CompiledTheory {
 public:
  const Universe& letters() const noexcept { return letters_; }
  const RuleSystem& system() const noexcept { return system_; }
  const std::vector<Formula>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> find(const Formula& f) const {
    auto it = index_.find(f.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// X ↦ {p ∈ P : p ∈ X}
  BitVector decode(const BitVector& closed) const {
    BitVector m(letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (closed.test(i)) m.set(i);
    return m;
  }

  SubsetFamily decode(const std::vector<BitVector>& family) const {
    std::vector<BitVector> out;
    out.reserve(family.size());
    for (const auto& x : family) out.push_back(decode(x));
    return SubsetFamily(letters_, std::move(out));
  }

 private:
  friend CompiledTheory compile_propositional(const GameTheory&, const Limits&, Variant);

  std::size_t add(const Formula& f) {
    auto key = f.key();
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    for (const auto& c : f.children()) add(c);
    const auto i = elements_.size();
    elements_.push_back(f);
    index_.emplace(std::move(key), i);
    return i;
  }

  Universe letters_;
  RuleSystem system_;
  std::vector<Formula> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline bool conjunction_free(const Formula& f) {
  if (f.kind() == Formula::Kind::conj) return false;
  return std::all_of(f.children().begin(), f.children().end(), conjunction_free);
}

/// Rules on S:
///   ({⋀φᵢ}, {φᵢ₀})          conjunction elimination
///   ({⋁φᵢ}, {φᵢ : i})       disjunction elimination
///   ({φᵢ : i}, {⋀φᵢ})       conjunction introduction (per variant)
///   ({φᵢ₀}, {⋁φᵢ})          disjunction introduction
///   ({φ}, {ψ})              for each sequent φ → ψ
inline CompiledTheory compile_propositional(const GameTheory& t, const Limits& limits = {},
                                            Variant variant = Variant::finitary) {
  limits.check(t.letters().size(), "compile_propositional: letters");
  CompiledTheory c;
  c.letters_ = t.letters();
  for (const auto& name : t.letters().names()) c.add(Formula::atom(name));
  for (const auto& s : t.sequents()) {
    c.add(s.hypothesis);
    c.add(s.conclusion);
  }
  const auto n = c.elements_.size();
  limits.check_encoded(n, "compile_propositional: subformulas");

  auto single = [n](std::size_t i) {
    BitVector v(n);
    v.set(i);
    return v;
  };
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = c.elements_[i];
    if (f.is_atom()) continue;
    BitVector children(n);
    for (const auto& child : f.children()) children.set(*c.find(child));
    if (f.kind() == Formula::Kind::conj) {
      for (auto k : children.indices()) rules.push_back({single(i), single(k)});
      if (variant == Variant::finitary || conjunction_free(f)) rules.push_back({children, single(i)});
    } else {
      rules.push_back({single(i), children});
      for (auto k : children.indices()) rules.push_back({single(k), single(i)});
    }
  }
  for (const auto& s : t.sequents())
    rules.push_back({single(*c.find(s.hypothesis)), single(*c.find(s.conclusion))});

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& f : c.elements_) names.push_back(f.key());
  c.system_ = RuleSystem(Universe(std::move(names)), std::move(rules));
  return c;
}

/// Models of T read off the closed sets of the compiled system.
inline SubsetFamily decoded_models(const CompiledTheory& c) { return c.decode(detail::closed_sets(c.system())); }

inline SubsetFamily decoded_generators(const CompiledTheory& c) {
  return c.decode(detail::pointwise_minimal(detail::closed_sets(c.system()), c.system().universe().size()));
}

/// Models of T by evaluating every subset of the letters.
inline SubsetFamily models(const GameTheory& t, const Limits& limits = {}) {
  const auto n = t.letters().size();
  limits.check(n, "models");
  if (n > 30) throw CapExceeded(n, 30, "models");
  std::vector<BitVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BitVector m(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) m.set(i);
    if (satisfies(t, m)) out.push_back(std::move(m));
  }
  return SubsetFamily(t.letters(), std::move(out));
}

inline SubsetFamily minimal_models(const GameTheory& t, const Limits& limits = {}) {
  return minimal_members(models(t, limits));
}

}  // namespace nid::game
