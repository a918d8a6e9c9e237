#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nid/subset.hpp"

namespace nid {

/// Size bounds for exhaustive operations.
///
/// `max_universe` bounds the universes a caller hands in (rule systems,
/// propositional letters, ring carriers, basics of a formal space).
/// `max_encoded` bounds universes that an encoding builds internally from a
/// small input (subformula sets, finite powersets, grounded atoms).
struct Limits {
  std::size_t max_universe = 24;
  std::size_t max_encoded = 4096;

  void check(std::size_t size, const char* what) const {
    if (size > max_universe) throw CapExceeded(size, max_universe, what);
  }
  void check_encoded(std::size_t size, const char* what) const {
    if (size > max_encoded) throw CapExceeded(size, max_encoded, what);
  }
};

/// A rule (a, b): whenever every element of `premise` is in a set, some
/// element of `conclusion` must be in it too. An empty conclusion is a
/// prohibition; an empty premise makes the rule unconditional.
struct Rule {
  BitVector premise;
  BitVector conclusion;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct RuleHash {
  std::size_t operator()(const Rule& r) const noexcept {
    return r.premise.hash() * 31u ^ r.conclusion.hash();
  }
};

/// Shape of a rule system. Every rule over a finite universe is finitary,
/// so that classification is not recorded.
struct Classification {
  bool elementary = true;     // every premise is a singleton
  bool deterministic = true;  // every conclusion is a singleton
  std::size_t max_premise = 0;
  std::size_t max_conclusion = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// A finite universe with a set of rules on it. Immutable after construction;
/// duplicate rules are dropped, first occurrence wins.
class RuleSystem {
 public:
  RuleSystem() = default;

  RuleSystem(Universe universe, std::vector<Rule> rules) : universe_(std::move(universe)) {
    std::unordered_set<Rule, RuleHash> seen;
    for (auto& r : rules) {
      if (r.premise.size() != universe_.size() || r.conclusion.size() != universe_.size())
        throw UniverseMismatch("rule is not over the rule system's universe");
      if (seen.insert(r).second) rules_.push_back(std::move(r));
    }
    classify_rules();
  }

  RuleSystem(Universe universe, const std::vector<std::pair<Subset, Subset>>& rules)
      : RuleSystem(universe, to_rules(universe, rules)) {}

  /// Convenience constructor from element names.
  static RuleSystem from_names(std::vector<std::string> universe,
                               const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& rules) {
    Universe u(std::move(universe));
    std::vector<Rule> out;
    for (const auto& [a, b] : rules) out.push_back({Subset::of(u, a).bits(), Subset::of(u, b).bits()});
    return RuleSystem(u, std::move(out));
  }

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const Classification& classification() const noexcept { return flags_; }
  bool elementary() const noexcept { return flags_.elementary; }
  bool deterministic() const noexcept { return flags_.deterministic; }

  Subset premise(std::size_t i) const { return Subset(universe_, rules_.at(i).premise); }
  Subset conclusion(std::size_t i) const { return Subset(universe_, rules_.at(i).conclusion); }

  /// A copy with one more rule (used by the monotonicity property).
  RuleSystem with_rule(Rule rule) const {
    auto rules = rules_;
    rules.push_back(std::move(rule));
    return RuleSystem(universe_, std::move(rules));
  }

 private:
  static std::vector<Rule> to_rules(const Universe& u, const std::vector<std::pair<Subset, Subset>>& rules) {
    std::vector<Rule> out;
    for (const auto& [a, b] : rules) {
      if (!(a.universe() == u) || !(b.universe() == u)) throw UniverseMismatch();
      out.push_back({a.bits(), b.bits()});
    }
    return out;
  }

  void classify_rules() {
    flags_ = {};
    for (const auto& r : rules_) {
      auto a = r.premise.count();
      auto b = r.conclusion.count();
      flags_.elementary = flags_.elementary && a == 1;
      flags_.deterministic = flags_.deterministic && b == 1;
      flags_.max_premise = std::max(flags_.max_premise, a);
      flags_.max_conclusion = std::max(flags_.max_conclusion, b);
    }
  }

  Universe universe_;
  std::vector<Rule> rules_;
  Classification flags_;
};

inline Classification classify(const RuleSystem& r) { return r.classification(); }

enum class StarMode {
  plain,      // same rules over X ∪ {*}
  star_rule,  // additionally (∅, {*})
};

inline constexpr const char* kStarName = "*";

/// Adjoins a fresh element "*" as the last element of the universe.
inline RuleSystem star_extend(const RuleSystem& r, StarMode mode) {
  if (r.universe().find(kStarName)) throw InvalidInput("universe already contains the fresh element '*'");
  auto names = r.universe().names();
  names.emplace_back(kStarName);
  Universe extended(std::move(names));
  const std::size_t n = extended.size();

  auto widen = [n](const BitVector& v) {
    BitVector w(n);
    for (auto i : v.indices()) w.set(i);
    return w;
  };
  std::vector<Rule> rules;
  rules.reserve(r.rules().size() + 1);
  for (const auto& rule : r.rules()) rules.push_back({widen(rule.premise), widen(rule.conclusion)});
  if (mode == StarMode::star_rule) {
    BitVector star(n);
    star.set(n - 1);
    rules.push_back({BitVector(n), std::move(star)});
  }
  return RuleSystem(std::move(extended), std::move(rules));
}

}  // namespace nid
