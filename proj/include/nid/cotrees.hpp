#pragma once

// Branching signatures f: B → A, truncated M-type elements as sets of
// paths ⟨a0, b0, a1, ..., an⟩, coalgebra unfolding, and well-founded states.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nid/closure.hpp"

namespace nid::cotrees {

class Signature {
 public:
  Signature() = default;
  /// fiber[b] = f(b), an index into a_labels.
  Signature(Universe a_labels, Universe b_labels, std::vector<std::size_t> fiber)
      : a_(std::move(a_labels)), b_(std::move(b_labels)), fiber_(std::move(fiber)), branches_(a_.size()) {
    if (fiber_.size() != b_.size()) throw InvalidInput("fiber map must be total on B");
    for (std::size_t b = 0; b < fiber_.size(); ++b) {
      if (fiber_[b] >= a_.size()) throw InvalidInput("fiber of " + b_.name(b) + " is not a label");
      branches_[fiber_[b]].push_back(b);
    }
  }

  const Universe& a_labels() const noexcept { return a_; }
  const Universe& b_labels() const noexcept { return b_; }
  std::size_t fiber(std::size_t b) const { return fiber_.at(b); }
  /// f⁻¹(a), ascending.
  const std::vector<std::size_t>& branches(std::size_t a) const { return branches_.at(a); }

 private:
  Universe a_, b_;
  std::vector<std::size_t> fiber_;
  std::vector<std::vector<std::size_t>> branches_;
};

/// ⟨a0, b0, a1, ..., an⟩ as label indices; odd length.
using Path = std::vector<std::size_t>;

inline std::size_t steps(const Path& p) { return p.size() / 2; }

struct PathSet {
  std::set<Path> paths;
  std::size_t depth = 0;

  friend bool operator==(const PathSet&, const PathSet&) = default;
};

struct MTypeReport {
  bool valid = true;
  std::vector<std::string> violations;
};

inline std::string path_to_string(const Signature& sig, const Path& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += i % 2 == 0 ? sig.a_labels().name(p[i]) : sig.b_labels().name(p[i]);
  }
  return out + ">";
}

/// Conditions on paths with at most `depth` b-steps: a unique root label;
/// for every path shorter than `depth` and every b in the fiber of its last
/// label, a unique extension by ⟨b, a⟩; closure under initial segments.
/// Throws MalformedPath on a path that is not over the signature.
inline MTypeReport validate_mtype_element(const Signature& sig, const PathSet& m) {
  for (const auto& p : m.paths) {
    if (p.size() % 2 == 0) throw MalformedPath("path of even length");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto bound = i % 2 == 0 ? sig.a_labels().size() : sig.b_labels().size();
      if (p[i] >= bound) throw MalformedPath("path entry out of range");
      if (i % 2 == 1 && sig.fiber(p[i]) != p[i - 1])
        throw MalformedPath("branch " + sig.b_labels().name(p[i]) + " does not lie over " +
                            sig.a_labels().name(p[i - 1]));
    }
  }

  MTypeReport report;
  auto violation = [&report](std::string message) {
    report.valid = false;
    report.violations.push_back(std::move(message));
  };

  std::size_t roots = 0;
  for (const auto& p : m.paths) roots += p.size() == 1;
  if (roots != 1) violation("expected exactly one root label, found " + std::to_string(roots));

  for (const auto& p : m.paths) {
    if (steps(p) > m.depth) violation("path " + path_to_string(sig, p) + " is deeper than the truncation depth");
    if (p.size() > 1) {
      Path prefix(p.begin(), p.end() - 2);
      if (!m.paths.count(prefix)) violation("initial segment of " + path_to_string(sig, p) + " is missing");
    }
    for (auto b : sig.branches(p.back())) {
      std::size_t extensions = 0;
      for (std::size_t a = 0; a < sig.a_labels().size(); ++a) {
        auto next = p;
        next.push_back(b);
        next.push_back(a);
        extensions += m.paths.count(next);
      }
      if (extensions > 1 || (extensions == 0 && steps(p) < m.depth))
        violation("path " + path_to_string(sig, p) + " has " + std::to_string(extensions) + " extensions along " +
                  sig.b_labels().name(b));
    }
  }
  return report;
}

/// A finite coalgebra X → P_f(X): each state has a label a and a child for
/// every b ∈ f⁻¹(a).
class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(Signature sig, Universe states, std::vector<std::size_t> labels,
            std::vector<std::map<std::size_t, std::size_t>> children)
      : sig_(std::move(sig)), states_(std::move(states)), labels_(std::move(labels)), children_(std::move(children)) {
    const auto n = states_.size();
    if (labels_.size() != n || children_.size() != n) throw InvalidInput("coalgebra step must be total on states");
    for (std::size_t x = 0; x < n; ++x) {
      if (labels_[x] >= sig_.a_labels().size()) throw InvalidInput("state " + states_.name(x) + " has an unknown label");
      const auto& want = sig_.branches(labels_[x]);
      if (children_[x].size() != want.size())
        throw InvalidInput("children of " + states_.name(x) + " must be indexed by the fiber of its label");
      for (auto b : want) {
        auto it = children_[x].find(b);
        if (it == children_[x].end()) throw InvalidInput("state " + states_.name(x) + " lacks a child along " + sig_.b_labels().name(b));
        if (it->second >= n) throw InvalidInput("child of " + states_.name(x) + " is not a state");
      }
    }
  }

  const Signature& signature() const noexcept { return sig_; }
  const Universe& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t label(std::size_t x) const { return labels_.at(x); }
  const std::map<std::size_t, std::size_t>& children(std::size_t x) const { return children_.at(x); }

 private:
  Signature sig_;
  Universe states_;
  std::vector<std::size_t> labels_;
  std::vector<std::map<std::size_t, std::size_t>> children_;
};

namespace detail {

inline void unfold_from(const Coalgebra& c, std::size_t x, std::size_t budget, Path& prefix, std::set<Path>& out) {
  prefix.push_back(c.label(x));
  out.insert(prefix);
  if (budget > 0)
    for (auto [b, y] : c.children(x)) {
      prefix.push_back(b);
      unfold_from(c, y, budget - 1, prefix, out);
      prefix.pop_back();
    }
  prefix.pop_back();
}

}  // namespace detail

/// Paths with at most d b-steps traced from x.
inline PathSet unfold(const Coalgebra& c, std::size_t x, std::size_t d) {
  if (x >= c.size()) throw InvalidInput("unfold: not a state");
  PathSet out;
  out.depth = d;
  Path prefix;
  detail::unfold_from(c, x, d, prefix, out.paths);
  return out;
}

struct RootAndSubtrees {
  std::size_t root = 0;
  std::map<std::size_t, PathSet> subtrees;
};

/// The root label a and t(b) = {σ : ⟨a,b⟩ * σ ∈ m} at depth d − 1.
inline RootAndSubtrees root_and_subtrees(const Signature& sig, const PathSet& m) {
  const auto report = validate_mtype_element(sig, m);
  if (!report.valid) throw PreconditionFailed("root_and_subtrees: " + report.violations.front());
  RootAndSubtrees out;
  for (const auto& p : m.paths)
    if (p.size() == 1) out.root = p.front();
  const auto& branches = sig.branches(out.root);
  if (!branches.empty() && m.depth == 0) throw PreconditionFailed("root_and_subtrees: depth 0 has no subtrees");
  for (auto b : branches) out.subtrees[b].depth = m.depth - 1;
  for (const auto& p : m.paths)
    if (p.size() > 1) out.subtrees[p[1]].paths.insert(Path(p.begin() + 2, p.end()));
  return out;
}

/// Rules ({children of x}, {x}) on the states.
inline RuleSystem wellfounded_rules(const Coalgebra& c) {
  const auto n = c.size();
  std::vector<Rule> rules;
  for (std::size_t x = 0; x < n; ++x) {
    Rule r{BitVector(n), BitVector(n)};
    for (auto [b, y] : c.children(x)) r.premise.set(y);
    r.conclusion.set(x);
    rules.push_back(std::move(r));
  }
  return RuleSystem(c.states(), std::move(rules));
}

/// Least set of states containing x whenever it contains all children of x.
inline Subset wellfounded_states(const Coalgebra& c) {
  const auto r = wellfounded_rules(c);
  return lfp(r, Subset(c.states()));
}

/// Equality of the denoted M-type elements, decided by unfolding to depth
/// |states|.
inline bool mtype_equal(const Coalgebra& c, std::size_t x, std::size_t y) {
  return unfold(c, x, c.size()) == unfold(c, y, c.size());
}

}  // namespace nid::cotrees
