#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "nid/closure.hpp"
#include "nid/encodings/fullness.hpp"

namespace nid::encodings {

/// A finite directed graph.
class Graph {
 public:
  Graph() = default;
  Graph(Universe nodes, std::vector<std::pair<std::size_t, std::size_t>> edges) : nodes_(std::move(nodes)) {
    for (const auto& [from, to] : edges)
      if (from >= nodes_.size() || to >= nodes_.size()) throw InvalidInput("edge endpoint is not a node");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    successors_.resize(nodes_.size());
    for (const auto& [from, to] : edges_) successors_[from].push_back(to);
  }

  static Graph from_names(std::vector<std::string> nodes,
                          const std::vector<std::pair<std::string, std::string>>& edges) {
    Universe u(std::move(nodes));
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (const auto& [a, b] : edges) e.emplace_back(u.index(a), u.index(b));
    return Graph(u, std::move(e));
  }

  const Universe& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& successors(std::size_t v) const { return successors_.at(v); }

 private:
  Universe nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> successors_;
};

/// Universe A×B with names "(a,b)", row-major.
inline Universe product_universe(const Universe& a, const Universe& b) {
  std::vector<std::string> names;
  names.reserve(a.size() * b.size());
  for (const auto& x : a.names())
    for (const auto& y : b.names()) names.push_back(pair_name(x, y));
  return Universe(std::move(names));
}

/// Bisimulations between g1 and g2 are exactly the closed sets of these
/// elementary rules over A×B: for (a,b) and an edge a→a′ of g1,
/// ({(a,b)}, {(a′,b′) : b→b′}); symmetrically for edges of g2.
inline RuleSystem bisimulation_rules(const Graph& g1, const Graph& g2, const Limits& limits = {}) {
  const auto na = g1.size(), nb = g2.size();
  limits.check(na * nb, "bisimulation_rules");
  const auto n = na * nb;
  auto at = [nb](std::size_t a, std::size_t b) { return a * nb + b; };
  std::vector<Rule> rules;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      for (auto a2 : g1.successors(a)) {
        Rule r{BitVector(n), BitVector(n)};
        r.premise.set(at(a, b));
        for (auto b2 : g2.successors(b)) r.conclusion.set(at(a2, b2));
        rules.push_back(std::move(r));
      }
      for (auto b2 : g2.successors(b)) {
        Rule r{BitVector(n), BitVector(n)};
        r.premise.set(at(a, b));
        for (auto a2 : g1.successors(a)) r.conclusion.set(at(a2, b2));
        rules.push_back(std::move(r));
      }
    }
  return RuleSystem(product_universe(g1.nodes(), g2.nodes()), std::move(rules));
}

/// The union of all bisimulations, as the greatest closed set of the
/// bisimulation rules.
inline Subset largest_bisimulation(const Graph& g1, const Graph& g2, const Limits& limits = {}) {
  return greatest_closed(bisimulation_rules(g1, g2, limits));
}

inline bool bisimilar(const Graph& g1, const Graph& g2, std::size_t a, std::size_t b, const Limits& limits = {}) {
  if (a >= g1.size() || b >= g2.size()) throw InvalidInput("bisimilar: node out of range");
  return largest_bisimulation(g1, g2, limits).contains(a * g2.size() + b);
}

}  // namespace nid::encodings
