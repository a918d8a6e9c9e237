#pragma once

#include <vector>

#include "nid/topology/formal_space.hpp"

namespace nid::topology {

/// Rules on ℙ:
///   ({p}, {q})                        for p ≤ q
///   ({p, q}, {r : r ≤ p, r ≤ q})      for all p, q
///   ({p}, ↓S)                         for S ∈ BCov(p)
inline RuleSystem points_rules(const FormalSpace& fs, const Limits& limits = {}) {
  const auto n = fs.size();
  limits.check(n, "points_rules");
  auto single = [n](std::size_t i) {
    BitVector v(n);
    v.set(i);
    return v;
  };
  std::vector<Rule> rules;
  for (std::size_t p = 0; p < n; ++p)
    for (auto q : fs.up(p).indices()) rules.push_back({single(p), single(q)});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      auto premise = single(p);
      premise.set(q);
      rules.push_back({std::move(premise), fs.down(p) & fs.down(q)});
    }
  for (std::size_t p = 0; p < n; ++p)
    for (const auto& s : fs.bcov(p)) rules.push_back({single(p), fs.down(s)});
  return RuleSystem(fs.basics(), std::move(rules));
}

/// Points: the inhabited closed sets of points_rules.
inline SubsetFamily enumerate_points(const FormalSpace& fs, const Limits& limits = {}) {
  std::vector<BitVector> out;
  for (auto& x : detail::closed_sets(points_rules(fs, limits)))
    if (x.any()) out.push_back(std::move(x));
  return SubsetFamily(fs.basics(), std::move(out));
}

struct Flatness {
  bool flat = false;          // every point is ⊆-minimal
  bool all_maximal = false;   // every point is ⊆-maximal
  std::size_t points = 0;
};

inline Flatness flatness(const FormalSpace& fs, const Limits& limits = {}) {
  const auto points = enumerate_points(fs, limits);
  return {minimal_members(points.bits()).size() == points.size(), maximal_members(points.bits()).size() == points.size(),
          points.size()};
}

inline bool is_flat(const FormalSpace& fs, const Limits& limits = {}) { return flatness(fs, limits).flat; }

}  // namespace nid::topology
