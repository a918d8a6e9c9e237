#pragma once

// Brute-force reference implementations. Each filters a full search space
// against a definition read literally, sharing only data types with the
// engine.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "nid/cotrees.hpp"
#include "nid/encodings/bisimulation.hpp"
#include "nid/encodings/prime_ideals.hpp"
#include "nid/game/linear_orders.hpp"
#include "nid/rule_system.hpp"
#include "nid/topology/formal_space.hpp"

namespace nid::oracles {

inline constexpr std::size_t kMaxClosed = 16;
inline constexpr std::size_t kMaxRing = 16;
inline constexpr std::size_t kMaxLinear = 7;
inline constexpr std::size_t kMaxPoints = 10;
inline constexpr std::size_t kMaxMorphismPairs = 12;

namespace detail {

inline BitVector from_mask(std::uint64_t mask, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) v.set(i);
  return v;
}

inline bool in_mask(std::uint64_t mask, std::size_t i) { return (mask >> i) & 1u; }

}  // namespace detail

/// All Y ⊆ X with: a ⊆ Y implies b ∩ Y inhabited, for every rule (a, b).
inline SubsetFamily brute_closed(const RuleSystem& r) {
  const auto n = r.universe().size();
  if (n > kMaxClosed) throw CapExceeded(n, kMaxClosed, "brute_closed");
  std::vector<BitVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (const auto& rule : r.rules()) {
      bool premise_inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (rule.premise.test(i) && !detail::in_mask(mask, i)) premise_inside = false;
      bool meets = false;
      for (std::size_t i = 0; i < n; ++i)
        if (rule.conclusion.test(i) && detail::in_mask(mask, i)) meets = true;
      if (premise_inside && !meets) closed = false;
    }
    if (closed) out.push_back(detail::from_mask(mask, n));
  }
  return SubsetFamily(r.universe(), std::move(out));
}

/// Inhabited, closed under +, absorbing under ·, without 1, and prime.
inline SubsetFamily brute_prime_ideals(const encodings::FiniteRing& ring) {
  const auto n = ring.size();
  if (n > kMaxRing) throw CapExceeded(n, kMaxRing, "brute_prime_ideals");
  std::vector<BitVector> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [mask](std::size_t i) { return detail::in_mask(mask, i); };
    bool ok = !in(ring.one());
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (in(x) && in(y) && !in(ring.add(x, y))) ok = false;
        if (in(x) && !in(ring.mul(x, y))) ok = false;
        if (in(ring.mul(x, y)) && !in(x) && !in(y)) ok = false;
      }
    if (ok) out.push_back(detail::from_mask(mask, n));
  }
  return SubsetFamily(ring.carrier(), std::move(out));
}

/// Start from A×B and delete pairs violating either bullet until stable.
/// Result over the row-major product universe.
inline Subset greatest_bisimulation(const encodings::Graph& g1, const encodings::Graph& g2) {
  const auto na = g1.size(), nb = g2.size();
  std::vector<std::vector<bool>> k(na, std::vector<bool>(nb, true));
  auto edge = [](const encodings::Graph& g, std::size_t x, std::size_t y) {
    return std::find(g.edges().begin(), g.edges().end(), std::pair{x, y}) != g.edges().end();
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b) {
        if (!k[a][b]) continue;
        bool ok = true;
        for (std::size_t a2 = 0; a2 < na && ok; ++a2) {
          if (!edge(g1, a, a2)) continue;
          bool matched = false;
          for (std::size_t b2 = 0; b2 < nb; ++b2) matched = matched || (edge(g2, b, b2) && k[a2][b2]);
          ok = matched;
        }
        for (std::size_t b2 = 0; b2 < nb && ok; ++b2) {
          if (!edge(g2, b, b2)) continue;
          bool matched = false;
          for (std::size_t a2 = 0; a2 < na; ++a2) matched = matched || (edge(g1, a, a2) && k[a2][b2]);
          ok = matched;
        }
        if (!ok) {
          k[a][b] = false;
          changed = true;
        }
      }
  }
  Subset out(encodings::product_universe(g1.nodes(), g2.nodes()));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      if (k[a][b]) out.insert(a * nb + b);
  return out;
}

/// Permutations (least element first) whose order contains ≤.
inline std::vector<std::vector<std::size_t>> brute_linear_extensions(const game::Poset& poset) {
  const auto n = poset.size();
  if (n > kMaxLinear) throw CapExceeded(n, kMaxLinear, "brute_linear_extensions");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool extends = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (poset.leq(perm[i], perm[j])) extends = false;
    if (extends) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Which family of covers condition (3) of a point quantifies over.
enum class PointCovers { full, basic };

/// Inhabited α that are upwards closed, downwards directed, and meet every
/// cover of each of their members.
inline SubsetFamily brute_points(const topology::FormalSpace& fs, const topology::CoverRelation& cov,
                                 PointCovers covers = PointCovers::full) {
  const auto n = fs.size();
  if (n > kMaxPoints) throw CapExceeded(n, kMaxPoints, "brute_points");
  std::vector<BitVector> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [mask](std::size_t i) { return detail::in_mask(mask, i); };
    bool ok = true;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (in(p) && fs.leq(p, q) && !in(q)) ok = false;
    for (std::size_t p = 0; p < n && ok; ++p)
      for (std::size_t q = 0; q < n && ok; ++q) {
        if (!in(p) || !in(q)) continue;
        bool below_both = false;
        for (std::size_t r = 0; r < n; ++r) below_both = below_both || (in(r) && fs.leq(r, p) && fs.leq(r, q));
        ok = below_both;
      }
    for (std::size_t p = 0; p < n && ok; ++p) {
      if (!in(p)) continue;
      std::vector<BitVector> cs = covers == PointCovers::full ? cov.covers_of(p) : fs.bcov(p);
      for (const auto& s : cs) {
        bool meets = false;
        for (auto x : s.indices()) meets = meets || in(x);
        if (!meets) ok = false;
      }
    }
    if (ok) out.push_back(detail::from_mask(mask, n));
  }
  return SubsetFamily(fs.basics(), std::move(out));
}

/// Relations F ⊆ ℙ×ℚ (row-major) passing conditions (1)–(5) of a continuous
/// map, with every "cover" ranging over all U such that p ◁ U.
inline SubsetFamily brute_morphisms(const topology::FormalSpace& src, const topology::FormalSpace& dst,
                                    const topology::CoverRelation& cov_src, const topology::CoverRelation& cov_dst) {
  const auto np = src.size(), nq = dst.size();
  if (np * nq > kMaxMorphismPairs) throw CapExceeded(np * nq, kMaxMorphismPairs, "brute_morphisms");
  const std::uint64_t subsets_p = std::uint64_t{1} << np, subsets_q = std::uint64_t{1} << nq;
  auto covers_p = [&](std::size_t p, std::uint64_t u) { return cov_src.covers(p, detail::from_mask(u, np)); };
  auto covers_q = [&](std::size_t q, std::uint64_t t) { return cov_dst.covers(q, detail::from_mask(t, nq)); };

  std::vector<BitVector> out;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << (np * nq)); ++rel) {
    auto f = [&](std::size_t p, std::size_t q) { return detail::in_mask(rel, p * nq + q); };
    // some U with p ◁ U all of whose members satisfy `good`
    auto some_cover = [&](std::size_t p, auto good) {
      for (std::uint64_t u = 0; u < subsets_p; ++u) {
        if (!covers_p(p, u)) continue;
        bool all = true;
        for (std::size_t p2 = 0; p2 < np; ++p2)
          if (detail::in_mask(u, p2) && !good(p2)) all = false;
        if (all) return true;
      }
      return false;
    };
    bool ok = true;

    for (std::size_t p = 0; p < np && ok; ++p)
      for (std::size_t q = 0; q < nq && ok; ++q)
        for (std::size_t p2 = 0; p2 < np && ok; ++p2)
          for (std::size_t q2 = 0; q2 < nq && ok; ++q2)
            if (f(p, q) && src.leq(p2, p) && dst.leq(q, q2) && !f(p2, q2)) ok = false;

    for (std::size_t q = 0; q < nq && ok; ++q)
      for (std::uint64_t u = 0; u < subsets_p && ok; ++u) {
        bool inside = true;
        for (std::size_t p2 = 0; p2 < np; ++p2)
          if (detail::in_mask(u, p2) && !f(p2, q)) inside = false;
        if (!inside) continue;
        for (std::size_t p = 0; p < np; ++p)
          if (covers_p(p, u) && !f(p, q)) ok = false;
      }

    for (std::size_t p = 0; p < np && ok; ++p)
      ok = some_cover(p, [&](std::size_t p2) {
        for (std::size_t q2 = 0; q2 < nq; ++q2)
          if (f(p2, q2)) return true;
        return false;
      });

    for (std::size_t p = 0; p < np && ok; ++p)
      for (std::size_t q0 = 0; q0 < nq && ok; ++q0)
        for (std::size_t q1 = 0; q1 < nq && ok; ++q1) {
          if (!f(p, q0) || !f(p, q1)) continue;
          ok = some_cover(p, [&](std::size_t p2) {
            for (std::size_t q2 = 0; q2 < nq; ++q2)
              if (dst.leq(q2, q0) && dst.leq(q2, q1) && f(p2, q2)) return true;
            return false;
          });
        }

    for (std::size_t p = 0; p < np && ok; ++p)
      for (std::size_t q = 0; q < nq && ok; ++q) {
        if (!f(p, q)) continue;
        for (std::uint64_t t = 0; t < subsets_q && ok; ++t) {
          if (!covers_q(q, t)) continue;
          ok = some_cover(p, [&](std::size_t p2) {
            for (std::size_t q2 = 0; q2 < nq; ++q2)
              if (detail::in_mask(t, q2) && f(p2, q2)) return true;
            return false;
          });
        }
      }

    if (ok) out.push_back(detail::from_mask(rel, np * nq));
  }
  return SubsetFamily(encodings::product_universe(src.basics(), dst.basics()), std::move(out));
}

/// States from which no cycle of the child graph is reachable.
inline BitVector brute_wellfounded(const cotrees::Coalgebra& c) {
  const auto n = c.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (auto [b, y] : c.children(x)) reach[x][y] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  BitVector out(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool cycle = false;
    for (std::size_t y = 0; y < n; ++y) cycle = cycle || ((x == y || reach[x][y]) && reach[y][y]);
    if (!cycle) out.set(x);
  }
  return out;
}

}  // namespace nid::oracles
