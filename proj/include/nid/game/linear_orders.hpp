#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "nid/game/first_order.hpp"

namespace nid::game {

/// A finite partial order, stored as its full ≤ matrix.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of `pairs` (p, q) meaning p ≤ q; throws
  /// PreconditionFailed if the closure is not antisymmetric.
  Poset(Universe elements, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
      : elements_(std::move(elements)) {
    const auto n = elements_.size();
    leq_.assign(n, BitVector(n));
    for (std::size_t i = 0; i < n; ++i) leq_[i].set(i);
    for (auto [p, q] : pairs) {
      if (p >= n || q >= n) throw InvalidInput("poset pair outside the carrier");
      leq_[p].set(q);
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i].test(k)) leq_[i] |= leq_[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq_[i].test(j) && leq_[j].test(i))
          throw PreconditionFailed("not a partial order: " + elements_.name(i) + " and " + elements_.name(j) +
                                   " are distinct but mutually below each other");
  }

  static Poset from_names(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& pairs) {
    Universe u(std::move(names));
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (const auto& [p, q] : pairs) idx.emplace_back(u.index(p), u.index(q));
    return Poset(u, idx);
  }

  const Universe& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool leq(std::size_t p, std::size_t q) const { return leq_[p].test(q); }

 private:
  Universe elements_;
  std::vector<BitVector> leq_;
};

inline constexpr const char* kLeq = "leq";
inline constexpr const char* kSim = "sim";
inline constexpr const char* kOrd = "ord";

struct LinearOrderProblem {
  FOSignature signature;
  FOModel model;
  FOTheory theory;
};

/// Σ = {leq}, 𝓡 = {sim, ord} with the eight sequents
///   p∼p,  p∼q → q∼p,  p∼q ∧ q∼r → p∼r,  p≤q → p⊴q,  p⊴p,
///   p⊴q ∧ q⊴p → p∼q,  p⊴q ∧ q⊴r → p⊴r,  p∼q ∧ p′∼q′ ∧ p⊴q → p′⊴q′.
inline LinearOrderProblem linear_order_theory(const Poset& poset) {
  FOSignature sig({{kLeq, 2, false}, {kSim, 2, true}, {kOrd, 2, true}});
  std::set<Tuple> table;
  for (std::size_t p = 0; p < poset.size(); ++p)
    for (std::size_t q = 0; q < poset.size(); ++q)
      if (poset.leq(p, q)) table.insert({p, q});
  FOModel model(sig, poset.elements(), {{kLeq, table}});

  auto atom = [](const char* rel, const char* x, const char* y) {
    return FOFormula::atom(rel, {Term::var(x), Term::var(y)});
  };
  auto all = [](std::vector<FOFormula> parts) { return FOFormula::conj(std::move(parts)); };
  FOTheory t;
  t.sequents = {
      {{"p"}, FOFormula::top(), atom(kSim, "p", "p")},
      {{"p", "q"}, atom(kSim, "p", "q"), atom(kSim, "q", "p")},
      {{"p", "q", "r"}, all({atom(kSim, "p", "q"), atom(kSim, "q", "r")}), atom(kSim, "p", "r")},
      {{"p", "q"}, atom(kLeq, "p", "q"), atom(kOrd, "p", "q")},
      {{"p"}, FOFormula::top(), atom(kOrd, "p", "p")},
      {{"p", "q"}, all({atom(kOrd, "p", "q"), atom(kOrd, "q", "p")}), atom(kSim, "p", "q")},
      {{"p", "q", "r"}, all({atom(kOrd, "p", "q"), atom(kOrd, "q", "r")}), atom(kOrd, "p", "r")},
      {{"p", "q", "p'", "q'"},
       all({atom(kSim, "p", "q"), atom(kSim, "p'", "q'"), atom(kOrd, "p", "q")}),
       atom(kOrd, "p'", "q'")},
  };
  return {std::move(sig), std::move(model), std::move(t)};
}

/// sim is equality on the carrier.
inline bool sim_is_equality(const GroundedTheory& g, const BitVector& e) {
  const auto n = g.carrier().size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (e.test(g.letter(kSim, {p, q})) != (p == q)) return false;
  return true;
}

inline bool ord_is_total(const GroundedTheory& g, const BitVector& e) {
  const auto n = g.carrier().size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (!e.test(g.letter(kOrd, {p, q})) && !e.test(g.letter(kOrd, {q, p}))) return false;
  return true;
}

/// Elements listed from least to greatest under the expansion's ⊴.
inline std::vector<std::size_t> read_linear_order(const GroundedTheory& g, const BitVector& e) {
  const auto n = g.carrier().size();
  std::vector<std::pair<std::size_t, std::size_t>> rank;
  for (std::size_t q = 0; q < n; ++q) {
    std::size_t below = 0;
    for (std::size_t p = 0; p < n; ++p)
      if (e.test(g.letter(kOrd, {p, q}))) ++below;
    rank.emplace_back(below, q);
  }
  std::sort(rank.begin(), rank.end());
  std::vector<std::size_t> order;
  for (auto [_, q] : rank) order.push_back(q);
  return order;
}

struct LinearOrderReport {
  /// Minimal members of {expansions with sim = equality and total ord}; one
  /// per linear extension, least element first, in canonical expansion order.
  std::vector<std::vector<std::size_t>> linear_extensions;
  std::size_t expansions = 0;
  std::size_t minimal_expansions = 0;
  /// Minimal expansions (over all expansions) whose sim is equality, and how
  /// many of those have a total ord.
  std::size_t minimal_with_equality = 0;
  std::size_t minimal_with_equality_total = 0;
};

inline LinearOrderReport linear_extensions(const Poset& poset, const Limits& limits = {}) {
  const auto problem = linear_order_theory(poset);
  const auto all = expansions(problem.signature, problem.model, problem.theory, limits);
  const auto& g = all.grounded;

  LinearOrderReport report;
  report.expansions = all.members.size();
  std::vector<BitVector> linear;
  for (const auto& e : all.members.bits())
    if (sim_is_equality(g, e) && ord_is_total(g, e)) linear.push_back(e);
  for (const auto& e : minimal_members(linear)) report.linear_extensions.push_back(read_linear_order(g, e));

  const auto minimal = minimal_members(all.members.bits());
  report.minimal_expansions = minimal.size();
  for (const auto& e : minimal) {
    if (!sim_is_equality(g, e)) continue;
    ++report.minimal_with_equality;
    if (ord_is_total(g, e)) ++report.minimal_with_equality_total;
  }
  return report;
}

}  // namespace nid::game
