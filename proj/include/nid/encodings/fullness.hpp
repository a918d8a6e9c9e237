#pragma once

#include <string>
#include <vector>

#include "nid/closure.hpp"

namespace nid::encodings {

/// The elementary system on 1 + A + A×B whose closed sets containing *
/// are * plus A plus a total relation (and possibly more pairs).
struct FullnessEncoding {
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  RuleSystem system;
  Universe pairs;  // A×B on its own, names "(ai,bj)"

  std::size_t star() const noexcept { return 0; }
  std::size_t a(std::size_t i) const noexcept { return 1 + i; }
  std::size_t pair(std::size_t i, std::size_t j) const noexcept { return 1 + a_size + i * b_size + j; }
};

inline std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

inline FullnessEncoding fullness_rules(std::size_t a_size, std::size_t b_size, const Limits& limits = {}) {
  const std::size_t n = 1 + a_size + a_size * b_size;
  limits.check(n, "fullness_rules");

  std::vector<std::string> names{"*"}, pair_names;
  for (std::size_t i = 0; i < a_size; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < a_size; ++i)
    for (std::size_t j = 0; j < b_size; ++j)
      pair_names.push_back(pair_name("a" + std::to_string(i), "b" + std::to_string(j)));
  names.insert(names.end(), pair_names.begin(), pair_names.end());

  FullnessEncoding enc{a_size, b_size, {}, Universe(std::move(pair_names))};
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < a_size; ++i) {
    Rule pick{BitVector(n), BitVector(n)};
    pick.premise.set(enc.star());
    pick.conclusion.set(enc.a(i));
    rules.push_back(std::move(pick));

    Rule total{BitVector(n), BitVector(n)};
    total.premise.set(enc.a(i));
    for (std::size_t j = 0; j < b_size; ++j) total.conclusion.set(enc.pair(i, j));
    rules.push_back(std::move(total));
  }
  enc.system = RuleSystem(Universe(std::move(names)), std::move(rules));
  return enc;
}

/// {I ∩ A×B : I in a generating family, * ∈ I}: total relations such that
/// every total relation A → B contains one of them.
inline SubsetFamily derive_full_relations(const FullnessEncoding& enc, const Limits& limits = {}) {
  const auto generators = least_generating_family(enc.system, limits);
  const auto offset = 1 + enc.a_size;
  std::vector<BitVector> relations;
  for (const auto& g : generators.bits()) {
    if (!g.test(enc.star())) continue;
    BitVector rel(enc.pairs.size());
    for (auto i : g.indices())
      if (i >= offset) rel.set(i - offset);
    relations.push_back(std::move(rel));
  }
  return SubsetFamily(enc.pairs, std::move(relations));
}

}  // namespace nid::encodings
