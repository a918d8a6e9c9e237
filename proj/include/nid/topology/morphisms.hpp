#pragma once

#include <string>
#include <vector>

#include "nid/encodings/bisimulation.hpp"
#include "nid/game/compile.hpp"
#include "nid/topology/formal_space.hpp"

namespace nid::topology {

/// How the second sequent schema (closure under covers) is instantiated.
///   source_saturation: ⋀_{p′∈S} F(p′,q) → F(p,q) for S ∈ BCov(p)
///   as_printed:        ⋀_{q′∈T} F(p,q′) → F(p,q) for T ∈ BCov′(q)
/// Only the first matches "{p : F(p,q)} is closed under covers".
enum class MorphismSchema { source_saturation, as_printed };

inline std::string relation_letter(const FormalSpace& src, const FormalSpace& dst, std::size_t p, std::size_t q) {
  return "F(" + src.basics().name(p) + "," + dst.basics().name(q) + ")";
}

/// Letters F(p,q) in row-major order (index p·|ℚ| + q) and the sequents:
///   F(p,q) → F(p′,q′)                                     p′ ≤ p, q ≤ q′
///   closure under covers                                  see MorphismSchema
///   ⊤ → ⋁_{S∈BCov(p)} ⋀_{p′∈S} ⋁_{q′∈ℚ} F(p′,q′)
///   F(p,q₀) ∧ F(p,q₁) → ⋁_{S∈BCov(p)} ⋀_{p′∈S} ⋁_{q′≤q₀,q₁} F(p′,q′)
///   F(p,q) → ⋁_{S∈BCov(p)} ⋀_{p′∈S} ⋁_{q′∈T} F(p′,q′)     T ∈ BCov′(q)
inline game::GameTheory morphism_theory(const FormalSpace& src, const FormalSpace& dst, const Limits& limits = {},
                                        MorphismSchema schema = MorphismSchema::source_saturation) {
  using game::Formula;
  const auto np = src.size(), nq = dst.size();
  limits.check(np * nq, "morphism_theory: P x Q");
  std::vector<std::string> names;
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < nq; ++q) names.push_back(relation_letter(src, dst, p, q));
  auto f = [&](std::size_t p, std::size_t q) { return Formula::atom(names[p * nq + q]); };

  // ⋁_{S∈BCov(p)} ⋀_{p′∈S} ⋁_{q′∈targets} F(p′,q′)
  auto some_cover = [&](std::size_t p, const BitVector& targets) {
    std::vector<Formula> options;
    for (const auto& s : src.bcov(p)) {
      std::vector<Formula> all;
      for (auto p2 : s.indices()) {
        std::vector<Formula> any;
        for (auto q2 : targets.indices()) any.push_back(f(p2, q2));
        all.push_back(Formula::disj(std::move(any)));
      }
      options.push_back(Formula::conj(std::move(all)));
    }
    return Formula::disj(std::move(options));
  };

  std::vector<game::Sequent> sequents;
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < nq; ++q)
      for (auto p2 : src.down(p).indices())
        for (auto q2 : dst.up(q).indices()) sequents.push_back({f(p, q), f(p2, q2)});

  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < nq; ++q) {
      if (schema == MorphismSchema::source_saturation) {
        for (const auto& s : src.bcov(p)) {
          std::vector<Formula> all;
          for (auto p2 : s.indices()) all.push_back(f(p2, q));
          sequents.push_back({Formula::conj(std::move(all)), f(p, q)});
        }
      } else {
        for (const auto& t : dst.bcov(q)) {
          std::vector<Formula> all;
          for (auto q2 : t.indices()) all.push_back(f(p, q2));
          sequents.push_back({Formula::conj(std::move(all)), f(p, q)});
        }
      }
    }

  const auto everything = BitVector::full(nq);
  for (std::size_t p = 0; p < np; ++p) sequents.push_back({Formula::top(), some_cover(p, everything)});

  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q0 = 0; q0 < nq; ++q0)
      for (std::size_t q1 = 0; q1 < nq; ++q1)
        sequents.push_back({Formula::conj({f(p, q0), f(p, q1)}), some_cover(p, dst.down(q0) & dst.down(q1))});

  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < nq; ++q)
      for (const auto& t : dst.bcov(q)) sequents.push_back({f(p, q), some_cover(p, t)});

  return game::GameTheory(Universe(std::move(names)), std::move(sequents));
}

/// Morphisms src → dst as relations over ℙ×ℚ (same row-major indexing).
inline SubsetFamily enumerate_morphisms(const FormalSpace& src, const FormalSpace& dst, const Limits& limits = {},
                                        MorphismSchema schema = MorphismSchema::source_saturation) {
  const auto theory = morphism_theory(src, dst, limits, schema);
  const Limits encoded{limits.max_encoded, limits.max_encoded};
  const auto compiled = game::compile_propositional(theory, encoded);
  const auto models = game::decoded_models(compiled);
  return SubsetFamily(encodings::product_universe(src.basics(), dst.basics()), models.bits());
}

}  // namespace nid::topology
