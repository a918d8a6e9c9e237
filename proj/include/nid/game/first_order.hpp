#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nid/game/compile.hpp"

namespace nid::game {

/// A relation symbol. `expansion` marks the new symbols 𝓡 (so Σ′ = Σ ∪ 𝓡);
/// the others belong to the base signature Σ and are fixed by the model.
struct Relation {
  std::string name;
  std::size_t arity = 0;
  bool expansion = false;
};

class FOSignature {
 public:
  FOSignature() = default;
  explicit FOSignature(std::vector<Relation> relations) : relations_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& r : relations_)
      if (!seen.insert(r.name).second) throw InvalidInput("duplicate relation symbol '" + r.name + "'");
  }

  const std::vector<Relation>& relations() const noexcept { return relations_; }

  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
      if (relations_[i].name == name) return i;
    throw InvalidInput("unknown relation symbol '" + name + "'");
  }

 private:
  std::vector<Relation> relations_;
};

using Tuple = std::vector<std::size_t>;

/// A finite Σ-structure: a carrier and a table for each base relation.
class FOModel {
 public:
  FOModel() = default;
  FOModel(const FOSignature& sig, Universe carrier, std::map<std::string, std::set<Tuple>> tables)
      : carrier_(std::move(carrier)), tables_(std::move(tables)) {
    for (const auto& [name, tuples] : tables_) {
      const auto& rel = sig.relations()[sig.index(name)];
      if (rel.expansion) throw InvalidInput("model interprets expansion symbol '" + name + "'");
      for (const auto& t : tuples) {
        if (t.size() != rel.arity) throw InvalidInput("tuple of wrong arity for '" + name + "'");
        for (auto v : t)
          if (v >= carrier_.size()) throw InvalidInput("tuple entry outside carrier for '" + name + "'");
      }
    }
  }

  const Universe& carrier() const noexcept { return carrier_; }

  bool holds(const std::string& relation, const Tuple& t) const {
    auto it = tables_.find(relation);
    return it != tables_.end() && it->second.count(t) > 0;
  }

 private:
  Universe carrier_;
  std::map<std::string, std::set<Tuple>> tables_;
};

/// A variable or a constant naming a carrier element.
struct Term {
  bool variable = true;
  std::string name;

  static Term var(std::string n) { return {true, std::move(n)}; }
  static Term constant(std::string n) { return {false, std::move(n)}; }
};

/// First-order game formula: relational atoms (no equality), finite ∧ and ∨,
/// ∀ and ∃.
class FOFormula {
 public:
  enum class Kind { atom, conj, disj, forall, exists };

  static FOFormula atom(std::string relation, std::vector<Term> terms) {
    FOFormula f(Kind::atom);
    f.relation_ = std::move(relation);
    f.terms_ = std::move(terms);
    return f;
  }
  static FOFormula conj(std::vector<FOFormula> children) { return FOFormula(Kind::conj, std::move(children)); }
  static FOFormula disj(std::vector<FOFormula> children) { return FOFormula(Kind::disj, std::move(children)); }
  static FOFormula top() { return conj({}); }
  static FOFormula forall(std::string var, FOFormula body) { return quantifier(Kind::forall, std::move(var), std::move(body)); }
  static FOFormula exists(std::string var, FOFormula body) { return quantifier(Kind::exists, std::move(var), std::move(body)); }

  Kind kind() const noexcept { return kind_; }
  const std::string& relation() const noexcept { return relation_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::string& variable() const noexcept { return variable_; }
  const std::vector<FOFormula>& children() const noexcept { return children_; }

 private:
  explicit FOFormula(Kind kind, std::vector<FOFormula> children = {}) : kind_(kind), children_(std::move(children)) {}

  static FOFormula quantifier(Kind kind, std::string var, FOFormula body) {
    FOFormula f(kind, {std::move(body)});
    f.variable_ = std::move(var);
    return f;
  }

  Kind kind_;
  std::string relation_;
  std::vector<Term> terms_;
  std::string variable_;
  std::vector<FOFormula> children_;
};

/// Universal closure ∀variables (hypothesis → conclusion).
struct FOSequent {
  std::vector<std::string> variables;
  FOFormula hypothesis;
  FOFormula conclusion;
};

struct FOTheory {
  std::vector<FOSequent> sequents;
};

/// The propositional theory T″ over the atomic sentences of Σ′ with carrier
/// constants: T with quantifiers expanded, plus ⊤ → A for each atomic
/// Σ-sentence A true in the model.
class GroundedTheory {
 public:
  const GameTheory& theory() const noexcept { return theory_; }
  const FOSignature& signature() const noexcept { return signature_; }
  const Universe& carrier() const noexcept { return carrier_; }

  std::size_t letter(std::size_t relation, const Tuple& t) const {
    std::size_t idx = 0;
    for (auto v : t) idx = idx * carrier_.size() + v;
    return offsets_[relation] + idx;
  }
  std::size_t letter(const std::string& relation, const Tuple& t) const {
    return letter(signature_.index(relation), t);
  }

  /// Letters of base-signature atoms, and those among them true in the model.
  const BitVector& base_letters() const noexcept { return base_letters_; }
  const BitVector& base_true() const noexcept { return base_true_; }

 private:
  friend GroundedTheory ground_theory(const FOSignature&, const FOModel&, const FOTheory&, const Limits&);

  GameTheory theory_;
  FOSignature signature_;
  Universe carrier_;
  std::vector<std::size_t> offsets_;
  BitVector base_letters_, base_true_;
};

namespace detail {

inline std::string atom_name(const std::string& relation, const Tuple& t, const Universe& carrier) {
  if (t.empty()) return relation;
  std::string out = relation + "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += carrier.name(t[k]);
  }
  return out + ")";
}

inline bool next_tuple(Tuple& t, std::size_t n) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < n) return true;
    t[k] = 0;
  }
  return false;
}

class Grounder {
 public:
  Grounder(const FOSignature& sig, const Universe& carrier) : sig_(sig), carrier_(carrier) {}

  Formula ground(const FOFormula& f) {
    switch (f.kind()) {
      case FOFormula::Kind::atom: {
        const auto& rel = sig_.relations()[sig_.index(f.relation())];
        if (f.terms().size() != rel.arity)
          throw InvalidInput("relation '" + rel.name + "' used with wrong number of arguments");
        Tuple t;
        for (const auto& term : f.terms()) t.push_back(term.variable ? lookup(term.name) : carrier_.index(term.name));
        return Formula::atom(atom_name(rel.name, t, carrier_));
      }
      case FOFormula::Kind::conj:
      case FOFormula::Kind::disj: {
        std::vector<Formula> children;
        for (const auto& c : f.children()) children.push_back(ground(c));
        return f.kind() == FOFormula::Kind::conj ? Formula::conj(std::move(children))
                                                 : Formula::disj(std::move(children));
      }
      case FOFormula::Kind::forall:
      case FOFormula::Kind::exists: {
        std::vector<Formula> children;
        for (std::size_t v = 0; v < carrier_.size(); ++v) {
          env_.emplace_back(f.variable(), v);
          children.push_back(ground(f.children().front()));
          env_.pop_back();
        }
        return f.kind() == FOFormula::Kind::forall ? Formula::conj(std::move(children))
                                                   : Formula::disj(std::move(children));
      }
    }
    return Formula::top();
  }

  std::vector<std::pair<std::string, std::size_t>>& env() { return env_; }

 private:
  std::size_t lookup(const std::string& var) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == var) return it->second;
    throw InvalidInput("free variable '" + var + "' is not bound by a quantifier or the universal closure");
  }

  const FOSignature& sig_;
  const Universe& carrier_;
  std::vector<std::pair<std::string, std::size_t>> env_;
};

}  // namespace detail

inline GroundedTheory ground_theory(const FOSignature& sig, const FOModel& m, const FOTheory& t,
                                    const Limits& limits = {}) {
  const auto n = m.carrier().size();
  limits.check(n, "ground_theory: carrier");

  GroundedTheory g;
  g.signature_ = sig;
  g.carrier_ = m.carrier();
  std::vector<std::string> names;
  std::vector<bool> base, truth;
  for (const auto& rel : sig.relations()) {
    g.offsets_.push_back(names.size());
    Tuple tuple(rel.arity, 0);
    if (n == 0 && rel.arity > 0) continue;
    do {
      names.push_back(detail::atom_name(rel.name, tuple, m.carrier()));
      base.push_back(!rel.expansion);
      truth.push_back(!rel.expansion && m.holds(rel.name, tuple));
      limits.check_encoded(names.size(), "ground_theory: atomic sentences");
    } while (detail::next_tuple(tuple, n));
  }
  g.base_letters_ = BitVector(names.size());
  g.base_true_ = BitVector(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (base[i]) g.base_letters_.set(i);
    if (truth[i]) g.base_true_.set(i);
  }

  std::vector<Sequent> sequents;
  detail::Grounder grounder(sig, m.carrier());
  for (const auto& s : t.sequents) {
    Tuple values(s.variables.size(), 0);
    if (n == 0 && !values.empty()) continue;
    do {
      auto& env = grounder.env();
      env.clear();
      for (std::size_t k = 0; k < values.size(); ++k) env.emplace_back(s.variables[k], values[k]);
      sequents.push_back({grounder.ground(s.hypothesis), grounder.ground(s.conclusion)});
    } while (detail::next_tuple(values, n));
  }
  for (auto i : g.base_true_.indices()) sequents.push_back({Formula::top(), Formula::atom(names[i])});

  g.theory_ = GameTheory(Universe(std::move(names)), std::move(sequents));
  return g;
}

/// A family of Σ′-expansions of a model, each given by the set of atomic
/// sentences it makes true (base atoms included, equal to the model's).
struct ExpansionSet {
  GroundedTheory grounded;
  SubsetFamily members;
};

/// All Σ′-expansions of m that model t: closed sets of the compiled grounded
/// theory whose base atoms agree with m exactly.
inline ExpansionSet expansions(const FOSignature& sig, const FOModel& m, const FOTheory& t, const Limits& limits = {}) {
  auto grounded = ground_theory(sig, m, t, limits);
  const Limits encoded{limits.max_encoded, limits.max_encoded};
  const auto compiled = compile_propositional(grounded.theory(), encoded);
  const auto size = compiled.system().universe().size();
  BitVector in(size), out(size);
  for (auto i : grounded.base_true().indices()) in.set(i);
  for (auto i : (grounded.base_letters() - grounded.base_true()).indices()) out.set(i);
  auto found = nid::detail::closed_sets(compiled.system(), in, out);
  auto members = compiled.decode(found);
  return {std::move(grounded), std::move(members)};
}

/// Expansions that are ⊆-minimal relation-wise among all expansions.
inline ExpansionSet minimal_expansions(const FOSignature& sig, const FOModel& m, const FOTheory& t,
                                       const Limits& limits = {}) {
  auto all = expansions(sig, m, t, limits);
  return {std::move(all.grounded), minimal_members(all.members)};
}

/// A generating family of the expansions: for each atomic sentence, the
/// minimal expansions making it true. Every expansion is the union of the
/// generators it contains.
inline ExpansionSet expansion_generators(const ExpansionSet& all) {
  const auto& bits = all.members.bits();
  return {all.grounded, SubsetFamily(all.members.universe(), nid::detail::pointwise_minimal(bits, all.members.universe().size()))};
}

}  // namespace nid::game
