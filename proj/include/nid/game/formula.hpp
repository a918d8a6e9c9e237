#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nid/subset.hpp"

namespace nid::game {

/// A game formula: an atom, or a finite conjunction or disjunction of game
/// formulas. The empty conjunction is ⊤ and the empty disjunction is ⊥.
class Formula {
 public:
  enum class Kind { atom, conj, disj };

  Formula() : kind_(Kind::conj) {}

  static Formula atom(std::string name) { return Formula(Kind::atom, std::move(name), {}); }
  static Formula conj(std::vector<Formula> children) { return Formula(Kind::conj, {}, std::move(children)); }
  static Formula disj(std::vector<Formula> children) { return Formula(Kind::disj, {}, std::move(children)); }
  static Formula top() { return conj({}); }
  static Formula bottom() { return disj({}); }

  Kind kind() const noexcept { return kind_; }
  bool is_atom() const noexcept { return kind_ == Kind::atom; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Formula>& children() const noexcept { return children_; }

  /// Fully bracketed prefix form; equal keys iff structurally equal.
  std::string key() const {
    if (kind_ == Kind::atom) return name_;
    std::string out = kind_ == Kind::conj ? "&(" : "|(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) out += ",";
      out += children_[i].key();
    }
    return out + ")";
  }

  /// Infix form accepted back by the parser. `&` binds tighter than `|`;
  /// single-child connectives print as their child.
  std::string to_string() const {
    const auto& f = unwrapped();
    switch (f.kind_) {
      case Kind::atom:
        return f.name_;
      case Kind::conj:
        if (f.children_.empty()) return "true";
        return f.join(" & ", [](const Formula& c) {
          const auto& u = c.unwrapped();
          return u.kind() == Kind::disj && u.children().size() > 1;
        });
      case Kind::disj:
        if (f.children_.empty()) return "false";
        return f.join(" | ", [](const Formula&) { return false; });
    }
    return {};
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_ && a.children_ == b.children_;
  }

 private:
  Formula(Kind kind, std::string name, std::vector<Formula> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  const Formula& unwrapped() const {
    const Formula* f = this;
    while (f->kind_ != Kind::atom && f->children_.size() == 1) f = &f->children_.front();
    return *f;
  }

  template <class NeedsParens>
  std::string join(const char* op, NeedsParens needs_parens) const {
    std::string out;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) out += op;
      const auto& c = children_[i];
      out += needs_parens(c) ? "(" + c.to_string() + ")" : c.to_string();
    }
    return out;
  }

  Kind kind_;
  std::string name_;
  std::vector<Formula> children_;
};

/// hypothesis → conclusion
struct Sequent {
  Formula hypothesis;
  Formula conclusion;

  std::string to_string() const { return hypothesis.to_string() + " -> " + conclusion.to_string(); }
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// A set of game sequents over a declared set of propositional letters.
class GameTheory {
 public:
  GameTheory() = default;
  GameTheory(Universe letters, std::vector<Sequent> sequents)
      : letters_(std::move(letters)), sequents_(std::move(sequents)) {
    for (const auto& s : sequents_) {
      check_atoms(s.hypothesis);
      check_atoms(s.conclusion);
    }
  }

  const Universe& letters() const noexcept { return letters_; }
  const std::vector<Sequent>& sequents() const noexcept { return sequents_; }

  std::string to_string() const {
    std::string out;
    for (const auto& s : sequents_) out += s.to_string() + "\n";
    return out;
  }

 private:
  void check_atoms(const Formula& f) const {
    if (f.is_atom()) {
      if (!letters_.find(f.name())) throw InvalidInput("undeclared atom '" + f.name() + "'");
      return;
    }
    for (const auto& c : f.children()) check_atoms(c);
  }

  Universe letters_;
  std::vector<Sequent> sequents_;
};

/// Satisfaction in the model m ⊆ letters.
inline bool eval_formula(const Formula& f, const Universe& letters, const BitVector& m) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      return m.test(letters.index(f.name()));
    case Formula::Kind::conj:
      for (const auto& c : f.children())
        if (!eval_formula(c, letters, m)) return false;
      return true;
    case Formula::Kind::disj:
      for (const auto& c : f.children())
        if (eval_formula(c, letters, m)) return true;
      return false;
  }
  return false;
}

inline bool eval_formula(const Formula& f, const Subset& m) { return eval_formula(f, m.universe(), m.bits()); }

inline bool satisfies(const GameTheory& t, const BitVector& m) {
  for (const auto& s : t.sequents())
    if (eval_formula(s.hypothesis, t.letters(), m) && !eval_formula(s.conclusion, t.letters(), m)) return false;
  return true;
}

}  // namespace nid::game
