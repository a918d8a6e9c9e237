#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nid/game/formula.hpp"

namespace nid::game {

// Grammar (one sequent per line, '#' starts a comment):
//
//   theory   := { line }
//   line     := "letters:" ident* | sequent
//   sequent  := formula "->" formula
//   formula  := conj { "|" conj }
//   conj     := primary { "&" primary }
//   primary  := ident | "true" | "false" | "(" formula ")"
//   ident    := [A-Za-z0-9_'.]+
//
// Without a "letters:" line the letters are the atoms in order of first use.

namespace detail {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  Formula formula() {
    std::vector<Formula> parts{conjunction()};
    while (accept("|")) parts.push_back(conjunction());
    return parts.size() == 1 ? std::move(parts.front()) : Formula::disj(std::move(parts));
  }

  Sequent sequent() {
    auto hypothesis = formula();
    expect("->");
    auto conclusion = formula();
    return {std::move(hypothesis), std::move(conclusion)};
  }

  void finish() {
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, pos_ + 1); }

 private:
  Formula conjunction() {
    std::vector<Formula> parts{primary()};
    while (accept("&")) parts.push_back(primary());
    return parts.size() == 1 ? std::move(parts.front()) : Formula::conj(std::move(parts));
  }

  Formula primary() {
    skip_space();
    if (accept("(")) {
      auto f = formula();
      expect(")");
      return f;
    }
    auto word = identifier();
    if (word.empty()) fail(pos_ < text_.size() ? "expected a formula" : "unexpected end of input");
    if (word == "true") return Formula::top();
    if (word == "false") return Formula::bottom();
    return Formula::atom(std::move(word));
  }

  std::string identifier() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.is_atom()) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, out);
}

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  detail::FormulaParser p(text, 1);
  auto f = p.formula();
  p.finish();
  return f;
}

inline Sequent parse_sequent(std::string_view text, std::size_t line = 1) {
  detail::FormulaParser p(text, line);
  auto s = p.sequent();
  p.finish();
  return s;
}

/// Parses a theory. `letters`, when given, overrides any "letters:" line.
inline GameTheory parse_theory(std::string_view text, std::optional<Universe> letters = std::nullopt) {
  std::vector<Sequent> sequents;
  std::optional<std::vector<std::string>> declared;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    auto body = raw.substr(0, raw.find('#'));
    auto first = body.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::string_view view(body);
    view.remove_prefix(first);
    if (view.substr(0, 8) == "letters:") {
      if (declared) throw ParseError("duplicate letters declaration", line, first + 1);
      std::istringstream names{std::string(view.substr(8))};
      declared.emplace();
      for (std::string n; names >> n;) declared->push_back(n);
      continue;
    }
    detail::FormulaParser p(body, line);
    sequents.push_back(p.sequent());
    p.finish();
  }
  if (letters) return GameTheory(*letters, std::move(sequents));
  if (declared) return GameTheory(Universe(std::move(*declared)), std::move(sequents));
  std::vector<std::string> used;
  for (const auto& s : sequents) {
    detail::collect_atoms(s.hypothesis, used);
    detail::collect_atoms(s.conclusion, used);
  }
  return GameTheory(Universe(std::move(used)), std::move(sequents));
}

}  // namespace nid::game
