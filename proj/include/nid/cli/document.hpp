#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nid/cotrees.hpp"
#include "nid/encodings.hpp"
#include "nid/game.hpp"
#include "nid/topology.hpp"

namespace nid::cli {

using json = nlohmann::ordered_json;

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------- rendering

inline json names_of(const Universe& u, const BitVector& bits) {
  json out = json::array();
  for (auto i : bits.indices()) out.push_back(u.name(i));
  return out;
}

inline json names_of(const Subset& s) { return names_of(s.universe(), s.bits()); }

inline json family_json(const SubsetFamily& f) {
  json out = json::array();
  for (const auto& m : f.bits()) out.push_back(names_of(f.universe(), m));
  return out;
}

inline json family_json(const Universe& u, const std::vector<BitVector>& f) {
  json out = json::array();
  for (const auto& m : f) out.push_back(names_of(u, m));
  return out;
}

// ----------------------------------------------------------------- parsing

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return obj.at(key);
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw InvalidInput(std::string(what) + " must contain only strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

inline BitVector bits_of(const Universe& u, const json& names, const char* what) {
  BitVector out(u.size());
  for (const auto& n : string_list(names, what)) {
    auto i = u.find(n);
    if (!i) throw InvalidInput(std::string(what) + " names undeclared element '" + n + "'");
    out.set(*i);
  }
  return out;
}

inline std::size_t index_of(const Universe& u, const json& name, const char* what) {
  if (!name.is_string()) throw InvalidInput(std::string(what) + " must be a name");
  auto i = u.find(name.get<std::string>());
  if (!i) throw InvalidInput(std::string(what) + " names undeclared element '" + name.get<std::string>() + "'");
  return *i;
}

inline std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const Universe& u, const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput(std::string(what) + " entries must be [x, y] pairs");
    out.emplace_back(index_of(u, p[0], what), index_of(u, p[1], what));
  }
  return out;
}

inline std::string kind_of(const json& doc) {
  const auto& k = field(doc, "kind");
  if (!k.is_string()) throw InvalidInput("'kind' must be a string");
  return k.get<std::string>();
}

/// {"universe": [...], "rules": [{"all_of": [...], "one_of": [...]}], "seed": [...]}
inline RuleSystem parse_rules(const json& doc) {
  Universe u(string_list(field(doc, "universe"), "universe"));
  std::vector<Rule> rules;
  const auto& rs = field(doc, "rules");
  if (!rs.is_array()) throw InvalidInput("'rules' must be an array");
  for (const auto& r : rs)
    rules.push_back({bits_of(u, field(r, "all_of"), "all_of"), bits_of(u, field(r, "one_of"), "one_of")});
  return RuleSystem(u, std::move(rules));
}

inline Subset parse_seed(const json& doc, const RuleSystem& r) {
  if (!doc.contains("seed")) return Subset(r.universe());
  return Subset(r.universe(), bits_of(r.universe(), doc.at("seed"), "seed"));
}

/// {"modulus": n} or {"carrier": [...], "add": [[...]], "mul": [[...]], "zero": x, "one": x}
/// with table entries given as element names.
inline encodings::FiniteRing parse_ring(const json& doc) {
  if (doc.contains("modulus")) {
    const auto& m = doc.at("modulus");
    if (!m.is_number_integer() || m.get<long long>() <= 0) throw InvalidInput("'modulus' must be a positive integer");
    return encodings::FiniteRing::integers_mod(m.get<std::size_t>());
  }
  Universe u(string_list(field(doc, "carrier"), "carrier"));
  auto table = [&](const char* key) {
    const auto& t = field(doc, key);
    if (!t.is_array() || t.size() != u.size()) throw InvalidInput(std::string("'") + key + "' must have one row per element");
    encodings::FiniteRing::Table out;
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != u.size()) throw InvalidInput(std::string("'") + key + "' must be square");
      std::vector<std::size_t> r;
      for (const auto& x : row) r.push_back(index_of(u, x, key));
      out.push_back(std::move(r));
    }
    return out;
  };
  return encodings::FiniteRing(u.names(), table("add"), table("mul"), index_of(u, field(doc, "zero"), "zero"),
                               index_of(u, field(doc, "one"), "one"));
}

inline encodings::Graph parse_graph(const json& g) {
  Universe u(string_list(field(g, "nodes"), "nodes"));
  return encodings::Graph(u, pairs_of(u, field(g, "edges"), "edges"));
}

inline game::Poset parse_poset(const json& doc) {
  Universe u(string_list(field(doc, "elements"), "elements"));
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  if (doc.contains("leq")) leq = pairs_of(u, doc.at("leq"), "leq");
  return game::Poset(u, leq);
}

/// {"basics": [...], "leq": [[p, q], ...], "bcov": {"p": [[...], ...]}}; the
/// order is closed reflexively and transitively.
inline topology::FormalSpace parse_space(const json& doc) {
  Universe u(string_list(field(doc, "basics"), "basics"));
  auto leq = doc.contains("leq") ? pairs_of(u, doc.at("leq"), "leq") : std::vector<std::pair<std::size_t, std::size_t>>{};
  std::vector<std::vector<BitVector>> bcov(u.size());
  if (doc.contains("bcov")) {
    const auto& b = doc.at("bcov");
    if (!b.is_object()) throw InvalidInput("'bcov' must map basics to lists of covers");
    for (const auto& [name, covers] : b.items()) {
      const auto p = index_of(u, json(name), "bcov");
      if (!covers.is_array()) throw InvalidInput("covers of '" + name + "' must be an array");
      for (const auto& s : covers) bcov[p].push_back(bits_of(u, s, "cover"));
    }
  }
  return topology::FormalSpace::closing(u, std::move(leq), std::move(bcov));
}

inline game::GameTheory parse_theory_doc(const json& doc) {
  const auto kind = kind_of(doc);
  if (kind == "theory-text") {
    const auto& t = field(doc, "text");
    if (!t.is_string()) throw InvalidInput("'text' must be a string");
    return game::parse_theory(t.get<std::string>());
  }
  std::string text;
  if (doc.contains("letters")) {
    text += "letters:";
    for (const auto& l : string_list(doc.at("letters"), "letters")) text += " " + l;
    text += "\n";
  }
  for (const auto& s : string_list(field(doc, "sequents"), "sequents")) text += s + "\n";
  return game::parse_theory(text);
}

/// {"base": [...], "clauses": [{"sigma": [...], "gamma": [[...], ...]}]}
inline encodings::SgaInstance parse_sga(const json& doc) {
  Universe u(string_list(field(doc, "base"), "base"));
  std::vector<encodings::SgaClause> clauses;
  const auto& cs = field(doc, "clauses");
  if (!cs.is_array()) throw InvalidInput("'clauses' must be an array");
  for (const auto& c : cs) {
    encodings::SgaClause clause{Subset(u, bits_of(u, field(c, "sigma"), "sigma")), {}};
    const auto& g = field(c, "gamma");
    if (!g.is_array()) throw InvalidInput("'gamma' must be an array of subsets");
    for (const auto& alt : g) clause.gamma.emplace_back(u, bits_of(u, alt, "gamma"));
    clauses.push_back(std::move(clause));
  }
  return encodings::SgaInstance(u, std::move(clauses));
}

/// {"signature": {"labels": [...], "branches": [...], "fiber": {"b": "a"}},
///  "states": [...], "step": {"x": {"label": "a", "children": {"b": "y"}}}}
inline cotrees::Coalgebra parse_coalgebra(const json& doc) {
  const auto& s = field(doc, "signature");
  Universe a(string_list(field(s, "labels"), "labels"));
  Universe b(string_list(field(s, "branches"), "branches"));
  std::vector<std::size_t> fiber(b.size(), 0);
  const auto& f = field(s, "fiber");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!f.contains(b.name(i))) throw InvalidInput("fiber of branch '" + b.name(i) + "' is missing");
    fiber[i] = index_of(a, f.at(b.name(i)), "fiber");
  }
  cotrees::Signature sig(a, b, std::move(fiber));
  Universe states(string_list(field(doc, "states"), "states"));
  std::vector<std::size_t> labels(states.size());
  std::vector<std::map<std::size_t, std::size_t>> children(states.size());
  const auto& step = field(doc, "step");
  for (std::size_t x = 0; x < states.size(); ++x) {
    if (!step.contains(states.name(x))) throw InvalidInput("step of state '" + states.name(x) + "' is missing");
    const auto& st = step.at(states.name(x));
    labels[x] = index_of(a, field(st, "label"), "label");
    if (st.contains("children"))
      for (const auto& [bn, y] : st.at("children").items())
        children[x][index_of(b, json(bn), "children")] = index_of(states, y, "children");
  }
  return cotrees::Coalgebra(std::move(sig), std::move(states), std::move(labels), std::move(children));
}

/// A document read from text: JSON when it parses as an object, otherwise
/// theory text.
inline json read_document(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
  }
  return json{{"kind", "theory-text"}, {"text", text}};
}

}  // namespace nid::cli
