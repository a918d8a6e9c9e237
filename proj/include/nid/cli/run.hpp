#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nid/cli/document.hpp"
#include "nid/oracles.hpp"

namespace nid::cli {

inline constexpr const char* kCapVariable = "NID_MAX_UNIVERSE";

struct Options {
  std::string input = "-";
  std::optional<std::size_t> max_universe;
  std::size_t depth = 2;
  bool pretty = false;
  std::string mode;
  bool perturb = false;
};

/// Exit status for a failed command.
struct Failure {
  int code;
  std::string message;
};

namespace detail {

inline Limits limits_for(const Options& o) {
  Limits l;
  if (const char* env = std::getenv(kCapVariable)) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw InvalidInput(std::string(kCapVariable) + " must be a non-negative integer");
    l.max_universe = static_cast<std::size_t>(v);
  }
  if (o.max_universe) l.max_universe = *o.max_universe;
  return l;
}

inline std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline void expect_kind(const std::string& kind, std::initializer_list<const char*> allowed, const char* command) {
  for (const auto* k : allowed)
    if (kind == k) return;
  std::string list;
  for (const auto* k : allowed) list += std::string(list.empty() ? "" : ", ") + k;
  throw InvalidInput(std::string(command) + " expects a document of kind " + list + ", got '" + kind + "'");
}

inline json pair_list(const encodings::Graph& g1, const encodings::Graph& g2, const Subset& k) {
  json out = json::array();
  const auto nb = g2.size();
  for (auto i : k.indices()) out.push_back(json::array({g1.nodes().name(i / nb), g2.nodes().name(i % nb)}));
  return out;
}

inline json path_json(const cotrees::Signature& sig, const cotrees::Path& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    out.push_back(i % 2 == 0 ? sig.a_labels().name(p[i]) : sig.b_labels().name(p[i]));
  return out;
}

inline json pathset_json(const cotrees::Signature& sig, const cotrees::PathSet& m) {
  json out = json::array();
  for (const auto& p : m.paths) out.push_back(path_json(sig, p));
  return out;
}

inline game::Variant game_variant(const std::string& mode) {
  if (mode.empty() || mode == "finitary") return game::Variant::finitary;
  if (mode == "elementary") return game::Variant::elementary;
  throw InvalidInput("game --mode must be 'finitary' or 'elementary'");
}

inline topology::MorphismSchema morphism_schema(const std::string& mode) {
  if (mode.empty() || mode == "source-saturation") return topology::MorphismSchema::source_saturation;
  if (mode == "as-printed") return topology::MorphismSchema::as_printed;
  throw InvalidInput("morphisms --mode must be 'source-saturation' or 'as-printed'");
}

/// Alters an engine result so that `verify --perturb` can be seen to fail.
inline void perturb(std::vector<BitVector>& family, std::size_t n) {
  if (!family.empty()) {
    family.erase(family.begin());
  } else {
    family.push_back(BitVector::full(n));
  }
}

class Report {
 public:
  void check(const std::string& name, bool pass, json detail = json::object()) {
    json entry{{"check", name}, {"pass", pass}};
    for (auto& [k, v] : detail.items()) entry[k] = v;
    checks_.push_back(std::move(entry));
    all_ &= pass;
  }
  void skip(const std::string& name, const std::string& reason) {
    checks_.push_back(json{{"check", name}, {"skipped", reason}});
  }
  bool pass() const noexcept { return all_; }
  json checks() const { return checks_; }

 private:
  json checks_ = json::array();
  bool all_ = true;
};

inline json count_detail(std::size_t engine, std::size_t oracle) { return json{{"engine", engine}, {"oracle", oracle}}; }

inline bool families_equal(std::vector<BitVector> a, std::vector<BitVector> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline void verify_rules(const json& doc, const Limits& limits, bool perturbed, Report& report) {
  const auto r = parse_rules(doc);
  const auto n = r.universe().size();
  if (n > oracles::kMaxClosed) {
    report.skip("enumerate_closed", "universe larger than the oracle cap");
    return;
  }
  auto closed = enumerate_closed(r, limits).bits();
  if (perturbed) perturb(closed, n);
  const auto brute = oracles::brute_closed(r).bits();
  report.check("enumerate_closed", families_equal(closed, brute), count_detail(closed.size(), brute.size()));

  const auto minimal = minimal_closed(r, limits).bits();
  report.check("minimal_closed", families_equal(minimal, minimal_members(brute)));

  const auto generators = least_generating_family(r, limits).bits();
  bool members_closed = true;
  for (const auto& g : generators) members_closed = members_closed && oracles::brute_closed(r).contains(g);
  report.check("least_generating_family", members_closed && generates(brute, generators));

  const auto full = full_family(r, limits).bits();
  bool full_ok = true;
  for (const auto& a : brute) {
    bool below = false;
    for (const auto& f : full) below = below || a.is_subset_of(f);
    full_ok = full_ok && below;
  }
  for (const auto& f : full) full_ok = full_ok && oracles::brute_closed(r).contains(f);
  report.check("full_family", full_ok);

  report.check("nid_to_sga", families_equal(encodings::models_of_sga(encodings::nid_to_sga(r), limits).bits(), brute));

  if (r.deterministic()) {
    const auto seed = parse_seed(doc, r);
    BitVector meet = BitVector::full(n);
    for (const auto& y : brute)
      if (seed.bits().is_subset_of(y)) meet &= y;
    report.check("lfp", lfp(r, seed).bits() == meet);
  }
}

inline void verify_document(const json& doc, const Limits& limits, bool perturbed, Report& report) {
  const auto kind = kind_of(doc);
  if (kind == "rules") {
    verify_rules(doc, limits, perturbed, report);
  } else if (kind == "ring") {
    const auto ring = parse_ring(doc);
    if (ring.size() > oracles::kMaxRing) {
      report.skip("prime_ideals", "carrier larger than the oracle cap");
      return;
    }
    auto engine = encodings::prime_ideals(ring, limits).bits();
    if (perturbed) perturb(engine, ring.size());
    const auto brute = oracles::brute_prime_ideals(ring).bits();
    report.check("prime_ideals", families_equal(engine, brute), count_detail(engine.size(), brute.size()));
  } else if (kind == "graph-pair") {
    const auto g1 = parse_graph(field(doc, "left")), g2 = parse_graph(field(doc, "right"));
    auto engine = encodings::largest_bisimulation(g1, g2, limits).bits();
    if (perturbed && engine.size() > 0) {
      if (engine.test(0)) engine.reset(0); else engine.set(0);
    }
    const auto brute = oracles::greatest_bisimulation(g1, g2).bits();
    report.check("largest_bisimulation", engine == brute, count_detail(engine.count(), brute.count()));
    const auto rules = encodings::bisimulation_rules(g1, g2, limits);
    if (rules.universe().size() <= oracles::kMaxClosed)
      report.check("bisimulation_closed_sets",
                   families_equal(enumerate_closed(rules, limits).bits(), oracles::brute_closed(rules).bits()));
  } else if (kind == "poset") {
    const auto poset = parse_poset(doc);
    if (poset.size() > oracles::kMaxLinear) {
      report.skip("linear_extensions", "poset larger than the oracle cap");
      return;
    }
    auto engine = game::linear_extensions(poset, limits).linear_extensions.size();
    if (perturbed) ++engine;
    const auto brute = oracles::brute_linear_extensions(poset).size();
    report.check("linear_extensions", engine == brute, count_detail(engine, brute));
  } else if (kind == "formal-space") {
    const auto fs = parse_space(doc);
    if (fs.size() > oracles::kMaxPoints) {
      report.skip("points", "space larger than the oracle cap");
      return;
    }
    auto engine = topology::enumerate_points(fs, limits).bits();
    if (perturbed) perturb(engine, fs.size());
    const auto cov = topology::saturate_cover(fs);
    const auto full = oracles::brute_points(fs, cov, oracles::PointCovers::full).bits();
    const auto basic = oracles::brute_points(fs, cov, oracles::PointCovers::basic).bits();
    report.check("points_vs_cov", families_equal(engine, full), count_detail(engine.size(), full.size()));
    report.check("points_vs_bcov", families_equal(engine, basic), count_detail(engine.size(), basic.size()));
    const auto flat = topology::flatness(fs, limits);
    report.check("flatness", flat.flat == (minimal_members(full).size() == full.size()));
  } else if (kind == "formal-space-pair") {
    const auto src = parse_space(field(doc, "source")), dst = parse_space(field(doc, "target"));
    const auto cs = topology::saturate_cover(src), cd = topology::saturate_cover(dst);
    const bool presented = topology::presents(src, cs) && topology::presents(dst, cd);
    report.check("bcov_presents_cov", presented);
    if (!presented) {
      report.skip("morphisms", "basic covers do not present their saturation");
      return;
    }
    if (src.size() * dst.size() > oracles::kMaxMorphismPairs) {
      report.skip("morphisms", "relation space larger than the oracle cap");
      return;
    }
    auto engine = topology::enumerate_morphisms(src, dst, limits).bits();
    if (perturbed) perturb(engine, src.size() * dst.size());
    const auto brute = oracles::brute_morphisms(src, dst, cs, cd).bits();
    report.check("morphisms", families_equal(engine, brute), count_detail(engine.size(), brute.size()));
  } else if (kind == "fullness") {
    const auto a = field(doc, "a").get<std::size_t>(), b = field(doc, "b").get<std::size_t>();
    const auto enc = encodings::fullness_rules(a, b, limits);
    auto members = encodings::derive_full_relations(enc, limits).bits();
    if (perturbed) perturb(members, a * b);
    auto total = [&](const BitVector& rel) {
      for (std::size_t i = 0; i < a; ++i) {
        bool some = false;
        for (std::size_t j = 0; j < b; ++j) some = some || rel.test(i * b + j);
        if (!some) return false;
      }
      return true;
    };
    bool members_total = true;
    for (const auto& m : members) members_total = members_total && total(m);
    bool every_total_contains = true;
    if (a * b <= oracles::kMaxClosed)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (a * b)); ++mask) {
        BitVector rel(a * b);
        for (std::size_t i = 0; i < a * b; ++i)
          if ((mask >> i) & 1u) rel.set(i);
        if (!total(rel)) continue;
        bool contains = false;
        for (const auto& m : members) contains = contains || m.is_subset_of(rel);
        every_total_contains = every_total_contains && contains;
      }
    report.check("members_total", members_total);
    report.check("every_total_relation_contains_a_member", every_total_contains);
  } else if (kind == "coalgebra") {
    const auto c = parse_coalgebra(doc);
    auto engine = cotrees::wellfounded_states(c).bits();
    if (perturbed && engine.size() > 0) {
      if (engine.test(0)) engine.reset(0); else engine.set(0);
    }
    const auto brute = oracles::brute_wellfounded(c);
    report.check("wellfounded_states", engine == brute, count_detail(engine.count(), brute.count()));
    bool valid = true;
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t d = 0; d <= c.size(); ++d)
        valid = valid && cotrees::validate_mtype_element(c.signature(), cotrees::unfold(c, x, d)).valid;
    report.check("unfold_valid", valid);
  } else if (kind == "theory" || kind == "theory-text") {
    const auto t = parse_theory_doc(doc);
    const auto compiled = game::compile_propositional(t, limits);
    auto engine = game::decoded_models(compiled).bits();
    if (perturbed) perturb(engine, t.letters().size());
    const auto brute = game::models(t, limits).bits();
    report.check("models", families_equal(engine, brute), count_detail(engine.size(), brute.size()));
  } else if (kind == "sga") {
    const auto z = parse_sga(doc);
    const auto enc = encodings::sga_to_nid(z, limits);
    auto engine = encodings::decoded_closed(enc).bits();
    if (perturbed) perturb(engine, z.base().size());
    const auto brute = encodings::models_of_sga(z, limits).bits();
    report.check("models_of_sga", families_equal(engine, brute), count_detail(engine.size(), brute.size()));
    report.check("generators_strongly_generate", strongly_generates(brute, encodings::decoded_generators(enc).bits()));
  } else {
    throw InvalidInput("unknown document kind '" + kind + "'");
  }
}

/// Runs one subcommand on a parsed document; returns the result fields and
/// the exit status.
inline int execute(const std::string& command, const json& doc, const Options& o, json& out) {
  const auto limits = limits_for(o);
  const auto kind = kind_of(doc);
  const char* cmd = command.c_str();

  if (command == "closed" || command == "minimal" || command == "generators" || command == "full" ||
      command == "lfp" || command == "classify") {
    expect_kind(kind, {"rules"}, cmd);
    const auto r = parse_rules(doc);
    if (command == "closed") {
      out["closed"] = family_json(enumerate_closed(r, limits));
    } else if (command == "minimal") {
      if (doc.contains("seed")) {
        out["seed"] = names_of(parse_seed(doc, r));
        out["minimal"] = family_json(minimal_closed_supersets(r, parse_seed(doc, r), limits));
      } else {
        out["minimal"] = family_json(minimal_closed(r, limits));
      }
    } else if (command == "generators") {
      const auto g = least_generating_family(r, limits);
      out["generators"] = family_json(g);
      out["strongly-generating"] = is_strongly_generating(r, g, limits);
    } else if (command == "full") {
      out["full"] = family_json(full_family(r, limits));
      out["maximal"] = family_json(maximal_closed(r, limits));
    } else if (command == "lfp") {
      const auto seed = parse_seed(doc, r);
      out["seed"] = names_of(seed);
      out["lfp"] = names_of(lfp(r, seed));
    } else {
      const auto c = classify(r);
      out["elementary"] = c.elementary;
      out["deterministic"] = c.deterministic;
      out["max-premise"] = c.max_premise;
      out["max-conclusion"] = c.max_conclusion;
      out["rules"] = r.rules().size();
    }
    return 0;
  }
  if (command == "prime-ideals") {
    expect_kind(kind, {"ring"}, cmd);
    const auto ring = parse_ring(doc);
    out["carrier"] = ring.carrier().names();
    out["prime-ideals"] = family_json(encodings::prime_ideals(ring, limits));
    return 0;
  }
  if (command == "bisim") {
    expect_kind(kind, {"graph-pair"}, cmd);
    const auto g1 = parse_graph(field(doc, "left")), g2 = parse_graph(field(doc, "right"));
    out["largest-bisimulation"] = pair_list(g1, g2, encodings::largest_bisimulation(g1, g2, limits));
    if (doc.contains("query")) {
      const auto& q = doc.at("query");
      if (!q.is_array() || q.size() != 2) throw InvalidInput("'query' must be a [left, right] pair");
      out["query"] = q;
      out["bisimilar"] = encodings::bisimilar(g1, g2, index_of(g1.nodes(), q[0], "query"),
                                              index_of(g2.nodes(), q[1], "query"), limits);
    }
    return 0;
  }
  if (command == "fullness") {
    expect_kind(kind, {"fullness"}, cmd);
    const auto enc = encodings::fullness_rules(field(doc, "a").get<std::size_t>(), field(doc, "b").get<std::size_t>(), limits);
    out["universe-size"] = enc.system.universe().size();
    out["full-relations"] = family_json(encodings::derive_full_relations(enc, limits));
    return 0;
  }
  if (command == "sga") {
    expect_kind(kind, {"sga", "rules"}, cmd);
    if (kind == "rules") {
      const auto z = encodings::nid_to_sga(parse_rules(doc));
      json clauses = json::array();
      for (const auto& c : z.clauses()) {
        json gamma = json::array();
        for (const auto& u : c.gamma) gamma.push_back(names_of(u));
        clauses.push_back(json{{"sigma", names_of(c.sigma)}, {"gamma", gamma}});
      }
      out["sga"] = json{{"kind", "sga"}, {"base", z.base().names()}, {"clauses", clauses}};
      out["models"] = family_json(encodings::models_of_sga(z, limits));
      return 0;
    }
    const auto z = parse_sga(doc);
    const auto enc = encodings::sga_to_nid(z, limits);
    out["encoded-size"] = enc.system.universe().size();
    out["models"] = family_json(encodings::decoded_closed(enc));
    out["generators"] = family_json(encodings::decoded_generators(enc));
    return 0;
  }
  if (command == "game") {
    expect_kind(kind, {"theory", "theory-text"}, cmd);
    const auto t = parse_theory_doc(doc);
    const auto compiled = game::compile_propositional(t, limits, game_variant(o.mode));
    out["letters"] = t.letters().names();
    out["subformulas"] = compiled.system().universe().size();
    const auto models = game::decoded_models(compiled);
    out["models"] = family_json(models);
    out["minimal-models"] = family_json(minimal_members(models));
    out["generators"] = family_json(game::decoded_generators(compiled));
    return 0;
  }
  if (command == "linext") {
    expect_kind(kind, {"poset"}, cmd);
    const auto poset = parse_poset(doc);
    const auto report = game::linear_extensions(poset, limits);
    json orders = json::array();
    for (const auto& order : report.linear_extensions) {
      json names = json::array();
      for (auto x : order) names.push_back(poset.elements().name(x));
      orders.push_back(names);
    }
    out["linear-extensions"] = orders;
    out["expansions"] = report.expansions;
    out["minimal-expansions"] = report.minimal_expansions;
    out["minimal-with-equality"] = report.minimal_with_equality;
    out["minimal-with-equality-total"] = report.minimal_with_equality_total;
    return 0;
  }
  if (command == "points" || command == "flat") {
    expect_kind(kind, {"formal-space"}, cmd);
    const auto fs = parse_space(doc);
    if (command == "points") {
      out["points"] = family_json(topology::enumerate_points(fs, limits));
      out["rules"] = topology::points_rules(fs, limits).rules().size();
    } else {
      const auto f = topology::flatness(fs, limits);
      out["flat"] = f.flat;
      out["all-maximal"] = f.all_maximal;
      out["points"] = f.points;
    }
    return 0;
  }
  if (command == "morphisms") {
    expect_kind(kind, {"formal-space-pair"}, cmd);
    const auto src = parse_space(field(doc, "source")), dst = parse_space(field(doc, "target"));
    const auto schema = morphism_schema(o.mode);
    const auto t = topology::morphism_theory(src, dst, limits, schema);
    out["sequents"] = t.sequents().size();
    json rels = json::array();
    for (const auto& m : topology::enumerate_morphisms(src, dst, limits, schema).bits()) {
      json pairs = json::array();
      for (auto i : m.indices())
        pairs.push_back(json::array({src.basics().name(i / dst.size()), dst.basics().name(i % dst.size())}));
      rels.push_back(pairs);
    }
    out["morphisms"] = rels;
    return 0;
  }
  if (command == "mtype") {
    expect_kind(kind, {"coalgebra"}, cmd);
    const auto c = parse_coalgebra(doc);
    out["wellfounded"] = names_of(cotrees::wellfounded_states(c));
    json unfolded = json::object();
    for (std::size_t x = 0; x < c.size(); ++x)
      unfolded[c.states().name(x)] = pathset_json(c.signature(), cotrees::unfold(c, x, o.depth));
    out["depth"] = o.depth;
    out["unfold"] = unfolded;
    json classes = json::array();
    std::vector<bool> seen(c.size(), false);
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (seen[x]) continue;
      json cls = json::array();
      for (std::size_t y = x; y < c.size(); ++y)
        if (!seen[y] && cotrees::mtype_equal(c, x, y)) {
          seen[y] = true;
          cls.push_back(c.states().name(y));
        }
      classes.push_back(cls);
    }
    out["equal-classes"] = classes;
    return 0;
  }
  if (command == "verify") {
    Report report;
    verify_document(doc, limits, o.perturb, report);
    out["perturbed"] = o.perturb;
    out["checks"] = report.checks();
    out["pass"] = report.pass();
    return report.pass() ? 0 : 1;
  }
  throw InvalidInput("unknown subcommand '" + command + "'");
}

struct CommandInfo {
  const char* name;
  const char* help;
};

inline const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> list = {
      {"closed", "all closed sets of a rules document"},
      {"minimal", "inclusion-minimal closed sets (above \"seed\" when given)"},
      {"generators", "least generating family"},
      {"full", "full family via the star construction, with the maximal closed sets"},
      {"lfp", "least closed superset of \"seed\" (deterministic rules only)"},
      {"classify", "elementary / deterministic flags"},
      {"prime-ideals", "prime ideals of a ring document"},
      {"bisim", "largest bisimulation of a graph-pair document"},
      {"fullness", "full relations A -> B from a fullness document"},
      {"sga", "clause system to rules (sga document) or rules to clause system"},
      {"game", "models of a game theory (JSON or plain text); --mode finitary|elementary"},
      {"linext", "linear extensions of a poset via minimal expansions"},
      {"points", "points of a formal space"},
      {"flat", "flatness of a formal space"},
      {"morphisms", "morphisms of a formal-space-pair; --mode source-saturation|as-printed"},
      {"mtype", "well-founded states, unfoldings to --depth and M-type equality of a coalgebra"},
      {"verify", "compare engine results with brute-force oracles; --perturb alters the engine side"},
  };
  return list;
}

}  // namespace detail

/// Entry point; returns the process exit status (0 success, 1 domain error
/// or failed verification, 2 usage or input error).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed sets, generating families and encodings of finite non-deterministic inductive definitions.\n"
               "Input is a JSON document (or plain-text game theory) from a file or standard input.\n"
               "Environment: " + std::string(kCapVariable) + " overrides the default universe cap (24)."};
  app.name("nid");
  app.require_subcommand(1);
  Options o;
  std::string chosen;
  for (const auto& c : detail::commands()) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", o.input, "input file, or - for standard input")->capture_default_str();
    sub->add_option("--max-universe", o.max_universe, "universe cap for exhaustive operations");
    sub->add_option("--depth", o.depth, "unfolding depth (mtype)")->capture_default_str();
    sub->add_flag("--pretty", o.pretty, "indent the JSON output");
    sub->add_option("--mode", o.mode, "variant selector (game, morphisms)");
    if (std::string(c.name) == "verify") sub->add_flag("--perturb", o.perturb, "perturb engine results before comparing");
    sub->callback([&chosen, name = std::string(c.name)] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto doc = read_document(detail::read_input(o.input));
    json result;
    result["command"] = chosen;
    result["kind"] = kind_of(doc);
    result["input-digest"] = fnv1a_hex(doc.dump());
    const int code = detail::execute(chosen, doc, o, result);
    out << (o.pretty ? result.dump(2) : result.dump()) << "\n";
    return code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nid::cli
