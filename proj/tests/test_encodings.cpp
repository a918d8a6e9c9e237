#include <catch_amalgamated.hpp>

#include "nid/encodings.hpp"
#include "nid/oracles.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace nid;
using namespace nid::encodings;
using nid::testing::Rng;

namespace {

using Names = std::vector<std::vector<std::string>>;

Names named(const SubsetFamily& f) {
  Names out;
  for (const auto& m : f.members()) out.push_back(m.names());
  return out;
}

Graph loop() { return Graph::from_names({"x"}, {{"x", "x"}}); }
Graph point(const std::string& name) { return Graph::from_names({name}, {}); }

}  // namespace

TEST_CASE("prime ideals of small rings") {
  CHECK(named(prime_ideals(FiniteRing::integers_mod(12))) ==
        Names{{"0", "3", "6", "9"}, {"0", "2", "4", "6", "8", "10"}});
  CHECK(named(prime_ideals(FiniteRing::integers_mod(5))) == Names{{"0"}});
  CHECK(prime_ideals(FiniteRing::integers_mod(1)).empty());
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto closed = enumerate_closed(prime_ideal_rules(FiniteRing::integers_mod(n)));
    CHECK(closed.contains(BitVector(n)));
  }
}

TEST_CASE("prime ideals of a product ring given by tables") {
  // F2 × F2 with elements 00, 01, 10, 11
  FiniteRing::Table add(4, std::vector<std::size_t>(4)), mul(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      add[a][b] = a ^ b;
      mul[a][b] = a & b;
    }
  const FiniteRing ring({"00", "01", "10", "11"}, add, mul, 0, 3);
  CHECK(named(prime_ideals(ring)) == Names{{"00", "01"}, {"00", "10"}});
  CHECK(prime_ideals(ring) == oracles::brute_prime_ideals(ring));
}

TEST_CASE("ring validation") {
  FiniteRing::Table add{{0, 1}, {1, 0}}, mul{{0, 0}, {0, 1}};
  CHECK_NOTHROW(FiniteRing({"0", "1"}, add, mul, 0, 1));
  CHECK_THROWS_AS(FiniteRing({"0", "1"}, add, mul, 0, 0), PreconditionFailed);
  CHECK_THROWS_AS(FiniteRing({"0", "1"}, add, {{0, 0}}, 0, 1), InvalidInput);
  CHECK_THROWS_AS(FiniteRing({"0", "1"}, {{0, 1}, {1, 1}}, mul, 0, 1), PreconditionFailed);
  CHECK_THROWS_AS(FiniteRing::integers_mod(0), InvalidInput);
}

TEST_CASE("prime ideal counts match the number of prime divisors") {
  for (std::size_t n = 2; n <= 16; ++n) {
    const auto ring = FiniteRing::integers_mod(n);
    const auto ideals = prime_ideals(ring);
    CHECK(ideals.size() == nid::testing::distinct_prime_divisors(n));
    CHECK(ideals == oracles::brute_prime_ideals(ring));
    CHECK(ideals.bits() == SubsetFamily(ring.carrier(), nid::testing::prime_ideals_mod(n)).bits());
  }
}

TEST_CASE("fullness encoding shapes") {
  const auto e12 = fullness_rules(1, 2);
  CHECK(e12.system.universe().size() == 4);
  CHECK(e12.system.rules().size() == 2);
  CHECK(e12.system.elementary());

  const auto e0 = fullness_rules(0, 3);
  CHECK(e0.system.rules().empty());
  CHECK(named(derive_full_relations(e0)) == Names{{}});

  const auto e10 = fullness_rules(1, 0);
  for (const auto& c : enumerate_closed(e10.system).bits()) CHECK_FALSE(c.test(e10.star()));
  CHECK(derive_full_relations(e10).empty());

  CHECK(named(minimal_members(derive_full_relations(e12))) == Names{{"(a0,b0)"}, {"(a0,b1)"}});
}

TEST_CASE("full relations are total and below every total relation") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      const auto enc = fullness_rules(a, b);
      const auto full = derive_full_relations(enc).bits();
      const auto totals = nid::testing::total_relations(a, b);
      for (const auto& j : full) CHECK(std::find(totals.begin(), totals.end(), j) != totals.end());
      for (const auto& t : totals) {
        bool below = false;
        for (const auto& j : full) below = below || j.is_subset_of(t);
        CHECK(below);
      }
    }
}

TEST_CASE("bisimulation examples") {
  CHECK(named(enumerate_closed(bisimulation_rules(loop(), loop()))) == Names{{}, {"(x,x)"}});
  CHECK(named(enumerate_closed(bisimulation_rules(loop(), point("y")))) == Names{{}});
  CHECK(enumerate_closed(bisimulation_rules(point("x"), point("y"))).size() == 2);
  CHECK(bisimilar(loop(), loop(), 0, 0));
  CHECK_FALSE(bisimilar(loop(), point("y"), 0, 0));

  const auto two_cycle = Graph::from_names({"u", "v"}, {{"u", "v"}, {"v", "u"}});
  CHECK(bisimilar(loop(), two_cycle, 0, 1));
  CHECK(largest_bisimulation(loop(), two_cycle).size() == 2);
  CHECK_THROWS_AS(bisimilar(loop(), loop(), 1, 0), InvalidInput);
}

TEST_CASE("identical graphs relate every node to itself") {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto g = nid::testing::random_graph(rng, 5, 0.3, "n");
    for (std::size_t a = 0; a < g.size(); ++a) CHECK(bisimilar(g, g, a, a, Limits{25, 4096}));
  }
}

TEST_CASE("bisimulation closed sets satisfy both bullets; largest matches the oracle") {
  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const auto g1 = nid::testing::random_graph(rng, 4, 0.3, "a");
    const auto g2 = nid::testing::random_graph(rng, 4, 0.3, "b");
    const auto nb = g2.size();
    const auto closed = enumerate_closed(bisimulation_rules(g1, g2));
    std::size_t satisfying = 0;
    for (const auto& k : nid::testing::all_subsets(g1.size() * nb)) {
      bool ok = true;
      for (auto ab : k.indices()) {
        const auto a = ab / nb, b = ab % nb;
        for (auto a2 : g1.successors(a)) {
          bool matched = false;
          for (auto b2 : g2.successors(b)) matched = matched || k.test(a2 * nb + b2);
          ok = ok && matched;
        }
        for (auto b2 : g2.successors(b)) {
          bool matched = false;
          for (auto a2 : g1.successors(a)) matched = matched || k.test(a2 * nb + b2);
          ok = ok && matched;
        }
      }
      CHECK(ok == closed.contains(k));
      satisfying += ok;
    }
    CHECK(satisfying == closed.size());
    CHECK(largest_bisimulation(g1, g2) == oracles::greatest_bisimulation(g1, g2));
  }
}

TEST_CASE("sga models by direct evaluation") {
  const Universe s({"s", "u"});
  const SgaInstance z(s, {{Subset::of(s, {"s"}), {Subset::of(s, {"u"})}}});
  CHECK(named(models_of_sga(z)) == Names{{}, {"u"}, {"s", "u"}});
  CHECK(models_of_sga(SgaInstance(Universe({"p", "q", "r"}), {})).size() == 8);
  CHECK(models_of_sga(SgaInstance(s, {{Subset(s), {}}})).empty());
  CHECK(named(models_of_sga(SgaInstance(s, {{Subset(s), {Subset::of(s, {"s"})}}}))) == Names{{"s"}, {"s", "u"}});
}

TEST_CASE("sga encoding decodes to the model class") {
  const Universe s({"s", "u"});
  const SgaInstance z(s, {{Subset::of(s, {"s"}), {Subset::of(s, {"u"})}}});
  const auto enc = sga_to_nid(z);
  CHECK(enc.system.universe().size() == 4);
  CHECK(named(decoded_closed(enc)) == Names{{}, {"u"}, {"s", "u"}});
  CHECK(decoded_closed(sga_to_nid(SgaInstance(s, {}))).size() == 4);
  CHECK(decoded_closed(sga_to_nid(SgaInstance(s, {{Subset(s), {}}}))).empty());
}

TEST_CASE("rule systems as sga instances") {
  const auto r1 = RuleSystem::from_names({"1", "2"}, {{{"1"}, {"2"}}});
  const auto z1 = nid_to_sga(r1);
  REQUIRE(z1.clauses().size() == 1);
  CHECK(z1.clauses()[0].sigma.names() == std::vector<std::string>{"1"});
  REQUIRE(z1.clauses()[0].gamma.size() == 1);
  CHECK(z1.clauses()[0].gamma[0].names() == std::vector<std::string>{"2"});

  const auto r2 = RuleSystem::from_names({"a", "b", "c"}, {{{}, {"a", "b"}}});
  const auto z2 = nid_to_sga(r2);
  REQUIRE(z2.clauses().size() == 1);
  CHECK(z2.clauses()[0].sigma.empty());
  CHECK(z2.clauses()[0].gamma.size() == 2);

  const auto ring = prime_ideal_rules(FiniteRing::integers_mod(5));
  CHECK(models_of_sga(nid_to_sga(ring)) == enumerate_closed(ring));
}

TEST_CASE("sga round trip on random instances") {
  Rng rng(99);
  for (int i = 0; i < 60; ++i) {
    const auto z = nid::testing::random_sga(rng, 5, 4, 3);
    const auto enc = sga_to_nid(z);
    const auto models = models_of_sga(z);
    CHECK(decoded_closed(enc) == models);
    const auto gens = decoded_generators(enc);
    CHECK(strongly_generates(models.bits(), gens.bits()));
  }
  for (const auto& r : nid::testing::rule_corpus(7, 40))
    CHECK(models_of_sga(nid_to_sga(r)) == enumerate_closed(r));
}

TEST_CASE("sga encoding respects the caps") {
  const Universe big(nid::testing::numbered("s", 13));
  CHECK_THROWS_AS(sga_to_nid(SgaInstance(big, {})), CapExceeded);
}
