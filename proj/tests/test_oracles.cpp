#include <catch_amalgamated.hpp>

#include "nid/oracles.hpp"
#include "support/generators.hpp"

using namespace nid;
using namespace nid::oracles;

namespace {

using Names = std::vector<std::vector<std::string>>;

Names named(const SubsetFamily& f) {
  Names out;
  for (const auto& m : f.members()) out.push_back(m.names());
  return out;
}

BitVector bits(std::size_t n, std::initializer_list<std::size_t> xs) {
  BitVector v(n);
  for (auto x : xs) v.set(x);
  return v;
}

}  // namespace

TEST_CASE("brute closed sets") {
  CHECK(brute_closed(RuleSystem::from_names({"1", "2"}, {{{"1"}, {"2"}}})).size() == 3);
  CHECK(brute_closed(RuleSystem::from_names({"a", "b", "c"}, {{{}, {"a", "b"}}})).size() == 6);
  CHECK(brute_closed(RuleSystem(Universe({"a", "b", "c"}), std::vector<Rule>{})).size() == 8);
  CHECK_THROWS_AS(brute_closed(RuleSystem(Universe(nid::testing::numbered("x", 17)), std::vector<Rule>{})),
                  CapExceeded);
}

TEST_CASE("brute prime ideals") {
  using encodings::FiniteRing;
  CHECK(named(brute_prime_ideals(FiniteRing::integers_mod(12))) ==
        Names{{"0", "3", "6", "9"}, {"0", "2", "4", "6", "8", "10"}});
  CHECK(named(brute_prime_ideals(FiniteRing::integers_mod(5))) == Names{{"0"}});
  CHECK(named(brute_prime_ideals(FiniteRing::integers_mod(4))) == Names{{"0", "2"}});
  CHECK_THROWS_AS(brute_prime_ideals(FiniteRing::integers_mod(17)), CapExceeded);
}

TEST_CASE("greatest bisimulation") {
  using encodings::Graph;
  const auto loop_x = Graph::from_names({"x"}, {{"x", "x"}});
  const auto loop_y = Graph::from_names({"y"}, {{"y", "y"}});
  CHECK(greatest_bisimulation(loop_x, loop_y).names() == std::vector<std::string>{"(x,y)"});
  CHECK(greatest_bisimulation(loop_x, Graph::from_names({"y"}, {})).empty());
  const auto g = Graph::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const auto k = greatest_bisimulation(g, g);
  for (std::size_t v = 0; v < 3; ++v) CHECK(k.contains(v * 3 + v));
}

TEST_CASE("brute linear extensions") {
  CHECK(brute_linear_extensions(nid::testing::antichain(3)).size() == 6);
  CHECK(brute_linear_extensions(nid::testing::chain(3)).size() == 1);
  CHECK(brute_linear_extensions(nid::testing::v_shape()).size() == 2);
  CHECK_THROWS_AS(brute_linear_extensions(nid::testing::antichain(8)), CapExceeded);
}

TEST_CASE("brute points") {
  using topology::FormalSpace;
  const auto s = FormalSpace::closing(Universe({"t", "u"}), {{1, 0}}, {});
  CHECK(named(brute_points(s, topology::saturate_cover(s))) == Names{{"t"}, {"t", "u"}});
  const auto c = FormalSpace::closing(Universe({"t", "u"}), {{1, 0}}, {{bits(2, {1})}, {}});
  CHECK(named(brute_points(c, topology::saturate_cover(c))) == Names{{"t", "u"}});
  const FormalSpace empty(Universe(std::vector<std::string>{}), {}, {});
  CHECK(brute_points(empty, topology::saturate_cover(empty)).empty());
}

TEST_CASE("brute morphisms") {
  using topology::FormalSpace;
  const FormalSpace p(Universe({"p"}), {{0, 0}}, {{bits(1, {0})}});
  const FormalSpace q(Universe({"q"}), {{0, 0}}, {{bits(1, {0})}});
  const auto cp = topology::saturate_cover(p), cq = topology::saturate_cover(q);
  CHECK(named(brute_morphisms(p, q, cp, cq)) == Names{{"(p,q)"}});

  const FormalSpace bare(Universe({"p"}), {{0, 0}}, {});
  CHECK_FALSE(brute_morphisms(bare, q, topology::saturate_cover(bare), cq).contains(BitVector(1)));

  const FormalSpace empty(Universe(std::vector<std::string>{}), {}, {});
  CHECK(brute_morphisms(empty, q, topology::saturate_cover(empty), cq).size() == 1);
}

TEST_CASE("brute well-founded states") {
  const cotrees::Signature sig(Universe({"leaf", "node"}), Universe({"l"}), {1});
  const cotrees::Coalgebra c(sig, Universe({"x", "y", "z"}), {1, 0, 1}, {{{0, 1}}, {}, {{0, 2}}});
  CHECK(brute_wellfounded(c) == bits(3, {0, 1}));
}
