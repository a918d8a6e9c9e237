#include <catch_amalgamated.hpp>

#include "nid/cotrees.hpp"
#include "nid/oracles.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace nid;
using namespace nid::cotrees;
using nid::testing::Rng;

namespace {

/// A = {leaf, node}, B = {l, r}, f(l) = f(r) = node
Signature binary() { return Signature(Universe({"leaf", "node"}), Universe({"l", "r"}), {1, 1}); }

constexpr std::size_t leaf = 0, node = 1, l = 0, r = 1;

/// x ↦ (node, l ↦ x, r ↦ x)
Coalgebra looping() { return Coalgebra(binary(), Universe({"x"}), {node}, {{{l, 0}, {r, 0}}}); }

/// x ↦ (node, l ↦ y, r ↦ y), y ↦ leaf
Coalgebra finite_tree() {
  return Coalgebra(binary(), Universe({"x", "y"}), {node, leaf}, {{{l, 1}, {r, 1}}, {}});
}

}  // namespace

TEST_CASE("validating path sets") {
  const auto sig = binary();
  CHECK(validate_mtype_element(sig, {{{leaf}}, 3}).valid);
  CHECK_FALSE(validate_mtype_element(sig, {{{node}}, 1}).valid);
  CHECK(validate_mtype_element(sig, {{{node}}, 0}).valid);
  CHECK_FALSE(validate_mtype_element(sig, {{}, 0}).valid);
  CHECK_FALSE(validate_mtype_element(sig, {{{leaf}, {node}}, 0}).valid);
  CHECK_FALSE(validate_mtype_element(sig, {{{node, l, leaf}}, 1}).valid);
  CHECK_THROWS_AS(validate_mtype_element(sig, {{{leaf, l, leaf}}, 1}), MalformedPath);
  CHECK_THROWS_AS(validate_mtype_element(sig, {{{node, l}}, 1}), MalformedPath);
}

TEST_CASE("unfolding") {
  const auto x = unfold(looping(), 0, 1);
  CHECK(x.paths == std::set<Path>{{node}, {node, l, node}, {node, r, node}});
  CHECK(unfold(finite_tree(), 1, 4).paths == std::set<Path>{{leaf}});
  CHECK(unfold(looping(), 0, 0).paths == std::set<Path>{{node}});
  CHECK_THROWS_AS(unfold(looping(), 1, 0), InvalidInput);
}

TEST_CASE("root and subtrees") {
  const auto c = looping();
  const auto split = root_and_subtrees(c.signature(), unfold(c, 0, 2));
  CHECK(split.root == node);
  REQUIRE(split.subtrees.size() == 2);
  CHECK(split.subtrees.at(l) == unfold(c, 0, 1));
  CHECK(split.subtrees.at(r) == unfold(c, 0, 1));

  const auto single = root_and_subtrees(binary(), {{{leaf}}, 0});
  CHECK(single.root == leaf);
  CHECK(single.subtrees.empty());

  const auto t = finite_tree();
  const auto two = root_and_subtrees(t.signature(), unfold(t, 0, 1));
  CHECK(two.subtrees.at(l).paths == std::set<Path>{{leaf}});
  CHECK(two.subtrees.at(r).paths == std::set<Path>{{leaf}});

  CHECK_THROWS_AS(root_and_subtrees(binary(), {{{node}}, 1}), PreconditionFailed);
  CHECK_THROWS_AS(root_and_subtrees(binary(), {{{node}}, 0}), PreconditionFailed);
}

TEST_CASE("well-founded states") {
  CHECK(wellfounded_states(looping()).empty());
  CHECK(wellfounded_states(finite_tree()).names() == std::vector<std::string>{"x", "y"});
  const Coalgebra just_leaf(binary(), Universe({"y"}), {leaf}, {{}});
  CHECK(wellfounded_states(just_leaf).names() == std::vector<std::string>{"y"});
  CHECK(wellfounded_rules(finite_tree()).deterministic());
}

TEST_CASE("M-type equality") {
  const Coalgebra twins(binary(), Universe({"x", "y", "z"}), {node, node, leaf},
                        {{{l, 1}, {r, 1}}, {{l, 0}, {r, 0}}, {}});
  CHECK(mtype_equal(twins, 0, 1));
  CHECK(mtype_equal(twins, 0, 0));
  CHECK_FALSE(mtype_equal(twins, 0, 2));
}

TEST_CASE("coalgebras are validated") {
  CHECK_THROWS_AS(Coalgebra(binary(), Universe({"x"}), {node}, {{{l, 0}}}), InvalidInput);
  CHECK_THROWS_AS(Coalgebra(binary(), Universe({"x"}), {node}, {{{l, 0}, {r, 3}}}), InvalidInput);
  CHECK_THROWS_AS(Coalgebra(binary(), Universe({"x"}), {5}, {{}}), InvalidInput);
  CHECK_THROWS_AS(Signature(Universe({"a"}), Universe({"b"}), {1}), InvalidInput);
}

TEST_CASE("unfolds are valid, prefix closed and coherent with subtrees") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const auto c = nid::testing::random_coalgebra(rng, 5, 3);
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t d = 0; d <= 4; ++d) {
        const auto m = unfold(c, x, d);
        CHECK(validate_mtype_element(c.signature(), m).valid);
        for (const auto& p : m.paths)
          for (std::size_t k = 1; k < p.size(); k += 2) CHECK(m.paths.count(Path(p.begin(), p.begin() + k)) == 1);
        if (d == 0) continue;
        const auto split = root_and_subtrees(c.signature(), m);
        CHECK(split.root == c.label(x));
        CHECK(split.subtrees.size() == c.children(x).size());
        for (auto [b, y] : c.children(x)) CHECK(split.subtrees.at(b) == unfold(c, y, d - 1));
      }
  }
}

TEST_CASE("well-founded states are those with no reachable cycle") {
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const auto c = nid::testing::random_coalgebra(rng, 5, 3);
    const auto wf = wellfounded_states(c);
    const auto acyclic = nid::testing::acyclic_states(c);
    for (std::size_t x = 0; x < c.size(); ++x) CHECK(wf.contains(x) == acyclic[x]);
    CHECK(wf.bits() == oracles::brute_wellfounded(c));
  }
}

TEST_CASE("M-type equality is behavioural equivalence") {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto c = nid::testing::random_coalgebra(rng, 5, 3);
    const auto blocks = nid::testing::behaviour_classes(c);
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t y = 0; y < c.size(); ++y) CHECK(mtype_equal(c, x, y) == (blocks[x] == blocks[y]));
  }
}
