#include <catch_amalgamated.hpp>

#include "nid/oracles.hpp"
#include "nid/topology.hpp"
#include "support/generators.hpp"

using namespace nid;
using namespace nid::topology;
using nid::testing::Rng;

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

/// t, u with u ≤ t
FormalSpace sierpinski(std::vector<std::vector<BitVector>> bcov = {}) {
  return FormalSpace::closing(Universe({"t", "u"}), {{1, 0}}, std::move(bcov));
}

/// Every basic covered by itself.
FormalSpace self_covered(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> leq) {
  const auto n = names.size();
  std::vector<std::vector<BitVector>> bcov(n);
  for (std::size_t p = 0; p < n; ++p) bcov[p].push_back(bits(n, {p}));
  return FormalSpace::closing(Universe(std::move(names)), std::move(leq), std::move(bcov));
}

}  // namespace

TEST_CASE("formal spaces check their preorder") {
  CHECK_THROWS_AS(FormalSpace(Universe({"a", "b"}), {{0, 0}}, {}), PreconditionFailed);
  CHECK_THROWS_AS(FormalSpace(Universe({"a", "b", "c"}), {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}, {}),
                  PreconditionFailed);
  CHECK_NOTHROW(FormalSpace(Universe({"a", "b"}), {{0, 0}, {1, 1}, {0, 1}}, {}));
  const auto s = sierpinski();
  CHECK(s.leq(1, 0));
  CHECK_FALSE(s.leq(0, 1));
  CHECK(s.down(0) == bits(2, {0, 1}));
}

TEST_CASE("points of the Sierpinski space") {
  CHECK(named(enumerate_closed(points_rules(sierpinski()))) == Names{{}, {"t"}, {"t", "u"}});
  CHECK(named(enumerate_points(sierpinski())) == Names{{"t"}, {"t", "u"}});
  const auto covered = sierpinski({{bits(2, {1})}, {}});
  CHECK(named(enumerate_points(covered)) == Names{{"t", "u"}});
}

TEST_CASE("degenerate spaces") {
  const FormalSpace empty(Universe(std::vector<std::string>{}), {}, {});
  CHECK(enumerate_closed(points_rules(empty)).size() == 1);
  CHECK(enumerate_points(empty).empty());

  const FormalSpace blocked(Universe({"p"}), {{0, 0}}, {{BitVector(1)}});
  CHECK(enumerate_points(blocked).empty());
}

TEST_CASE("flatness") {
  CHECK_FALSE(is_flat(sierpinski()));
  CHECK(is_flat(FormalSpace(Universe({"p"}), {{0, 0}}, {})));
  const FormalSpace two(Universe({"a", "b"}), {{0, 0}, {1, 1}}, {});
  CHECK(named(enumerate_points(two)) == Names{{"a"}, {"b"}});
  CHECK(is_flat(two));
  const auto f = flatness(two);
  CHECK(f.all_maximal);
  CHECK(f.points == 2);
}

TEST_CASE("flatness agrees with pairwise comparison") {
  Rng rng(2);
  for (int i = 0; i < 60; ++i) {
    const auto fs = nid::testing::random_space(rng, 5, 2);
    const auto pts = enumerate_points(fs).bits();
    bool strict = false;
    for (const auto& a : pts)
      for (const auto& b : pts) strict = strict || (a.is_subset_of(b) && !(a == b));
    CHECK(is_flat(fs) == !strict);
    CHECK(flatness(fs).all_maximal == !strict);
  }
}

TEST_CASE("cover saturation") {
  const auto plain = sierpinski();
  const auto cov = saturate_cover(plain);
  for (std::uint64_t m = 0; m < 4; ++m) CHECK(cov.covered_by(cov.from_mask(m)) == plain.down(cov.from_mask(m)));

  const auto covered = sierpinski({{bits(2, {1})}, {}});
  const auto cov2 = saturate_cover(covered);
  CHECK(cov2.covers(0, bits(2, {1})));
  CHECK_FALSE(cov2.covers(0, BitVector(2)));
}

TEST_CASE("saturated covers are reflexive, monotone and contain the axioms") {
  Rng rng(6);
  for (int i = 0; i < 60; ++i) {
    const auto fs = nid::testing::random_space(rng, 5, 2);
    const auto n = fs.size();
    const auto cov = saturate_cover(fs);
    const auto subsets = nid::testing::all_subsets(n);
    for (const auto& u : subsets) {
      CHECK(u.is_subset_of(cov.covered_by(u)));
      for (const auto& v : subsets)
        if (u.is_subset_of(v)) CHECK(cov.covered_by(u).is_subset_of(cov.covered_by(v)));
    }
    CHECK(cov.covered_by(BitVector::full(n)) == BitVector::full(n));
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& s : fs.bcov(p)) CHECK(cov.covers(p, s));
  }
}

TEST_CASE("the presentation of a saturated cover presents it") {
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    const auto fs = nid::testing::random_space(rng, 4, 2);
    const auto cov = saturate_cover(fs);
    const auto pres = presentation_of(fs, cov);
    CHECK(presents(pres, cov));
    CHECK(saturate_cover(pres) == cov);
  }
}

TEST_CASE("points agree with both oracle readings of the cover condition") {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const auto fs = nid::testing::random_space(rng, 5, 2);
    const auto cov = saturate_cover(fs);
    const auto pts = enumerate_points(fs);
    CHECK(pts == oracles::brute_points(fs, cov, oracles::PointCovers::full));
    CHECK(pts == oracles::brute_points(fs, cov, oracles::PointCovers::basic));
  }
}

TEST_CASE("the least generating family of the point rules generates the points") {
  Rng rng(14);
  for (int i = 0; i < 40; ++i) {
    const auto fs = nid::testing::random_space(rng, 5, 2);
    const auto r = points_rules(fs);
    CHECK(is_generating(r, least_generating_family(r)));
  }
}

TEST_CASE("morphism theory on one-point spaces") {
  const auto one = self_covered({"p"}, {});
  const auto t = morphism_theory(one, one);
  CHECK(t.letters().names() == std::vector<std::string>{"F(p,p)"});
  CHECK(named(enumerate_morphisms(one, one)) == Names{{"(p,p)"}});

  const FormalSpace bare(Universe({"p"}), {{0, 0}}, {});
  CHECK(enumerate_morphisms(bare, one).empty());

  const FormalSpace nothing(Universe(std::vector<std::string>{}), {}, {});
  CHECK(named(enumerate_morphisms(one, nothing)) == Names{});
  CHECK(enumerate_morphisms(nothing, one).size() == 1);
}

TEST_CASE("destination covers instantiate per source basic") {
  const auto src = self_covered({"a", "b"}, {});
  const FormalSpace dst(Universe({"x", "y"}), {{0, 0}, {1, 1}}, {{bits(2, {1})}, {}});
  const auto t = morphism_theory(src, dst, {}, MorphismSchema::as_printed);
  std::size_t instances = 0;
  for (const auto& s : t.sequents())
    if (s.to_string() == "F(a,y) -> F(a,x)" || s.to_string() == "F(b,y) -> F(b,x)") ++instances;
  CHECK(instances == 2);
}

TEST_CASE("identity relations are morphisms") {
  const auto s = self_covered({"a", "b", "c"}, {{0, 1}});
  const auto ms = enumerate_morphisms(s, s);
  const auto n = s.size();
  BitVector id(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (s.leq(p, q)) id.set(p * n + q);
  CHECK(ms.contains(id));
}

TEST_CASE("morphisms agree with the direct definition on presented spaces") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const auto a = nid::testing::random_space(rng, 3, 2, "p");
    const auto b = nid::testing::random_space(rng, 3, 2, "q");
    const auto src = presentation_of(a, saturate_cover(a));
    const auto dst = presentation_of(b, saturate_cover(b));
    CHECK(enumerate_morphisms(src, dst) ==
          oracles::brute_morphisms(src, dst, saturate_cover(src), saturate_cover(dst)));
  }
}

TEST_CASE("morphism enumeration respects the caps") {
  const FormalSpace big(Universe(nid::testing::numbered("p", 5)), {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}, {});
  CHECK_THROWS_AS(morphism_theory(big, big, Limits{24, 4096}), CapExceeded);
}
