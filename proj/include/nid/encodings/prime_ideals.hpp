#pragma once

#include <string>
#include <vector>

#include "nid/closure.hpp"

namespace nid::encodings {

/// A finite commutative ring with 1, given by its operation tables.
/// All ring axioms are checked exhaustively on construction.
class FiniteRing {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  FiniteRing(std::vector<std::string> carrier, Table add, Table mul, std::size_t zero, std::size_t one)
      : carrier_(std::move(carrier)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
    validate();
  }

  /// ℤ/n with elements named "0", ..., "n-1".
  static FiniteRing integers_mod(std::size_t n) {
    if (n == 0) throw InvalidInput("modulus must be positive");
    std::vector<std::string> names;
    Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        add[i][j] = (i + j) % n;
        mul[i][j] = (i * j) % n;
      }
    }
    return FiniteRing(std::move(names), std::move(add), std::move(mul), 0, 1 % n);
  }

  const Universe& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a][b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t zero() const noexcept { return zero_; }
  std::size_t one() const noexcept { return one_; }

 private:
  void validate() const {
    const auto n = carrier_.size();
    if (n == 0) throw InvalidInput("ring carrier is empty");
    if (zero_ >= n || one_ >= n) throw InvalidInput("ring zero/one not in carrier");
    auto check_table = [n](const Table& t, const char* name) {
      if (t.size() != n) throw InvalidInput(std::string(name) + " table has wrong number of rows");
      for (const auto& row : t) {
        if (row.size() != n) throw InvalidInput(std::string(name) + " table row has wrong length");
        for (auto v : row)
          if (v >= n) throw InvalidInput(std::string(name) + " table entry outside carrier");
      }
    };
    check_table(add_, "addition");
    check_table(mul_, "multiplication");

    auto fail = [](const std::string& what) { throw PreconditionFailed("not a commutative ring with 1: " + what); };
    for (std::size_t a = 0; a < n; ++a) {
      if (add_[a][zero_] != a) fail("zero is not an additive identity");
      if (mul_[a][one_] != a) fail("one is not a multiplicative identity");
      bool has_inverse = false;
      for (std::size_t b = 0; b < n; ++b) {
        if (add_[a][b] != add_[b][a]) fail("addition not commutative");
        if (mul_[a][b] != mul_[b][a]) fail("multiplication not commutative");
        has_inverse = has_inverse || add_[a][b] == zero_;
        for (std::size_t c = 0; c < n; ++c) {
          if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) fail("addition not associative");
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) fail("multiplication not associative");
          if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]]) fail("multiplication does not distribute");
        }
      }
      if (!has_inverse) fail("missing additive inverse");
    }
  }

  Universe carrier_;
  Table add_, mul_;
  std::size_t zero_, one_;
};

/// Rules whose inhabited closed sets are the prime ideals:
/// ({r,s},{r+s}), ({s},{rs}), ({rs},{r,s}) for all r, s, and ({1}, ∅).
inline RuleSystem prime_ideal_rules(const FiniteRing& ring) {
  const auto n = ring.size();
  std::vector<Rule> rules;
  rules.reserve(3 * n * n + 1);
  auto set_of = [n](std::initializer_list<std::size_t> xs) {
    BitVector v(n);
    for (auto x : xs) v.set(x);
    return v;
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      rules.push_back({set_of({r, s}), set_of({ring.add(r, s)})});
      rules.push_back({set_of({s}), set_of({ring.mul(r, s)})});
      rules.push_back({set_of({ring.mul(r, s)}), set_of({r, s})});
    }
  rules.push_back({set_of({ring.one()}), BitVector(n)});
  return RuleSystem(ring.carrier(), std::move(rules));
}

inline SubsetFamily inhabited_members(const SubsetFamily& family) {
  std::vector<BitVector> out;
  for (const auto& m : family.bits())
    if (m.any()) out.push_back(m);
  return SubsetFamily(family.universe(), std::move(out));
}

/// Prime ideals of the ring: the inhabited closed sets of prime_ideal_rules.
/// ∅ is always closed under these rules; it is not reported as an ideal.
inline SubsetFamily prime_ideals(const FiniteRing& ring, const Limits& limits = {}) {
  return inhabited_members(enumerate_closed(prime_ideal_rules(ring), limits));
}

}  // namespace nid::encodings
