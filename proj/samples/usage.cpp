#include <iostream>

#include "nid/core.hpp"
#include "nid/encodings.hpp"

int main() {
  using namespace nid;

  // 1 -> 2 over {1, 2}
  const auto r = RuleSystem::from_names({"1", "2"}, {{{"1"}, {"2"}}});
  for (const auto& c : enumerate_closed(r).members()) {
    std::cout << "{";
    const auto names = c.names();
    for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? "," : "") << names[i];
    std::cout << "}\n";
  }
  std::cout << "generators: " << least_generating_family(r).size() << "\n";

  const auto ideals = encodings::prime_ideals(encodings::FiniteRing::integers_mod(12));
  std::cout << "prime ideals of Z/12: " << ideals.size() << "\n";
  return ideals.size() == 2 ? 0 : 1;
}
