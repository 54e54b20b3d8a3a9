#ifndef RENNER_TESTS_FIXTURES_HPP
#define RENNER_TESTS_FIXTURES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "renner/conj.hpp"
#include "renner/renner_monoid.hpp"

namespace fixtures {

// Built once per process; the monoids are immutable afterwards.
inline renner::RennerMonoid const& monoid(std::string const& type, std::vector<int> const& mu) {
  static std::map<std::pair<std::string, std::vector<int>>, renner::RennerMonoid> cache;
  auto key = std::pair{type, mu};
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto const cartan = renner::cartan_matrix(type);
    auto const spec = renner::DominantWeightSpec::from_weight(cartan, renner::WeightVector{mu});
    it = cache.emplace(key, renner::RennerMonoid::build(cartan, spec)).first;
  }
  return it->second;
}

struct Case {
  std::string type;
  std::vector<int> mu;
};

inline std::vector<Case> const& rank2_cases() {
  static std::vector<Case> const cases = {
      {"A2", {1, 1}}, {"B2", {1, 1}}, {"G2", {1, 1}},
      {"A2", {1, 0}}, {"B2", {1, 0}}, {"G2", {1, 0}},
  };
  return cases;
}

// A few larger monoids for the invariant suites.
inline std::vector<Case> const& extra_cases() {
  static std::vector<Case> const cases = {
      {"C2", {1, 0}}, {"B2", {0, 1}}, {"G2", {0, 1}}, {"A3", {1, 0, 0}},
      {"A3", {0, 1, 0}}, {"B3", {1, 0, 0}}, {"C3", {1, 0, 0}}, {"A3", {1, 0, 1}},
  };
  return cases;
}

inline std::string name(Case const& c) {
  std::string s = c.type + "(";
  for (std::size_t i = 0; i < c.mu.size(); ++i) s += (i ? "," : "") + std::to_string(c.mu[i]);
  return s + ")";
}

}  // namespace fixtures

#endif
