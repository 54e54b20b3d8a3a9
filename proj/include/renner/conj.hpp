#ifndef RENNER_CONJ_HPP
#define RENNER_CONJ_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "renner/crosslat.hpp"
#include "renner/renner_monoid.hpp"
#include "renner/rootsys.hpp"

namespace renner {

enum class ConjKind { sim, munn, semigroup, action };

std::string_view to_string(ConjKind kind);
std::optional<ConjKind> parse_conj_kind(std::string_view s);

// A partition of the monoid into classes of element indices.
struct ConjClassification {
  ConjKind kind = ConjKind::sim;
  std::vector<std::vector<std::size_t>> classes;      // each ascending
  std::vector<std::size_t> representatives;           // one member per class
  std::vector<std::optional<std::size_t>> strata;     // Lambda index (sim, munn only)

  std::size_t class_count() const noexcept { return classes.size(); }
  // class id per element index
  std::vector<std::size_t> labels(std::size_t monoid_size) const;
};

// Classes as sets, independent of class order and representative choice.
std::vector<std::vector<std::size_t>> canonical_partition(ConjClassification const& c);
bool same_partition(ConjClassification const& a, ConjClassification const& b);

struct OrbitReport {
  std::size_t e = 0;  // Lambda index
  std::size_t centralizer_order = 0;
  std::size_t stabilizer_order = 0;
  std::size_t coset_count = 0;  // |W / W_*(e)|
  std::size_t orbit_count = 0;  // n_e
  // lex-least minimal-length coset representative of each W(e)-orbit
  std::vector<ElemId> orbit_reps;
  std::vector<std::size_t> orbit_sizes;  // in cosets
};

// W(e)-orbits on W/W_*(e) for every e in Lambda (lattice order). Needs only
// the group and Lambda, not the monoid elements.
std::vector<OrbitReport> orbit_reports(WeylGroup const& group, CrossSectionLattice const& lattice);

// ~-classes from the orbit theorem: one class per W(e)-orbit, represented by
// u e with u the lex-least shortest coset representative in the orbit.
ConjClassification sim_conjugacy_classes(RennerMonoid const& r);
std::uint64_t count_sim_classes(RennerMonoid const& r);
std::uint64_t count_sim_classes(WeylGroup const& group, CrossSectionLattice const& lattice);

// Oracle: orbits of sigma -> w sigma w^-1 over W, computed element by element.
ConjClassification sim_classes_bruteforce(RennerMonoid const& r);

// Munn classes keyed by (subrank e, W^*(e)-conjugacy class of p(sigma°)).
ConjClassification munn_classes(RennerMonoid const& r);

inline constexpr std::size_t kDefaultPairCap = 4000;

// Oracle: transitive closure of { (xy, yx) }. O(|R|^2); throws SizeCapExceeded
// when |R| > pair_cap.
ConjClassification semigroup_conjugacy_classes(RennerMonoid const& r,
                                               std::size_t pair_cap = kDefaultPairCap);

// Oracle: transitive closure of x ~ s x s^-1 whenever s^-1 s >= e_x, where
// e_x = e_{I°(x)}. Same cap as above.
ConjClassification action_conjugacy_classes(RennerMonoid const& r,
                                            std::size_t pair_cap = kDefaultPairCap);

// Sum over Lambda of the number of conjugacy classes of W^*(e); 0 contributes 1.
std::uint64_t irreducible_rep_count(WeylGroup const& group, CrossSectionLattice const& lattice);
std::uint64_t irreducible_rep_count(RennerMonoid const& r);

// p(n) for 0 <= n <= m. Throws InvalidInput on 64-bit overflow.
std::vector<std::uint64_t> partition_counts(int m);
// Sum_{r=0}^{m} p(r).
std::uint64_t munn_count_rook(int m);

}  // namespace renner

#endif  // RENNER_CONJ_HPP
