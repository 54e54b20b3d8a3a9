#ifndef RENNER_CROSSLAT_HPP
#define RENNER_CROSSLAT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "renner/partialinj.hpp"
#include "renner/rootsys.hpp"

namespace renner {

// Dominant weight mu of the defining representation together with
// J_0 = { i | <mu, alpha_i> = 0 }. Only J_0 influences the lattice and the
// monoid; mu itself fixes the concrete vertex set W.mu.
struct DominantWeightSpec {
  WeightVector mu;
  RootSubset j0;

  // Validates: nonnegative, nonzero, length == rank.
  static DominantWeightSpec from_weight(CartanMatrix const& cartan, WeightVector mu);
  // The 0/1 weight whose zero pattern is exactly j0. j0 must be a proper subset.
  static DominantWeightSpec from_j0(CartanMatrix const& cartan, RootSubset j0);
};

struct CrossIdempotent {
  RootSubset lambda_star;
  RootSubset lambda_sub;  // lambda_*(e)
  bool is_zero = false;
  VertexSet face;  // K_e = W_{lambda*(e)} . mu; empty for 0

  RootSubset lambda() const noexcept { return lambda_star | lambda_sub; }
};

// Lambda, listed as: 0 first, then non-zero idempotents by (|lambda*|, lambda*
// as an ascending index list). The top element 1 (lambda* = Delta) is last.
class CrossSectionLattice {
 public:
  std::vector<CrossIdempotent> const& idempotents() const noexcept { return idempotents_; }
  std::size_t size() const noexcept { return idempotents_.size(); }
  CrossIdempotent const& operator[](std::size_t k) const { return idempotents_[k]; }

  static constexpr std::size_t zero_index() noexcept { return 0; }
  std::size_t one_index() const noexcept { return idempotents_.size() - 1; }
  // The unique minimal element of Lambda \ {0} (lambda* = {}).
  std::size_t minimal_nonzero_index() const noexcept { return 1; }

  bool leq(std::size_t e, std::size_t f) const;
  // "0", "1", or "e{...}" with the 1-based lambda* set, e.g. "e{}", "e{1,2}".
  std::string label(std::size_t k) const;

  DominantWeightSpec const& spec() const noexcept { return spec_; }

 private:
  friend CrossSectionLattice cross_section_lattice(WeylGroup const&, DominantWeightSpec const&);

  DominantWeightSpec spec_;
  std::vector<CrossIdempotent> idempotents_;
};

// Maximal connected pieces of the Dynkin subgraph induced on x, ordered by
// smallest member.
std::vector<RootSubset> connected_components(RootSubset x, CartanMatrix const& cartan);

// True when no connected component of x lies inside j0.
bool is_admissible(RootSubset x, RootSubset j0, CartanMatrix const& cartan);

// { a in J_0 \ lambda* | cartan(a, b) = 0 for all b in lambda* }.
RootSubset lambda_sub_star(RootSubset lambda_star, RootSubset j0, CartanMatrix const& cartan);

// Builds Lambda for the J-irreducible monoid with highest weight spec.mu.
// The group must have been generated from spec.mu. Each face is computed as
// the W_{lambda*} orbit of mu and checked against the W_{lambda} orbit; the
// lambda*-inclusion order is checked against containment of faces (that is,
// against e_K e_L = e_L e_K = e_K). Either mismatch throws ConsistencyError.
CrossSectionLattice cross_section_lattice(WeylGroup const& group, DominantWeightSpec const& spec);

// W(e), W_*(e), W^*(e). For e = 0: W, W, and the trivial group.
Subgroup centralizer(WeylGroup const& group, CrossIdempotent const& e);
Subgroup stabilizer(WeylGroup const& group, CrossIdempotent const& e);
Subgroup star_group(WeylGroup const& group, CrossIdempotent const& e);

}  // namespace renner

#endif  // RENNER_CROSSLAT_HPP
