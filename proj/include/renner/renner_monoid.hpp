#ifndef RENNER_RENNER_MONOID_HPP
#define RENNER_RENNER_MONOID_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "renner/crosslat.hpp"
#include "renner/partialinj.hpp"
#include "renner/rootsys.hpp"

namespace renner {

struct MonoidCaps {
  std::size_t max_group_order = kDefaultGroupCap;
  std::size_t max_monoid_order = 1'000'000;
};

// sigma = e_J w e_I with w the canonical unit extending sigma.
struct NormalForm {
  VertexSet range_face;   // J
  ElemId unit = 0;        // w
  VertexSet domain_face;  // I
};

// The shortest unit w carrying the Lambda-face L onto K, and the map w e_L.
struct FaceTransporter {
  VertexSet target_face;  // K
  VertexSet base_face;    // L
  ElemId unit = 0;
  PartialInjection map;
};

// The Renner monoid of a J-irreducible monoid, realized inside the rook monoid
// on the vertex set V = W.mu as the closure of the simple reflections, the
// partial identities e_{K_e} (e in Lambda) and 0.
//
// Elements are numbered in BFS order from the identity (index 0) under right
// multiplication by the generators, so numbering is deterministic.
class RennerMonoid {
 public:
  static RennerMonoid build(CartanMatrix const& cartan, DominantWeightSpec const& spec,
                            MonoidCaps const& caps = {});

  WeylGroup const& group() const noexcept { return group_; }
  CrossSectionLattice const& lattice() const noexcept { return lattice_; }
  std::size_t degree() const noexcept { return group_.degree(); }

  std::size_t size() const noexcept { return elements_.size(); }
  PartialInjection const& element(std::size_t i) const { return elements_[i]; }
  std::vector<PartialInjection> const& elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(PartialInjection const& p) const;
  // Like index_of, but throws InvalidInput for maps outside the monoid.
  std::size_t require_index(PartialInjection const& p) const;
  bool contains(PartialInjection const& p) const { return index_.contains(p); }

  static constexpr std::size_t one_index() noexcept { return 0; }
  std::size_t zero_index() const noexcept { return zero_index_; }

  // s_1, ..., s_r, then e_{K_e} for e in Lambda \ {0}, then 0.
  std::vector<PartialInjection> const& generators() const noexcept { return generators_; }

  std::size_t unit_index(ElemId w) const { return unit_index_[w]; }
  std::optional<ElemId> unit_of(std::size_t i) const;

  // Monoid indices of W e W, ascending; stratum 0 is {0}.
  std::vector<std::size_t> const& stratum(std::size_t e) const { return strata_[e]; }
  std::size_t stratum_of(std::size_t i) const { return element_stratum_[i]; }

  // The e in Lambda whose face orbit contains the face (0 for the empty set).
  std::optional<std::size_t> face_class(VertexSet const& face) const;
  // The shortest (then lex-least) unit carrying K_e onto the face.
  ElemId transporter_unit(VertexSet const& face) const;

  Subgroup const& star_subgroup(std::size_t e) const { return star_groups_[e]; }
  // The u in W^*(e) with u|_{K_e} equal to the given bijection of K_e.
  std::optional<ElemId> star_element(std::size_t e, PartialInjection const& bijection) const;

 private:
  struct FaceRecord {
    std::size_t idempotent;
    ElemId transporter;
  };

  WeylGroup group_;
  CrossSectionLattice lattice_;
  std::vector<PartialInjection> generators_;
  std::vector<PartialInjection> elements_;
  std::unordered_map<PartialInjection, std::size_t> index_;
  std::size_t zero_index_ = 0;
  std::vector<std::size_t> unit_index_;
  std::vector<std::vector<std::size_t>> strata_;
  std::vector<std::size_t> element_stratum_;
  std::unordered_map<VertexSet, FaceRecord> faces_;
  std::vector<Subgroup> star_groups_;
  std::vector<std::unordered_map<PartialInjection, ElemId>> star_lookup_;
};

// Throws SizeCapExceeded, FaithfulnessError, InvalidInput.
RennerMonoid build_renner(CartanMatrix const& cartan, WeightVector const& mu,
                          MonoidCaps const& caps = {});

// Throws ZeroElement for 0.
NormalForm normal_form(RennerMonoid const& r, PartialInjection const& sigma);
PartialInjection reconstruct(RennerMonoid const& r, NormalForm const& nf);

// I°(sigma): vertices whose forward sigma-orbit never leaves the domain.
VertexSet stable_domain(PartialInjection const& sigma);
// sigma° = sigma restricted to I°(sigma).
PartialInjection invertible_part(PartialInjection const& sigma);
inline PartialInjection invertible_part(RennerMonoid const&, PartialInjection const& sigma) {
  return invertible_part(sigma);
}

// The e in Lambda with sigma° in W e W (index into the lattice).
std::size_t subrank(RennerMonoid const& r, PartialInjection const& sigma);

// Throws InvalidInput when L is not the face of an element of Lambda and
// NotInOrbit when K is not in the W-orbit of L.
FaceTransporter face_transporter(RennerMonoid const& r, VertexSet const& base,
                                 VertexSet const& target);

// p(sigma) = mu_J^- sigma mu_I, a bijection of K_e for sigma in W e W.
// Throws ZeroElement for 0.
PartialInjection project(RennerMonoid const& r, PartialInjection const& sigma);
// p(sigma) as an element of W^*(e).
ElemId project_to_star(RennerMonoid const& r, PartialInjection const& sigma);

}  // namespace renner

#endif  // RENNER_RENNER_MONOID_HPP
