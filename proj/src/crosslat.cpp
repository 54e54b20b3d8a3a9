#include "renner/crosslat.hpp"

#include <algorithm>

#include "renner/errors.hpp"

namespace renner {

DominantWeightSpec DominantWeightSpec::from_weight(CartanMatrix const& cartan, WeightVector mu) {
  if (mu.rank() != static_cast<std::size_t>(cartan.rank)) {
    throw InvalidInput("weight has " + std::to_string(mu.rank()) + " coordinates, expected " +
                       std::to_string(cartan.rank));
  }
  RootSubset j0;
  bool nonzero = false;
  for (int i = 0; i < cartan.rank; ++i) {
    int const c = mu.coords[static_cast<std::size_t>(i)];
    if (c < 0) throw InvalidInput("weight is not dominant (negative coordinate)");
    if (c == 0) j0.insert(i);
    nonzero = nonzero || c != 0;
  }
  if (!nonzero) throw InvalidInput("weight must be nonzero");
  return DominantWeightSpec{std::move(mu), j0};
}

DominantWeightSpec DominantWeightSpec::from_j0(CartanMatrix const& cartan, RootSubset j0) {
  if (!j0.is_subset_of(RootSubset::all(cartan.rank))) {
    throw InvalidInput("J_0 contains a simple root index out of range");
  }
  if (j0 == RootSubset::all(cartan.rank)) throw InvalidInput("J_0 must be a proper subset");
  WeightVector mu{std::vector<int>(static_cast<std::size_t>(cartan.rank), 1)};
  for (int i : j0.to_vector()) mu.coords[static_cast<std::size_t>(i)] = 0;
  return DominantWeightSpec{std::move(mu), j0};
}

std::vector<RootSubset> connected_components(RootSubset x, CartanMatrix const& cartan) {
  std::vector<RootSubset> out;
  RootSubset seen;
  for (int start : x.to_vector()) {
    if (seen.contains(start)) continue;
    RootSubset comp{start};
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int const i = stack.back();
      stack.pop_back();
      for (int j : x.to_vector()) {
        if (j == i || seen.contains(j) || cartan(i, j) == 0) continue;
        seen.insert(j);
        comp.insert(j);
        stack.push_back(j);
      }
    }
    out.push_back(comp);
  }
  return out;
}

bool is_admissible(RootSubset x, RootSubset j0, CartanMatrix const& cartan) {
  auto const comps = connected_components(x, cartan);
  return std::none_of(comps.begin(), comps.end(), [&](RootSubset c) { return c.is_subset_of(j0); });
}

RootSubset lambda_sub_star(RootSubset lambda_star, RootSubset j0, CartanMatrix const& cartan) {
  RootSubset out;
  for (int a : j0.without(lambda_star).to_vector()) {
    auto const star = lambda_star.to_vector();
    if (std::all_of(star.begin(), star.end(), [&](int b) { return cartan(a, b) == 0; })) out.insert(a);
  }
  return out;
}

bool CrossSectionLattice::leq(std::size_t e, std::size_t f) const {
  auto const& a = idempotents_.at(e);
  auto const& b = idempotents_.at(f);
  if (a.is_zero) return true;
  if (b.is_zero) return false;
  return a.lambda_star.is_subset_of(b.lambda_star);
}

std::string CrossSectionLattice::label(std::size_t k) const {
  if (k == zero_index()) return "0";
  if (k == one_index()) return "1";
  return "e" + idempotents_.at(k).lambda_star.to_string();
}

namespace {

VertexSet orbit_of_base_vertex(WeylGroup const& group, Subgroup const& sub) {
  VertexSet face(group.degree());
  for (ElemId w : sub.members) face.insert(group.element(w).perm[0]);
  return face;
}

}  // namespace

CrossSectionLattice cross_section_lattice(WeylGroup const& group, DominantWeightSpec const& spec) {
  auto const& cartan = group.cartan();
  if (group.vertices().empty() || group.vertices().front() != spec.mu) {
    throw InvalidInput("the Weyl group must be generated from the lattice's highest weight");
  }
  int const rank = cartan.rank;

  std::vector<RootSubset> admissible;
  for (std::uint32_t bits = 0; bits < (1U << rank); ++bits) {
    RootSubset const x(bits);
    if (is_admissible(x, spec.j0, cartan)) admissible.push_back(x);
  }
  std::sort(admissible.begin(), admissible.end(), [](RootSubset a, RootSubset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_vector() < b.to_vector();
  });

  CrossSectionLattice lat;
  lat.spec_ = spec;
  lat.idempotents_.push_back(CrossIdempotent{RootSubset{}, RootSubset{}, true, VertexSet(group.degree())});
  for (RootSubset x : admissible) {
    CrossIdempotent e{x, lambda_sub_star(x, spec.j0, cartan), false, {}};
    e.face = orbit_of_base_vertex(group, parabolic(group, x));
    if (e.face != orbit_of_base_vertex(group, parabolic(group, e.lambda()))) {
      throw ConsistencyError("W_lambda(e) moves mu outside the W_lambda*(e) orbit for e" +
                             x.to_string());
    }
    lat.idempotents_.push_back(std::move(e));
  }

  auto const& ids = lat.idempotents_;
  if (ids.size() < 2 || !ids[1].lambda_star.empty() ||
      ids.back().lambda_star != RootSubset::all(rank)) {
    throw ConsistencyError("cross-section lattice lacks its minimal non-zero or top element");
  }
  for (std::size_t a = 1; a < ids.size(); ++a) {
    for (std::size_t b = 1; b < ids.size(); ++b) {
      bool const by_type = ids[a].lambda_star.is_subset_of(ids[b].lambda_star);
      bool const by_product = ids[a].face.is_subset_of(ids[b].face);
      if (by_type != by_product) {
        throw ConsistencyError("lattice order by lambda* disagrees with the idempotent product for " +
                               lat.label(a) + ", " + lat.label(b));
      }
    }
  }
  return lat;
}

Subgroup centralizer(WeylGroup const& group, CrossIdempotent const& e) {
  if (e.is_zero) return parabolic(group, RootSubset::all(group.rank()));
  return parabolic(group, e.lambda());
}

Subgroup stabilizer(WeylGroup const& group, CrossIdempotent const& e) {
  if (e.is_zero) return parabolic(group, RootSubset::all(group.rank()));
  return parabolic(group, e.lambda_sub);
}

Subgroup star_group(WeylGroup const& group, CrossIdempotent const& e) {
  if (e.is_zero) return parabolic(group, RootSubset{});
  return parabolic(group, e.lambda_star);
}

}  // namespace renner
