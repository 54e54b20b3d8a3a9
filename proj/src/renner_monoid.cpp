#include "renner/renner_monoid.hpp"

#include <algorithm>

#include "renner/errors.hpp"

namespace renner {

RennerMonoid RennerMonoid::build(CartanMatrix const& cartan, DominantWeightSpec const& spec,
                                 MonoidCaps const& caps) {
  RennerMonoid r;
  r.group_ = WeylGroup::generate(cartan, spec.mu, caps.max_group_order);
  auto const expected = standard_weyl_order(cartan.type, cartan.rank);
  if (r.group_.size() != expected) {
    throw FaithfulnessError("unit permutations generate a group of order " +
                            std::to_string(r.group_.size()) + ", expected " +
                            std::to_string(expected));
  }
  r.lattice_ = cross_section_lattice(r.group_, spec);

  auto const& group = r.group_;
  auto const& lattice = r.lattice_;
  auto const n = group.degree();

  // Face orbits. Group elements are visited by (length, word), so the first
  // unit reaching a face is its shortest transporter.
  for (std::size_t e = 1; e < lattice.size(); ++e) {
    auto const& base = lattice[e].face;
    for (ElemId w = 0; w < group.size(); ++w) {
      auto const face = group.as_partial_injection(w).apply(base);
      auto [it, inserted] = r.faces_.try_emplace(face, FaceRecord{e, w});
      if (inserted) continue;
      if (it->second.idempotent != e) {
        throw ConsistencyError("faces of " + lattice.label(it->second.idempotent) + " and " +
                               lattice.label(e) + " share a W-orbit");
      }
      if (group.element(w).length == group.element(it->second.transporter).length) {
        throw ConsistencyError("two shortest units carry the face of " + lattice.label(e) +
                               " onto the same face");
      }
    }
  }

  for (int i = 0; i < cartan.rank; ++i) {
    r.generators_.push_back(group.as_partial_injection(group.generator(i)));
  }
  for (std::size_t e = 1; e < lattice.size(); ++e) {
    r.generators_.push_back(PartialInjection::partial_identity(lattice[e].face));
  }
  r.generators_.push_back(PartialInjection::zero(n));

  r.elements_.push_back(PartialInjection::identity(n));
  r.index_.emplace(r.elements_.front(), 0);
  for (std::size_t head = 0; head < r.elements_.size(); ++head) {
    for (auto const& g : r.generators_) {
      auto prod = compose(r.elements_[head], g);
      if (r.index_.contains(prod)) continue;
      if (r.elements_.size() >= caps.max_monoid_order) {
        throw SizeCapExceeded("Renner monoid order", caps.max_monoid_order);
      }
      r.index_.emplace(prod, r.elements_.size());
      r.elements_.push_back(std::move(prod));
    }
  }
  r.zero_index_ = r.index_.at(PartialInjection::zero(n));

  r.unit_index_.resize(group.size());
  for (ElemId w = 0; w < group.size(); ++w) {
    r.unit_index_[w] = r.require_index(group.as_partial_injection(w));
  }

  r.strata_.assign(lattice.size(), {});
  r.element_stratum_.resize(r.elements_.size());
  for (std::size_t i = 0; i < r.elements_.size(); ++i) {
    auto const& s = r.elements_[i];
    auto const dom = r.face_class(s.domain());
    auto const ran = r.face_class(s.range());
    if (!dom || !ran || *dom != *ran) {
      throw ConsistencyError("element " + std::to_string(i) +
                             " has a domain or range outside the Lambda face orbits");
    }
    r.element_stratum_[i] = *dom;
    r.strata_[*dom].push_back(i);
  }

  r.star_groups_.reserve(lattice.size());
  r.star_lookup_.resize(lattice.size());
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    r.star_groups_.push_back(renner::star_group(group, lattice[e]));
    if (e == CrossSectionLattice::zero_index()) continue;
    for (ElemId u : r.star_groups_.back().members) {
      auto restricted = restrict(group.as_partial_injection(u), lattice[e].face);
      if (!r.star_lookup_[e].emplace(std::move(restricted), u).second) {
        throw ConsistencyError("W^*(" + lattice.label(e) + ") does not act faithfully on its face");
      }
    }
  }
  return r;
}

std::optional<std::size_t> RennerMonoid::index_of(PartialInjection const& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RennerMonoid::require_index(PartialInjection const& p) const {
  auto idx = index_of(p);
  if (!idx) throw InvalidInput("partial injection is not an element of the Renner monoid");
  return *idx;
}

std::optional<ElemId> RennerMonoid::unit_of(std::size_t i) const {
  if (!elements_[i].is_total()) return std::nullopt;
  return group_.find(elements_[i].images());
}

std::optional<std::size_t> RennerMonoid::face_class(VertexSet const& face) const {
  if (face.empty()) return CrossSectionLattice::zero_index();
  auto it = faces_.find(face);
  if (it == faces_.end()) return std::nullopt;
  return it->second.idempotent;
}

ElemId RennerMonoid::transporter_unit(VertexSet const& face) const {
  auto it = faces_.find(face);
  if (it == faces_.end()) throw NotInOrbit("vertex set is not a face of any Lambda orbit");
  return it->second.transporter;
}

std::optional<ElemId> RennerMonoid::star_element(std::size_t e,
                                                 PartialInjection const& bijection) const {
  if (e == CrossSectionLattice::zero_index()) {
    if (bijection.is_zero()) return WeylGroup::identity();
    return std::nullopt;
  }
  auto it = star_lookup_[e].find(bijection);
  if (it == star_lookup_[e].end()) return std::nullopt;
  return it->second;
}

RennerMonoid build_renner(CartanMatrix const& cartan, WeightVector const& mu,
                          MonoidCaps const& caps) {
  return RennerMonoid::build(cartan, DominantWeightSpec::from_weight(cartan, mu), caps);
}

NormalForm normal_form(RennerMonoid const& r, PartialInjection const& sigma) {
  if (sigma.is_zero()) throw ZeroElement("0 has no normal form");
  auto const& group = r.group();
  for (ElemId w = 0; w < group.size(); ++w) {
    if (natural_leq(sigma, group.as_partial_injection(w))) {
      return NormalForm{sigma.range(), w, sigma.domain()};
    }
  }
  throw InvalidInput("no unit extends the given map; it is not in the Renner monoid");
}

PartialInjection reconstruct(RennerMonoid const& r, NormalForm const& nf) {
  auto const w = r.group().as_partial_injection(nf.unit);
  return compose(PartialInjection::partial_identity(nf.range_face),
                 compose(w, PartialInjection::partial_identity(nf.domain_face)));
}

VertexSet stable_domain(PartialInjection const& sigma) {
  VertexSet current = sigma.domain();
  for (;;) {
    VertexSet next(sigma.degree());
    current.for_each([&](Vertex v) {
      if (current.contains(sigma(v))) next.insert(v);
    });
    if (next == current) return current;
    current = std::move(next);
  }
}

PartialInjection invertible_part(PartialInjection const& sigma) {
  return restrict(sigma, stable_domain(sigma));
}

std::size_t subrank(RennerMonoid const& r, PartialInjection const& sigma) {
  // Faces of distinct Lambda orbits never coincide (checked at build), so a
  // direct lookup agrees with scanning Lambda in any order.
  auto e = r.face_class(stable_domain(sigma));
  if (!e) throw InvalidInput("invertible part has a domain outside the Lambda face orbits");
  return *e;
}

FaceTransporter face_transporter(RennerMonoid const& r, VertexSet const& base,
                                 VertexSet const& target) {
  auto const e = r.face_class(base);
  if (!e || *e == CrossSectionLattice::zero_index() || r.lattice()[*e].face != base) {
    throw InvalidInput("base face is not the face of an element of the cross-section lattice");
  }
  auto const k = r.face_class(target);
  if (!k || *k != *e) throw NotInOrbit("target face is not in the W-orbit of the base face");
  ElemId const w = r.transporter_unit(target);
  return FaceTransporter{target, base, w,
                         compose(r.group().as_partial_injection(w),
                                 PartialInjection::partial_identity(base))};
}

PartialInjection project(RennerMonoid const& r, PartialInjection const& sigma) {
  if (sigma.is_zero()) throw ZeroElement("p(0) is undefined");
  auto const dom = sigma.domain();
  auto const e = r.face_class(dom);
  if (!e) throw InvalidInput("domain is not a face of any Lambda orbit");
  auto const& base = r.lattice()[*e].face;
  auto const mu_i = face_transporter(r, base, dom).map;
  auto const mu_j = face_transporter(r, base, sigma.range()).map;
  return compose(inverse(mu_j), compose(sigma, mu_i));
}

ElemId project_to_star(RennerMonoid const& r, PartialInjection const& sigma) {
  auto const p = project(r, sigma);
  auto const e = r.face_class(sigma.domain());
  auto u = r.star_element(*e, p);
  if (!u) throw ConsistencyError("projection is not induced by an element of W^*(e)");
  return *u;
}

}  // namespace renner
