#ifndef RENNER_SERIALIZE_HPP
#define RENNER_SERIALIZE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "renner/conj.hpp"
#include "renner/partialinj.hpp"
#include "renner/renner_monoid.hpp"

namespace renner {

using Json = nlohmann::ordered_json;

// [[source, target], ...] sorted by source.
Json to_json(PartialInjection const& p);
// Throws InvalidInput on malformed documents or non-injective maps.
PartialInjection partial_injection_from_json(Json const& doc, std::size_t degree);

// {type, weight, vertices, generators, elements, strata}; strata maps each
// Lambda label to the ascending element indices of W e W.
Json monoid_to_json(RennerMonoid const& r);

// {kind, class_count, classes: [{stratum, size, representative, label}]}.
Json classification_to_json(RennerMonoid const& r, ConjClassification const& c);

// Header "e,centralizer_order,stabilizer_order,coset_count,n_e", one row per e.
std::string orbit_summary_csv(CrossSectionLattice const& lattice,
                              std::vector<OrbitReport> const& reports);

// Human-readable name of an element: "0", "1", "s1s2", "s2 e{1}", or the
// normal form "e[J] w e[I]" (vertex indices) when the domain is not a Lambda face.
std::string element_label(RennerMonoid const& r, std::size_t index);

}  // namespace renner

#endif  // RENNER_SERIALIZE_HPP
