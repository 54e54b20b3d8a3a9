#include "renner/serialize.hpp"

#include <sstream>

#include "renner/errors.hpp"

namespace renner {

Json to_json(PartialInjection const& p) {
  Json arr = Json::array();
  for (auto [s, t] : p.pairs()) arr.push_back(Json::array({s, t}));
  return arr;
}

PartialInjection partial_injection_from_json(Json const& doc, std::size_t degree) {
  if (!doc.is_array()) throw InvalidInput("partial injection must be a JSON array of pairs");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto const& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw InvalidInput("partial injection entries must be [source, target] integer pairs");
    }
    pairs.emplace_back(item[0].get<Vertex>(), item[1].get<Vertex>());
  }
  return PartialInjection::from_pairs(degree, pairs);
}

Json monoid_to_json(RennerMonoid const& r) {
  auto const& lattice = r.lattice();
  Json doc;
  doc["type"] = r.group().cartan().name();
  doc["weight"] = lattice.spec().mu.coords;
  Json vertices = Json::array();
  for (auto const& v : r.group().vertices()) vertices.push_back(v.coords);
  doc["vertices"] = std::move(vertices);
  Json gens = Json::array();
  for (auto const& g : r.generators()) gens.push_back(to_json(g));
  doc["generators"] = std::move(gens);
  Json elems = Json::array();
  for (auto const& s : r.elements()) elems.push_back(to_json(s));
  doc["elements"] = std::move(elems);
  Json strata = Json::object();
  for (std::size_t e = 0; e < lattice.size(); ++e) strata[lattice.label(e)] = r.stratum(e);
  doc["strata"] = std::move(strata);
  return doc;
}

std::string element_label(RennerMonoid const& r, std::size_t index) {
  auto const& sigma = r.element(index);
  if (sigma.is_zero()) return "0";
  auto const& lattice = r.lattice();
  auto const e = r.stratum_of(index);
  auto const nf = normal_form(r, sigma);
  std::string const word = r.group().word_string(nf.unit);
  if (e == lattice.one_index()) return word;
  if (nf.domain_face == lattice[e].face) {
    return nf.unit == WeylGroup::identity() ? lattice.label(e) : word + " " + lattice.label(e);
  }
  auto face = [](VertexSet const& s) {
    std::string out = "e[";
    bool first = true;
    for (Vertex v : s.to_vector()) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    return out + "]";
  };
  return face(nf.range_face) + " " + word + " " + face(nf.domain_face);
}

Json classification_to_json(RennerMonoid const& r, ConjClassification const& c) {
  Json doc;
  doc["kind"] = std::string(to_string(c.kind));
  doc["class_count"] = c.class_count();
  Json classes = Json::array();
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    Json entry;
    if (c.strata[k]) {
      entry["stratum"] = r.lattice().label(*c.strata[k]);
    } else {
      entry["stratum"] = nullptr;
    }
    entry["size"] = c.classes[k].size();
    entry["representative"] = to_json(r.element(c.representatives[k]));
    entry["label"] = element_label(r, c.representatives[k]);
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

namespace {

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string orbit_summary_csv(CrossSectionLattice const& lattice,
                              std::vector<OrbitReport> const& reports) {
  std::ostringstream os;
  os << "e,centralizer_order,stabilizer_order,coset_count,n_e\n";
  for (auto const& rep : reports) {
    os << csv_field(lattice.label(rep.e)) << ',' << rep.centralizer_order << ',' << rep.stabilizer_order << ','
       << rep.coset_count << ',' << rep.orbit_count << '\n';
  }
  return os.str();
}

}  // namespace renner
