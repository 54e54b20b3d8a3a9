#include "renner/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>

#include "renner/errors.hpp"

namespace renner {

std::vector<int> RootSubset::to_vector() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string RootSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : to_vector()) {
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

std::string CartanMatrix::name() const {
  return std::string(1, static_cast<char>(type)) + std::to_string(rank);
}

namespace {

void check_type(TypeLabel type, int rank) {
  bool ok = false;
  switch (type) {
    case TypeLabel::A: ok = rank >= 1; break;
    case TypeLabel::B:
    case TypeLabel::C: ok = rank >= 2; break;
    case TypeLabel::D: ok = rank >= 3; break;
    case TypeLabel::F: ok = rank == 4; break;
    case TypeLabel::G: ok = rank == 2; break;
  }
  if (!ok || rank > 31) {
    throw InvalidType("unsupported root system " + std::string(1, static_cast<char>(type)) +
                      std::to_string(rank));
  }
}

}  // namespace

CartanMatrix cartan_matrix(TypeLabel type, int rank) {
  check_type(type, rank);
  CartanMatrix m{type, rank, std::vector<int>(static_cast<std::size_t>(rank * rank), 0)};
  auto at = [&](int i, int j) -> int& { return m.entries[static_cast<std::size_t>(i * rank + j)]; };
  for (int i = 0; i < rank; ++i) at(i, i) = 2;

  if (type == TypeLabel::G) {
    at(0, 1) = -1;
    at(1, 0) = -3;
    return m;
  }
  // Chain alpha_1 - alpha_2 - ... ; D_n detaches alpha_n from alpha_{n-1}.
  int const chain_end = type == TypeLabel::D ? rank - 1 : rank;
  for (int i = 0; i + 1 < chain_end; ++i) {
    at(i, i + 1) = -1;
    at(i + 1, i) = -1;
  }
  switch (type) {
    case TypeLabel::B: at(rank - 1, rank - 2) = -2; break;
    case TypeLabel::C: at(rank - 2, rank - 1) = -2; break;
    case TypeLabel::D:
      at(rank - 3, rank - 1) = -1;
      at(rank - 1, rank - 3) = -1;
      break;
    case TypeLabel::F: at(2, 1) = -2; break;
    default: break;
  }
  return m;
}

CartanMatrix cartan_matrix(std::string_view label) {
  if (label.size() < 2) throw InvalidType("malformed root system label '" + std::string(label) + "'");
  char const letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (std::string_view("ABCDFG").find(letter) == std::string_view::npos) {
    throw InvalidType("unsupported root system type '" + std::string(1, letter) + "'");
  }
  int rank = 0;
  auto const digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidType("malformed root system label '" + std::string(label) + "'");
  }
  return cartan_matrix(static_cast<TypeLabel>(letter), rank);
}

std::uint64_t standard_weyl_order(TypeLabel type, int rank) {
  check_type(type, rank);
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  switch (type) {
    case TypeLabel::A: return factorial(rank + 1);
    case TypeLabel::B:
    case TypeLabel::C: return (std::uint64_t{1} << rank) * factorial(rank);
    case TypeLabel::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case TypeLabel::F: return 1152;
    case TypeLabel::G: return 12;
  }
  return 0;
}

std::size_t WeightVectorHash::operator()(WeightVector const& v) const noexcept {
  std::size_t h = v.coords.size();
  for (int c : v.coords) h = h * 1000003U ^ static_cast<std::size_t>(static_cast<unsigned>(c));
  return h;
}

WeightVector reflect(CartanMatrix const& cartan, int root, WeightVector const& v) {
  if (root < 0 || root >= cartan.rank) throw InvalidInput("reflection index out of range");
  if (v.rank() != static_cast<std::size_t>(cartan.rank)) {
    throw InvalidInput("weight vector length does not match the rank");
  }
  WeightVector out = v;
  int const c = v.coords[static_cast<std::size_t>(root)];
  if (c == 0) return out;
  for (int j = 0; j < cartan.rank; ++j) out.coords[static_cast<std::size_t>(j)] -= c * cartan(root, j);
  return out;
}

std::vector<WeightVector> weight_orbit(CartanMatrix const& cartan, WeightVector const& seed,
                                       std::size_t cap) {
  if (seed.rank() != static_cast<std::size_t>(cartan.rank)) {
    throw InvalidInput("weight vector length does not match the rank");
  }
  std::vector<WeightVector> orbit{seed};
  std::unordered_map<WeightVector, int, WeightVectorHash> seen{{seed, 0}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int i = 0; i < cartan.rank; ++i) {
      auto next = reflect(cartan, i, orbit[head]);
      if (seen.contains(next)) continue;
      if (orbit.size() >= cap) throw SizeCapExceeded("weight orbit", cap);
      seen.emplace(next, static_cast<int>(orbit.size()));
      orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

std::size_t WeylGroup::PermHash::operator()(std::vector<Vertex> const& p) const noexcept {
  std::size_t h = p.size();
  for (Vertex v : p) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

WeylGroup WeylGroup::generate(CartanMatrix cartan, WeightVector const& seed, std::size_t cap) {
  WeylGroup g;
  g.cartan_ = std::move(cartan);
  g.vertices_ = weight_orbit(g.cartan_, seed, cap);
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
    g.vertex_index_.emplace(g.vertices_[v], static_cast<int>(v));
  }

  auto const n = g.vertices_.size();
  auto const r = static_cast<std::size_t>(g.cartan_.rank);
  std::vector<std::vector<Vertex>> gen_perm(r, std::vector<Vertex>(n));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      gen_perm[i][v] = g.vertex_index_.at(reflect(g.cartan_, static_cast<int>(i), g.vertices_[v]));
    }
  }

  std::vector<Vertex> id(n);
  for (std::size_t v = 0; v < n; ++v) id[v] = static_cast<Vertex>(v);
  g.elements_.push_back(WeylElement{id, 0, {}});
  g.index_.emplace(id, 0);

  // Parents are visited in canonical-word order and generators in index
  // order, so the first word reaching an element is its lex-least reduced word.
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Vertex> perm(n);
      auto const& w = g.elements_[head].perm;
      for (std::size_t v = 0; v < n; ++v) perm[v] = w[static_cast<std::size_t>(gen_perm[i][v])];
      if (g.index_.contains(perm)) continue;
      if (g.elements_.size() >= cap) throw SizeCapExceeded("Weyl group order", cap);
      WeylElement e{perm, g.elements_[head].length + 1, g.elements_[head].word};
      e.word.push_back(static_cast<int>(i));
      g.index_.emplace(std::move(perm), static_cast<ElemId>(g.elements_.size()));
      g.elements_.push_back(std::move(e));
    }
  }

  auto const size = g.elements_.size();
  g.generators_.resize(r);
  for (std::size_t i = 0; i < r; ++i) g.generators_[i] = g.index_.at(gen_perm[i]);

  g.inverse_.resize(size);
  g.right_.resize(size * r);
  g.left_.resize(size * r);
  std::vector<Vertex> buf(n);
  for (std::size_t a = 0; a < size; ++a) {
    auto const& p = g.elements_[a].perm;
    for (std::size_t v = 0; v < n; ++v) buf[static_cast<std::size_t>(p[v])] = static_cast<Vertex>(v);
    g.inverse_[a] = g.index_.at(buf);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t v = 0; v < n; ++v) buf[v] = p[static_cast<std::size_t>(gen_perm[i][v])];
      g.right_[a * r + i] = g.index_.at(buf);
      for (std::size_t v = 0; v < n; ++v) buf[v] = gen_perm[i][static_cast<std::size_t>(p[v])];
      g.left_[a * r + i] = g.index_.at(buf);
    }
  }
  return g;
}

ElemId WeylGroup::multiply(ElemId a, ElemId b) const {
  auto const& pa = elements_[a].perm;
  auto const& pb = elements_[b].perm;
  std::vector<Vertex> prod(pb.size());
  for (std::size_t v = 0; v < pb.size(); ++v) prod[v] = pa[static_cast<std::size_t>(pb[v])];
  return index_.at(prod);
}

std::optional<ElemId> WeylGroup::find(std::vector<Vertex> const& perm) const {
  auto it = index_.find(perm);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PartialInjection WeylGroup::as_partial_injection(ElemId id) const {
  return PartialInjection(elements_[id].perm);
}

std::string WeylGroup::word_string(ElemId id) const {
  auto const& word = elements_[id].word;
  if (word.empty()) return "1";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

int WeylGroup::vertex_index(WeightVector const& v) const {
  auto it = vertex_index_.find(v);
  return it == vertex_index_.end() ? -1 : it->second;
}

Subgroup parabolic(WeylGroup const& group, RootSubset j) {
  for (int i : j.to_vector()) {
    if (i >= group.rank()) throw InvalidInput("parabolic: simple root index out of range");
  }
  Subgroup sub{j, {WeylGroup::identity()}, std::vector<char>(group.size(), 0)};
  sub.mask[WeylGroup::identity()] = 1;
  auto const gens = j.to_vector();
  for (std::size_t head = 0; head < sub.members.size(); ++head) {
    for (int i : gens) {
      ElemId const next = group.times_generator(sub.members[head], i);
      if (sub.mask[next]) continue;
      sub.mask[next] = 1;
      sub.members.push_back(next);
    }
  }
  std::sort(sub.members.begin(), sub.members.end());
  return sub;
}

std::vector<ElemId> min_coset_reps(WeylGroup const& group, RootSubset j) {
  auto const gens = j.to_vector();
  std::vector<ElemId> reps;
  for (ElemId w = 0; w < group.size(); ++w) {
    int const len = group.element(w).length;
    bool const minimal = std::all_of(gens.begin(), gens.end(), [&](int i) {
      return group.element(group.times_generator(w, i)).length == len + 1;
    });
    if (minimal) reps.push_back(w);
  }
  return reps;
}

std::vector<std::vector<ElemId>> group_conjugacy_classes(WeylGroup const& group,
                                                         Subgroup const& sub) {
  auto const gens = sub.generators.to_vector();
  std::vector<int> cls(group.size(), -1);
  std::vector<std::vector<ElemId>> classes;
  for (ElemId start : sub.members) {
    if (cls[start] >= 0) continue;
    int const id = static_cast<int>(classes.size());
    std::vector<ElemId> members{start};
    cls[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int i : gens) {
        ElemId const c = group.generator_times(i, group.times_generator(members[head], i));
        if (cls[c] >= 0) continue;
        cls[c] = id;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  // members are scanned ascending, so classes are already ordered by representative
  return classes;
}

}  // namespace renner
