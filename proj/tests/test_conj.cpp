#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "renner/errors.hpp"
#include "renner/serialize.hpp"
#include "renner/union_find.hpp"

using namespace renner;
using fixtures::monoid;

namespace {

using Partition = std::set<std::set<std::size_t>>;

Partition as_sets(ConjClassification const& c) {
  Partition p;
  for (auto const& cls : c.classes) p.insert(std::set<std::size_t>(cls.begin(), cls.end()));
  return p;
}

Partition from_union_find(UnionFind& uf, std::size_t n) {
  std::map<std::size_t, std::set<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].insert(i);
  Partition p;
  for (auto& [root, members] : groups) p.insert(std::move(members));
  return p;
}

// Munn classes from the definition: x and y are related when some unit w
// conjugates x° onto y°, for any unit group acting on the points as a set of
// permutations.
Partition munn_by_definition(std::vector<PartialInjection> const& elements,
                             std::vector<PartialInjection> const& units) {
  std::map<PartialInjection, std::vector<std::size_t>> by_part;
  for (std::size_t i = 0; i < elements.size(); ++i) by_part[invertible_part(elements[i])].push_back(i);
  UnionFind uf(elements.size());
  for (auto const& [xo, members] : by_part) {
    for (std::size_t k = 1; k < members.size(); ++k) uf.unite(members[0], members[k]);
    for (auto const& w : units) {
      auto const y = compose(inverse(w), compose(xo, w));
      auto it = by_part.find(y);
      if (it != by_part.end()) uf.unite(members[0], it->second[0]);
    }
  }
  return from_union_find(uf, elements.size());
}

// Every partial injection on m points, and the symmetric group.
std::vector<PartialInjection> rook_monoid(std::size_t m) {
  std::vector<PartialInjection> out;
  std::vector<Vertex> image(m, PartialInjection::kUndefined);
  auto rec = [&](auto&& self, std::size_t i, std::vector<char>& used) -> void {
    if (i == m) {
      out.emplace_back(image);
      return;
    }
    image[i] = PartialInjection::kUndefined;
    self(self, i + 1, used);
    for (std::size_t t = 0; t < m; ++t) {
      if (used[t]) continue;
      used[t] = 1;
      image[i] = static_cast<Vertex>(t);
      self(self, i + 1, used);
      used[t] = 0;
    }
    image[i] = PartialInjection::kUndefined;
  };
  std::vector<char> used(m, 0);
  rec(rec, 0, used);
  return out;
}

std::vector<PartialInjection> symmetric_group(std::size_t m) {
  std::vector<Vertex> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PartialInjection> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<PartialInjection> units_of(RennerMonoid const& r) {
  std::vector<PartialInjection> out;
  for (ElemId w = 0; w < r.group().size(); ++w) out.push_back(r.element(r.unit_index(w)));
  return out;
}

std::vector<fixtures::Case> all_cases() {
  auto v = fixtures::rank2_cases();
  auto const& x = fixtures::extra_cases();
  v.insert(v.end(), x.begin(), x.end());
  return v;
}

}  // namespace

TEST_SUITE("conj") {

TEST_CASE("kind names") {
  for (auto k : {ConjKind::sim, ConjKind::munn, ConjKind::semigroup, ConjKind::action}) {
    CHECK(parse_conj_kind(to_string(k)) == std::optional<ConjKind>(k));
  }
  CHECK_FALSE(parse_conj_kind("green").has_value());
}

TEST_CASE("sim class counts") {
  CHECK(count_sim_classes(monoid("A2", {1, 1})) == 18);
  CHECK(count_sim_classes(monoid("B2", {1, 1})) == 26);
  CHECK(count_sim_classes(monoid("G2", {1, 1})) == 35);
  CHECK(count_sim_classes(monoid("A2", {1, 0})) == 10);
  CHECK(count_sim_classes(monoid("B2", {1, 0})) == 15);
  CHECK(count_sim_classes(monoid("G2", {1, 0})) == 19);

  auto const& g2 = monoid("G2", {1, 1});
  std::vector<std::size_t> n;
  for (auto const& rep : orbit_reports(g2.group(), g2.lattice())) n.push_back(rep.orbit_count);
  CHECK(n == std::vector<std::size_t>{1, 12, 8, 8, 6});
}

TEST_CASE("orbit reports are consistent") {
  for (auto const& c : all_cases()) {
    CAPTURE(fixtures::name(c));
    auto const& r = monoid(c.type, c.mu);
    auto const& g = r.group();
    auto const reports = orbit_reports(g, r.lattice());
    auto const sim = sim_conjugacy_classes(r);
    std::uint64_t total = 0;
    for (auto const& rep : reports) {
      auto const& idem = r.lattice()[rep.e];
      CHECK(rep.centralizer_order == centralizer(g, idem).size());
      CHECK(rep.stabilizer_order == stabilizer(g, idem).size());
      CHECK(rep.coset_count * rep.stabilizer_order == g.size());
      CHECK(std::accumulate(rep.orbit_sizes.begin(), rep.orbit_sizes.end(), std::size_t{0}) == rep.coset_count);
      CHECK(rep.orbit_reps.size() == rep.orbit_count);
      // orbit sizes divide |W(e)|
      for (auto s : rep.orbit_sizes) CHECK(rep.centralizer_order % s == 0);
      std::size_t in_stratum = 0;
      for (auto const& s : sim.strata) in_stratum += (*s == rep.e);
      CHECK(in_stratum == rep.orbit_count);
      total += rep.orbit_count;
    }
    CHECK(total == sim.class_count());
    CHECK(total == count_sim_classes(g, r.lattice()));
  }
}

TEST_CASE("sim classes agree with the element-level oracle") {
  for (auto const& c : all_cases()) {
    CAPTURE(fixtures::name(c));
    auto const& r = monoid(c.type, c.mu);
    auto const fast = sim_conjugacy_classes(r);
    auto const brute = sim_classes_bruteforce(r);
    CHECK(same_partition(fast, brute));
    CHECK(as_sets(fast) == as_sets(brute));
    // representatives are u e with u a shortest coset representative
    for (std::size_t k = 0; k < fast.classes.size(); ++k) {
      auto const rep = fast.representatives[k];
      CHECK(std::binary_search(fast.classes[k].begin(), fast.classes[k].end(), rep));
      CHECK(r.stratum_of(rep) == *fast.strata[k]);
    }
    // an independent closure: x ~ w x w^-1 for every unit w
    UnionFind uf(r.size());
    auto const units = units_of(r);
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (auto const& w : units) uf.unite(i, r.require_index(compose(w, compose(r.element(i), inverse(w)))));
    }
    CHECK(from_union_find(uf, r.size()) == as_sets(fast));
  }
}

TEST_CASE("Munn counts") {
  CHECK(munn_classes(monoid("A2", {1, 0})).class_count() == 7);
  CHECK(munn_classes(monoid("B2", {1, 0})).class_count() == 9);
  CHECK(munn_classes(monoid("A2", {1, 1})).class_count() == 9);
  CHECK(irreducible_rep_count(monoid("A2", {1, 0})) == 7);
  CHECK(irreducible_rep_count(monoid("B2", {1, 1})) == 11);
  CHECK(irreducible_rep_count(monoid("A1", {1})) == 4);  // R_2
}

TEST_CASE("Munn, semigroup and action conjugacy coincide") {
  for (auto const& c : all_cases()) {
    CAPTURE(fixtures::name(c));
    auto const& r = monoid(c.type, c.mu);
    auto const munn = munn_classes(r);
    auto const semi = semigroup_conjugacy_classes(r);
    auto const act = action_conjugacy_classes(r);
    CHECK(same_partition(munn, semi));
    CHECK(same_partition(munn, act));
    CHECK(as_sets(munn) == munn_by_definition(r.elements(), units_of(r)));
    CHECK(munn.class_count() == irreducible_rep_count(r));
    CHECK(irreducible_rep_count(r) == irreducible_rep_count(r.group(), r.lattice()));

    // x is semigroup-conjugate to its invertible part
    auto const labels = semi.labels(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(labels[i] == labels[r.require_index(invertible_part(r.element(i)))]);
    }
    // sim refines Munn
    auto const munn_labels = munn.labels(r.size());
    for (auto const& cls : sim_conjugacy_classes(r).classes) {
      for (auto i : cls) CHECK(munn_labels[i] == munn_labels[cls.front()]);
    }
  }
}

TEST_CASE("Munn classes of subrank e meet W^*(e) e in one conjugacy class") {
  for (auto const& c : all_cases()) {
    CAPTURE(fixtures::name(c));
    auto const& r = monoid(c.type, c.mu);
    auto const& g = r.group();
    auto const munn = munn_classes(r);
    auto const labels = munn.labels(r.size());
    for (std::size_t e = 1; e < r.lattice().size(); ++e) {
      auto const ee = PartialInjection::partial_identity(r.lattice()[e].face);
      auto const& star = r.star_subgroup(e);
      auto const star_classes = group_conjugacy_classes(g, star);
      std::set<std::size_t> seen;
      for (auto const& sc : star_classes) {
        std::set<std::size_t> hit;
        for (ElemId u : sc) hit.insert(labels[r.require_index(compose(r.element(r.unit_index(u)), ee))]);
        CHECK(hit.size() == 1);
        CHECK(seen.insert(*hit.begin()).second);
      }
      std::size_t with_subrank = 0;
      for (auto const& s : munn.strata) with_subrank += (*s == e);
      CHECK(with_subrank == star_classes.size());
    }
  }
}

TEST_CASE("rook monoids") {
  auto const p = partition_counts(12);
  CHECK(p == std::vector<std::uint64_t>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77});
  CHECK(munn_count_rook(0) == 1);
  CHECK(munn_count_rook(2) == 4);
  CHECK(munn_count_rook(3) == 7);
  CHECK(partition_counts(400).back() == 6727090051741041926ULL);
  CHECK_THROWS_AS(partition_counts(1000), InvalidInput);
  CHECK_THROWS_AS(munn_count_rook(-1), InvalidInput);

  for (std::size_t m = 1; m <= 4; ++m) {
    CAPTURE(m);
    auto const rook = rook_monoid(m);
    auto const classes = munn_by_definition(rook, symmetric_group(m));
    CHECK(classes.size() == munn_count_rook(static_cast<int>(m)));
    if (m < 2) continue;
    std::vector<int> mu(m - 1, 0);
    mu[0] = 1;
    auto const& r = monoid("A" + std::to_string(m - 1), mu);
    CHECK(r.size() == rook.size());
    auto const munn = munn_classes(r);
    CHECK(munn.class_count() == munn_count_rook(static_cast<int>(m)));
    CHECK(as_sets(munn) == munn_by_definition(r.elements(), symmetric_group(m)));
  }
}

TEST_CASE("pair oracles respect their cap") {
  auto const& r = monoid("A2", {1, 1});
  CHECK_THROWS_AS(semigroup_conjugacy_classes(r, 50), SizeCapExceeded);
  CHECK_THROWS_AS(action_conjugacy_classes(r, 50), SizeCapExceeded);
}

TEST_CASE("classification json") {
  auto const& r = monoid("A2", {1, 0});
  auto const doc = classification_to_json(r, munn_classes(r));
  CHECK(doc["kind"] == "munn");
  CHECK(doc["class_count"] == 7);
  std::size_t total = 0;
  for (auto const& cls : doc["classes"]) {
    total += cls["size"].get<std::size_t>();
    CHECK(cls["stratum"].is_string());
    CHECK(r.contains(partial_injection_from_json(cls["representative"], r.degree())));
  }
  CHECK(total == r.size());
  auto const semi = classification_to_json(r, semigroup_conjugacy_classes(r));
  CHECK(semi["classes"][0]["stratum"].is_null());
}

}
