#include "renner/conj.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "renner/errors.hpp"
#include "renner/union_find.hpp"

namespace renner {

std::string_view to_string(ConjKind kind) {
  switch (kind) {
    case ConjKind::sim: return "sim";
    case ConjKind::munn: return "munn";
    case ConjKind::semigroup: return "semigroup";
    case ConjKind::action: return "action";
  }
  return "?";
}

std::optional<ConjKind> parse_conj_kind(std::string_view s) {
  for (auto k : {ConjKind::sim, ConjKind::munn, ConjKind::semigroup, ConjKind::action}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> ConjClassification::labels(std::size_t monoid_size) const {
  std::vector<std::size_t> out(monoid_size, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (auto i : classes[c]) out[i] = c;
  }
  return out;
}

std::vector<std::vector<std::size_t>> canonical_partition(ConjClassification const& c) {
  auto parts = c.classes;
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

bool same_partition(ConjClassification const& a, ConjClassification const& b) {
  return canonical_partition(a) == canonical_partition(b);
}

namespace {

// cosets of W_*(e): label per group element, plus each coset's shortest member
struct CosetTable {
  std::vector<std::size_t> coset_of;
  std::vector<ElemId> rep;
};

CosetTable left_cosets(WeylGroup const& group, RootSubset stab_gens) {
  auto const gens = stab_gens.to_vector();
  CosetTable t{std::vector<std::size_t>(group.size(), static_cast<std::size_t>(-1)), {}};
  for (ElemId w = 0; w < group.size(); ++w) {
    if (t.coset_of[w] != static_cast<std::size_t>(-1)) continue;
    auto const c = t.rep.size();
    t.rep.push_back(w);  // ascending scan: first member seen is the shortest
    std::vector<ElemId> stack{w};
    t.coset_of[w] = c;
    while (!stack.empty()) {
      ElemId const x = stack.back();
      stack.pop_back();
      for (int i : gens) {
        ElemId const y = group.times_generator(x, i);
        if (t.coset_of[y] != static_cast<std::size_t>(-1)) continue;
        t.coset_of[y] = c;
        stack.push_back(y);
      }
    }
  }
  return t;
}

// index of s_i x s_i for every element and generator
std::vector<std::size_t> generator_conjugation_table(RennerMonoid const& r) {
  auto const rank = static_cast<std::size_t>(r.group().rank());
  std::vector<PartialInjection> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    gens.push_back(r.group().as_partial_injection(r.group().generator(static_cast<int>(i))));
  }
  std::vector<std::size_t> table(r.size() * rank);
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t i = 0; i < rank; ++i) {
      table[x * rank + i] = r.require_index(compose(gens[i], compose(r.element(x), gens[i])));
    }
  }
  return table;
}

// Classes from a union-find, represented by their smallest element index.
ConjClassification from_union_find(ConjKind kind, UnionFind& uf) {
  std::map<std::size_t, std::size_t> root_to_class;
  ConjClassification out;
  out.kind = kind;
  for (std::size_t x = 0; x < uf.size(); ++x) {
    auto [it, inserted] = root_to_class.try_emplace(uf.find(x), out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(x);
  }
  for (auto const& c : out.classes) out.representatives.push_back(c.front());
  out.strata.assign(out.classes.size(), std::nullopt);
  return out;
}

void check_pair_cap(RennerMonoid const& r, std::size_t cap) {
  if (r.size() > cap) throw SizeCapExceeded("monoid order for pair enumeration", cap);
}

}  // namespace

std::vector<OrbitReport> orbit_reports(WeylGroup const& group, CrossSectionLattice const& lattice) {
  std::vector<OrbitReport> reports;
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    auto const& idem = lattice[e];
    auto const stab = stabilizer(group, idem);
    auto const cent = centralizer(group, idem);
    auto const cosets = left_cosets(group, stab.generators);
    auto const actors = cent.generators.to_vector();

    OrbitReport rep{e, cent.size(), stab.size(), cosets.rep.size(), 0, {}, {}};
    std::vector<char> seen(cosets.rep.size(), 0);
    for (std::size_t c0 = 0; c0 < cosets.rep.size(); ++c0) {
      if (seen[c0]) continue;
      seen[c0] = 1;
      std::vector<std::size_t> orbit{c0};
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        ElemId const u = cosets.rep[orbit[head]];
        for (int i : actors) {
          // s . uW_* = s u s^-1 W_*
          auto const c = cosets.coset_of[group.generator_times(i, group.times_generator(u, i))];
          if (seen[c]) continue;
          seen[c] = 1;
          orbit.push_back(c);
        }
      }
      ElemId best = cosets.rep[orbit.front()];
      for (auto c : orbit) best = std::min(best, cosets.rep[c]);
      rep.orbit_reps.push_back(best);
      rep.orbit_sizes.push_back(orbit.size());
    }
    rep.orbit_count = rep.orbit_reps.size();
    // cosets are scanned by their shortest member, so sort to order by representative
    std::vector<std::size_t> order(rep.orbit_count);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rep.orbit_reps[a] < rep.orbit_reps[b]; });
    OrbitReport sorted = rep;
    for (std::size_t k = 0; k < order.size(); ++k) {
      sorted.orbit_reps[k] = rep.orbit_reps[order[k]];
      sorted.orbit_sizes[k] = rep.orbit_sizes[order[k]];
    }
    reports.push_back(std::move(sorted));
  }
  return reports;
}

std::uint64_t count_sim_classes(WeylGroup const& group, CrossSectionLattice const& lattice) {
  std::uint64_t total = 0;
  for (auto const& rep : orbit_reports(group, lattice)) total += rep.orbit_count;
  return total;
}

std::uint64_t count_sim_classes(RennerMonoid const& r) {
  return count_sim_classes(r.group(), r.lattice());
}

ConjClassification sim_conjugacy_classes(RennerMonoid const& r) {
  auto const& group = r.group();
  auto const& lattice = r.lattice();
  auto const rank = static_cast<std::size_t>(group.rank());
  auto const conj = generator_conjugation_table(r);

  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(r.size(), kNone);
  ConjClassification out;
  out.kind = ConjKind::sim;

  for (auto const& report : orbit_reports(group, lattice)) {
    for (ElemId u : report.orbit_reps) {
      std::size_t rep_index = r.zero_index();
      if (report.e != CrossSectionLattice::zero_index()) {
        auto const ue = compose(group.as_partial_injection(u),
                                PartialInjection::partial_identity(lattice[report.e].face));
        rep_index = r.require_index(ue);
      }
      auto const id = out.classes.size();
      if (label[rep_index] != kNone) {
        throw ConsistencyError("two W(e)-orbits produced conjugate representatives");
      }
      std::vector<std::size_t> members{rep_index};
      label[rep_index] = id;
      for (std::size_t head = 0; head < members.size(); ++head) {
        for (std::size_t i = 0; i < rank; ++i) {
          auto const y = conj[members[head] * rank + i];
          if (label[y] == id) continue;
          if (label[y] != kNone) {
            throw ConsistencyError("two W(e)-orbits produced conjugate representatives");
          }
          label[y] = id;
          members.push_back(y);
        }
      }
      std::sort(members.begin(), members.end());
      out.classes.push_back(std::move(members));
      out.representatives.push_back(rep_index);
      out.strata.emplace_back(report.e);
    }
  }
  if (std::find(label.begin(), label.end(), kNone) != label.end()) {
    throw ConsistencyError("orbit classes do not cover the monoid");
  }
  return out;
}

ConjClassification sim_classes_bruteforce(RennerMonoid const& r) {
  auto const rank = static_cast<std::size_t>(r.group().rank());
  auto const conj = generator_conjugation_table(r);
  UnionFind uf(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t i = 0; i < rank; ++i) uf.unite(x, conj[x * rank + i]);
  }
  auto out = from_union_find(ConjKind::sim, uf);
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    out.strata[c] = r.stratum_of(out.representatives[c]);
  }
  return out;
}

ConjClassification munn_classes(RennerMonoid const& r) {
  auto const& group = r.group();
  auto const& lattice = r.lattice();

  // per e: class id of each W^*(e) member, and the class representatives
  std::vector<std::vector<std::size_t>> class_of(lattice.size());
  std::vector<std::vector<ElemId>> class_rep(lattice.size());
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    class_of[e].assign(group.size(), static_cast<std::size_t>(-1));
    auto const classes = group_conjugacy_classes(group, r.star_subgroup(e));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (ElemId u : classes[c]) class_of[e][u] = c;
      class_rep[e].push_back(classes[c].front());
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_key;
  for (std::size_t x = 0; x < r.size(); ++x) {
    auto const inv = invertible_part(r.element(x));
    auto const e = subrank(r, inv);
    std::size_t cls = 0;
    if (e != CrossSectionLattice::zero_index()) cls = class_of[e][project_to_star(r, inv)];
    by_key[{e, cls}].push_back(x);
  }

  ConjClassification out;
  out.kind = ConjKind::munn;
  for (auto& [key, members] : by_key) {
    auto const [e, cls] = key;
    std::size_t rep = r.zero_index();
    if (e != CrossSectionLattice::zero_index()) {
      rep = r.require_index(
          restrict(group.as_partial_injection(class_rep[e][cls]), lattice[e].face));
    }
    if (!std::binary_search(members.begin(), members.end(), rep)) {
      throw ConsistencyError("Munn class does not contain its W^*(e) representative");
    }
    out.classes.push_back(std::move(members));
    out.representatives.push_back(rep);
    out.strata.emplace_back(e);
  }
  return out;
}

ConjClassification semigroup_conjugacy_classes(RennerMonoid const& r, std::size_t pair_cap) {
  check_pair_cap(r, pair_cap);
  UnionFind uf(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = x + 1; y < r.size(); ++y) {
      uf.unite(r.require_index(compose(r.element(x), r.element(y))),
               r.require_index(compose(r.element(y), r.element(x))));
    }
  }
  return from_union_find(ConjKind::semigroup, uf);
}

ConjClassification action_conjugacy_classes(RennerMonoid const& r, std::size_t pair_cap) {
  check_pair_cap(r, pair_cap);
  std::vector<VertexSet> domains;
  std::vector<VertexSet> stable;
  std::vector<PartialInjection> inverses;
  for (auto const& s : r.elements()) {
    domains.push_back(s.domain());
    stable.push_back(stable_domain(s));
    inverses.push_back(inverse(s));
  }
  UnionFind uf(r.size());
  for (std::size_t s = 0; s < r.size(); ++s) {
    for (std::size_t x = 0; x < r.size(); ++x) {
      // s^-1 s = e_{dom s} >= e_x = e_{I°(x)}
      if (!stable[x].is_subset_of(domains[s])) continue;
      auto const y = compose(r.element(s), compose(r.element(x), inverses[s]));
      uf.unite(x, r.require_index(y));
    }
  }
  return from_union_find(ConjKind::action, uf);
}

std::uint64_t irreducible_rep_count(WeylGroup const& group, CrossSectionLattice const& lattice) {
  std::uint64_t total = 0;
  for (auto const& e : lattice.idempotents()) {
    total += group_conjugacy_classes(group, star_group(group, e)).size();
  }
  return total;
}

std::uint64_t irreducible_rep_count(RennerMonoid const& r) {
  return irreducible_rep_count(r.group(), r.lattice());
}

std::vector<std::uint64_t> partition_counts(int m) {
  if (m < 0) throw InvalidInput("partition count of a negative integer");
  std::vector<std::uint64_t> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= m; ++part) {
    for (int n = part; n <= m; ++n) {
      auto& slot = p[static_cast<std::size_t>(n)];
      if (__builtin_add_overflow(slot, p[static_cast<std::size_t>(n - part)], &slot)) {
        throw InvalidInput("partition count overflows 64 bits");
      }
    }
  }
  return p;
}

std::uint64_t munn_count_rook(int m) {
  std::uint64_t total = 0;
  for (auto v : partition_counts(m)) {
    if (__builtin_add_overflow(total, v, &total)) throw InvalidInput("rook class count overflows 64 bits");
  }
  return total;
}

}  // namespace renner
