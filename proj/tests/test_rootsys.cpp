#include <doctest.h>

#include <algorithm>
#include <set>

#include "renner/errors.hpp"
#include "renner/rootsys.hpp"

using namespace renner;

namespace {

WeylGroup regular(std::string const& label, std::size_t cap = kDefaultGroupCap) {
  auto const c = cartan_matrix(label);
  return WeylGroup::generate(c, WeightVector{std::vector<int>(static_cast<std::size_t>(c.rank), 1)}, cap);
}

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("cartan matrices") {
  CHECK(cartan_matrix("A2").entries == std::vector<int>{2, -1, -1, 2});
  CHECK(cartan_matrix("G2").entries == std::vector<int>{2, -1, -3, 2});
  CHECK(cartan_matrix("B2").entries == std::vector<int>{2, -1, -2, 2});
  CHECK(cartan_matrix("C2").entries == std::vector<int>{2, -2, -1, 2});
  CHECK(cartan_matrix("g2") == cartan_matrix(TypeLabel::G, 2));
  CHECK_THROWS_AS(cartan_matrix("E6"), InvalidType);
  CHECK_THROWS_AS(cartan_matrix("G3"), InvalidType);
  CHECK_THROWS_AS(cartan_matrix("A0"), InvalidType);
  CHECK_THROWS_AS(cartan_matrix("B"), InvalidType);
}

TEST_CASE("cartan matrices are symmetrizable with a tree diagram") {
  for (auto label : {"A1", "A4", "B3", "C4", "D4", "D5", "F4", "G2"}) {
    auto const c = cartan_matrix(label);
    int edges = 0;
    for (int i = 0; i < c.rank; ++i) {
      CHECK(c(i, i) == 2);
      for (int j = i + 1; j < c.rank; ++j) {
        CHECK((c(i, j) == 0) == (c(j, i) == 0));
        if (c(i, j) != 0) {
          ++edges;
          CHECK(c(i, j) * c(j, i) <= 3);
        }
      }
    }
    CHECK(edges == c.rank - 1);
  }
}

TEST_CASE("reflections") {
  auto const a2 = cartan_matrix("A2");
  auto const g2 = cartan_matrix("G2");
  CHECK(reflect(a2, 0, WeightVector{{1, 0}}).coords == std::vector<int>{-1, 1});
  CHECK(reflect(g2, 1, WeightVector{{0, 1}}).coords == std::vector<int>{3, -1});
  // fixed when the coordinate vanishes
  for (auto const& c : {a2, g2, cartan_matrix("B3")}) {
    for (int i = 0; i < c.rank; ++i) {
      std::vector<int> v(static_cast<std::size_t>(c.rank), 3);
      v[static_cast<std::size_t>(i)] = 0;
      CHECK(reflect(c, i, WeightVector{v}).coords == v);
      // involution
      auto const w = WeightVector{std::vector<int>(static_cast<std::size_t>(c.rank), 1)};
      CHECK(reflect(c, i, reflect(c, i, w)) == w);
    }
  }
}

TEST_CASE("group generation examples") {
  auto const a2 = WeylGroup::generate(cartan_matrix("A2"), WeightVector{{1, 1}});
  CHECK(a2.size() == 6);
  CHECK(a2.degree() == 6);
  CHECK(regular("G2").size() == 12);

  auto const b2 = WeylGroup::generate(cartan_matrix("B2"), WeightVector{{1, 0}});
  CHECK(b2.size() == 8);
  // the orbit of e1 under the signed permutations of two letters
  std::set<std::pair<int, int>> signed_orbit;
  for (int sign : {1, -1}) {
    signed_orbit.insert({sign, 0});
    signed_orbit.insert({0, sign});
  }
  CHECK(b2.degree() == signed_orbit.size());
}

TEST_CASE("orders agree with the standard formulas") {
  struct Row {
    char const* label;
    TypeLabel type;
    int rank;
  };
  for (auto row : {Row{"A1", TypeLabel::A, 1}, Row{"A2", TypeLabel::A, 2}, Row{"A3", TypeLabel::A, 3},
                   Row{"A4", TypeLabel::A, 4}, Row{"A5", TypeLabel::A, 5}, Row{"B2", TypeLabel::B, 2},
                   Row{"B3", TypeLabel::B, 3}, Row{"B4", TypeLabel::B, 4}, Row{"C3", TypeLabel::C, 3},
                   Row{"C4", TypeLabel::C, 4}, Row{"D3", TypeLabel::D, 3}, Row{"D4", TypeLabel::D, 4},
                   Row{"F4", TypeLabel::F, 4}, Row{"G2", TypeLabel::G, 2}}) {
    CAPTURE(row.label);
    auto const g = regular(row.label);
    CHECK(g.size() == standard_weyl_order(row.type, row.rank));
    CHECK(g.degree() == g.size());
  }
  // independent products of degrees
  CHECK(standard_weyl_order(TypeLabel::F, 4) == 2 * 6 * 8 * 12);
  CHECK(standard_weyl_order(TypeLabel::D, 4) == 2 * 4 * 6 * 4);
  CHECK(standard_weyl_order(TypeLabel::A, 5) == 720);
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(regular("F4", 1000), SizeCapExceeded);
  CHECK_THROWS_AS(regular("D5"), SizeCapExceeded);
  CHECK_THROWS_AS(weight_orbit(cartan_matrix("A3"), WeightVector{{1, 1, 1}}, 10), SizeCapExceeded);
}

TEST_CASE("lengths, words and the Cayley tables") {
  for (auto label : {"A3", "B3", "G2", "D4"}) {
    CAPTURE(label);
    auto const g = regular(label);
    auto const r = g.rank();
    CHECK(g.element(WeylGroup::identity()).length == 0);
    CHECK(g.word_string(WeylGroup::identity()) == "1");
    int last_len = 0;
    for (ElemId w = 0; w < g.size(); ++w) {
      auto const& el = g.element(w);
      CHECK(el.length >= last_len);  // ids respect length
      last_len = el.length;
      CHECK(static_cast<int>(el.word.size()) == el.length);
      // rebuild from the word
      ElemId x = WeylGroup::identity();
      for (int s : el.word) x = g.times_generator(x, s);
      CHECK(x == w);
      CHECK(g.element(g.inverse(w)).length == el.length);
      CHECK(g.multiply(w, g.inverse(w)) == WeylGroup::identity());
      for (int i = 0; i < r; ++i) {
        int const step = g.element(g.times_generator(w, i)).length - el.length;
        CHECK((step == 1 || step == -1));
        CHECK(g.generator_times(i, w) == g.multiply(g.generator(i), w));
        CHECK(g.times_generator(w, i) == g.multiply(w, g.generator(i)));
      }
      CHECK(g.find(el.perm) == std::optional<ElemId>(w));
    }
  }
}

TEST_CASE("parabolic subgroups") {
  auto const a2 = regular("A2");
  auto const g2 = regular("G2");
  CHECK(parabolic(a2, RootSubset{}).size() == 1);
  auto const s1 = parabolic(a2, RootSubset{0});
  CHECK(s1.members == std::vector<ElemId>{WeylGroup::identity(), a2.generator(0)});
  CHECK(parabolic(g2, RootSubset{0, 1}).size() == 12);
  auto const d4 = regular("D4");
  CHECK(parabolic(d4, RootSubset{0, 2, 3}).size() == 8);  // three commuting reflections
  CHECK(parabolic(d4, RootSubset{0, 1, 2}).size() == 24);
}

TEST_CASE("minimal coset representatives match a brute-force scan") {
  for (auto label : {"A2", "G2", "B3", "A3"}) {
    auto const g = regular(label);
    auto const rank = g.rank();
    for (std::uint32_t bits = 0; bits < (1U << rank); ++bits) {
      RootSubset const j(bits);
      auto const sub = parabolic(g, j);
      std::set<ElemId> expected;
      std::vector<char> seen(g.size(), 0);
      for (ElemId w = 0; w < g.size(); ++w) {
        if (seen[w]) continue;
        ElemId best = w;
        for (ElemId u : sub.members) {
          ElemId const x = g.multiply(w, u);
          seen[x] = 1;
          if (g.element(x).length < g.element(best).length) best = x;
        }
        // uniqueness of the shortest element
        int count = 0;
        for (ElemId u : sub.members) {
          count += g.element(g.multiply(w, u)).length == g.element(best).length;
        }
        CHECK(count == 1);
        expected.insert(best);
      }
      auto const reps = min_coset_reps(g, j);
      CHECK(std::vector<ElemId>(expected.begin(), expected.end()) == reps);
      CHECK(reps.size() * sub.size() == g.size());
      // lengths add along w = d u
      for (ElemId d : reps) {
        for (ElemId u : sub.members) {
          CHECK(g.element(g.multiply(d, u)).length == g.element(d).length + g.element(u).length);
        }
      }
    }
  }
  auto const g2 = regular("G2");
  CHECK(min_coset_reps(g2, RootSubset{0}).size() == 6);
  CHECK(min_coset_reps(g2, RootSubset{}).size() == 12);
  CHECK(min_coset_reps(g2, RootSubset{0, 1}) == std::vector<ElemId>{WeylGroup::identity()});
}

TEST_CASE("conjugacy classes") {
  auto const a2 = regular("A2");
  auto const g2 = regular("G2");
  CHECK(group_conjugacy_classes(g2, parabolic(g2, RootSubset{})).size() == 1);
  CHECK(group_conjugacy_classes(g2, parabolic(g2, RootSubset{0, 1})).size() == 6);
  CHECK(group_conjugacy_classes(a2, parabolic(a2, RootSubset{0, 1})).size() == 3);

  // direct check: orbit sets under x -> g x g^-1 for all g in the subgroup
  for (auto label : {"A3", "B3", "D4"}) {
    auto const g = regular(label);
    for (std::uint32_t bits = 0; bits < (1U << g.rank()); ++bits) {
      auto const sub = parabolic(g, RootSubset(bits));
      std::set<std::set<ElemId>> direct;
      for (ElemId x : sub.members) {
        std::set<ElemId> cls;
        for (ElemId h : sub.members) cls.insert(g.multiply(g.multiply(h, x), g.inverse(h)));
        direct.insert(cls);
      }
      std::set<std::set<ElemId>> got;
      auto const classes = group_conjugacy_classes(g, sub);
      for (auto const& c : classes) got.insert(std::set<ElemId>(c.begin(), c.end()));
      CHECK(got == direct);
      for (std::size_t k = 1; k < classes.size(); ++k) CHECK(classes[k - 1].front() < classes[k].front());
    }
  }
  // S4 has 5 classes, W(B3) has 10, W(F4) has 25
  CHECK(group_conjugacy_classes(regular("A3"), parabolic(regular("A3"), RootSubset::all(3))).size() == 5);
  CHECK(group_conjugacy_classes(regular("B3"), parabolic(regular("B3"), RootSubset::all(3))).size() == 10);
  auto const f4 = regular("F4");
  CHECK(group_conjugacy_classes(f4, parabolic(f4, RootSubset::all(4))).size() == 25);
}

}
