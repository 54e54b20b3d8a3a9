#ifndef RENNER_ROOTSYS_HPP
#define RENNER_ROOTSYS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "renner/partialinj.hpp"

namespace renner {

// Simple roots are indexed 0..rank-1 internally. User-facing text (CLI,
// words such as "s1s2", labels such as "e{1}") is 1-based.

enum class TypeLabel : char { A = 'A', B = 'B', C = 'C', D = 'D', F = 'F', G = 'G' };

// A subset of the simple roots, as a bitmask. Ranks above 32 are far beyond
// any Weyl group that fits under the size caps.
class RootSubset {
 public:
  constexpr RootSubset() = default;
  constexpr explicit RootSubset(std::uint32_t bits) : bits_(bits) {}
  RootSubset(std::initializer_list<int> roots) {
    for (int r : roots) insert(r);
  }

  static constexpr RootSubset all(int rank) {
    return RootSubset(rank >= 32 ? ~0U : ((1U << rank) - 1U));
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool contains(int root) const noexcept { return (bits_ >> root) & 1U; }
  constexpr void insert(int root) noexcept { bits_ |= 1U << root; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool is_subset_of(RootSubset o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  constexpr RootSubset operator&(RootSubset o) const noexcept { return RootSubset(bits_ & o.bits_); }
  constexpr RootSubset operator|(RootSubset o) const noexcept { return RootSubset(bits_ | o.bits_); }
  constexpr RootSubset without(RootSubset o) const noexcept { return RootSubset(bits_ & ~o.bits_); }

  std::vector<int> to_vector() const;
  // "{1,2}" with 1-based indices.
  std::string to_string() const;

  friend constexpr bool operator==(RootSubset, RootSubset) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct CartanMatrix {
  TypeLabel type = TypeLabel::A;
  int rank = 0;
  std::vector<int> entries;  // row-major, rank x rank

  int operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * rank + j)]; }
  // "G2", "B3", ...
  std::string name() const;

  friend bool operator==(CartanMatrix const&, CartanMatrix const&) = default;
};

// Cartan matrix with a_ij = <alpha_i^vee, alpha_j> for the Bourbaki numbering
// of the Dynkin diagram (B_n: alpha_n short; C_n: alpha_n long; D_n: alpha_n
// attached to alpha_{n-2}; F4: alpha_3, alpha_4 short; G2: [[2,-1],[-3,2]]).
// Throws InvalidType on unsupported pairs.
CartanMatrix cartan_matrix(TypeLabel type, int rank);
// Parses labels such as "A2", "g2", "D4".
CartanMatrix cartan_matrix(std::string_view label);

// Order of the Weyl group of the given type, e.g. 12 for G2, 1152 for F4.
std::uint64_t standard_weyl_order(TypeLabel type, int rank);

struct WeightVector {
  std::vector<int> coords;  // fundamental-weight coordinates; coords[i] = <v, alpha_i^vee>

  std::size_t rank() const noexcept { return coords.size(); }
  friend bool operator==(WeightVector const&, WeightVector const&) = default;
  friend auto operator<=>(WeightVector const&, WeightVector const&) = default;
};

struct WeightVectorHash {
  std::size_t operator()(WeightVector const& v) const noexcept;
};

// Simple reflection in fundamental-weight coordinates: s_i(v) = v - v_i * row_i,
// where row i of the Cartan matrix is alpha_i written in the weight basis of the
// realization used throughout this library.
WeightVector reflect(CartanMatrix const& cartan, int root, WeightVector const& v);

// BFS orbit of the seed under the simple reflections; reflections are tried in
// index order, so the ordering is deterministic. Throws SizeCapExceeded.
std::vector<WeightVector> weight_orbit(CartanMatrix const& cartan, WeightVector const& seed,
                                       std::size_t cap);

using ElemId = std::uint32_t;

struct WeylElement {
  std::vector<Vertex> perm;  // action on vertex indices
  int length = 0;
  std::vector<int> word;  // lex-least reduced word over 0-based generator indices
};

inline constexpr std::size_t kDefaultGroupCap = 1152;

// A Weyl group realized as permutations of the orbit of a weight.
//
// Elements are numbered in BFS order of the right Cayley graph with
// generators tried in index order. Within each length layer this is the
// lexicographic order of canonical words, so comparing ElemIds compares
// (length, canonical word). Element 0 is the identity.
class WeylGroup {
 public:
  static WeylGroup generate(CartanMatrix cartan, WeightVector const& seed,
                            std::size_t cap = kDefaultGroupCap);

  CartanMatrix const& cartan() const noexcept { return cartan_; }
  int rank() const noexcept { return cartan_.rank; }
  std::vector<WeightVector> const& vertices() const noexcept { return vertices_; }
  std::size_t degree() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return elements_.size(); }

  WeylElement const& element(ElemId id) const { return elements_[id]; }
  static constexpr ElemId identity() noexcept { return 0; }
  ElemId generator(int root) const { return generators_[static_cast<std::size_t>(root)]; }

  ElemId multiply(ElemId a, ElemId b) const;  // a after b
  ElemId inverse(ElemId a) const { return inverse_[a]; }
  ElemId times_generator(ElemId w, int root) const {  // w s_root
    return right_[w * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(root)];
  }
  ElemId generator_times(int root, ElemId w) const {  // s_root w
    return left_[w * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(root)];
  }
  std::optional<ElemId> find(std::vector<Vertex> const& perm) const;

  PartialInjection as_partial_injection(ElemId id) const;
  // "s1s2s1", or "1" for the identity.
  std::string word_string(ElemId id) const;
  int vertex_index(WeightVector const& v) const;  // -1 when absent

 private:
  CartanMatrix cartan_;
  std::vector<WeightVector> vertices_;
  std::unordered_map<WeightVector, int, WeightVectorHash> vertex_index_;
  std::vector<WeylElement> elements_;
  std::vector<ElemId> generators_;
  std::vector<ElemId> inverse_;
  std::vector<ElemId> right_;
  std::vector<ElemId> left_;

  struct PermHash {
    std::size_t operator()(std::vector<Vertex> const& p) const noexcept;
  };
  std::unordered_map<std::vector<Vertex>, ElemId, PermHash> index_;
};

inline WeylGroup generate_weyl(CartanMatrix const& cartan, WeightVector const& seed,
                               std::size_t cap = kDefaultGroupCap) {
  return WeylGroup::generate(cartan, seed, cap);
}

// W_J, the subgroup generated by { s_j | j in J }.
struct Subgroup {
  RootSubset generators;
  std::vector<ElemId> members;  // ascending
  std::vector<char> mask;       // indexed by ElemId of the parent group

  std::size_t size() const noexcept { return members.size(); }
  bool contains(ElemId id) const { return mask[id] != 0; }
};

Subgroup parabolic(WeylGroup const& group, RootSubset j);

// The minimal-length representative of every left coset w W_J, in ElemId order.
std::vector<ElemId> min_coset_reps(WeylGroup const& group, RootSubset j);

// Conjugacy classes of the subgroup (conjugation by the subgroup itself). Each
// class is ascending, so its first member is the lex-least (length, word)
// representative; classes are ordered by representative.
std::vector<std::vector<ElemId>> group_conjugacy_classes(WeylGroup const& group,
                                                         Subgroup const& sub);

}  // namespace renner

#endif  // RENNER_ROOTSYS_HPP
