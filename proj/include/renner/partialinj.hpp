#ifndef RENNER_PARTIALINJ_HPP
#define RENNER_PARTIALINJ_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace renner {

using Vertex = std::int32_t;

// Subset of the vertex index set {0, ..., degree-1}.
//
// Stored as a dense bitmask. For degree <= 64 (every rank-2 and most rank-3
// inputs) this is a single word; larger vertex sets use as many 64-bit words
// as needed, so the same type covers regular F4 orbits (1152 vertices).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t degree);
  VertexSet(std::size_t degree, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t degree);
  static VertexSet from_indices(std::size_t degree, std::span<Vertex const> members);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  bool is_subset_of(VertexSet const& other) const noexcept;
  VertexSet operator&(VertexSet const& other) const;
  VertexSet operator|(VertexSet const& other) const;

  std::vector<Vertex> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int const b = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(VertexSet const&, VertexSet const&) = default;
  // Orders by degree, then by members read as a little-endian bit string.
  friend bool operator<(VertexSet const& a, VertexSet const& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::size_t degree_ = 0;
  std::vector<std::uint64_t> words_;
};

// A partial injective map on {0, ..., degree-1}. Element of the rook monoid.
class PartialInjection {
 public:
  static constexpr Vertex kUndefined = -1;

  PartialInjection() = default;
  // image[i] == kUndefined means i is outside the domain.
  explicit PartialInjection(std::vector<Vertex> image);

  static PartialInjection zero(std::size_t degree);
  static PartialInjection identity(std::size_t degree);
  // e_K: the identity on K, undefined elsewhere.
  static PartialInjection partial_identity(VertexSet const& k);
  static PartialInjection from_pairs(std::size_t degree,
                                     std::span<std::pair<Vertex, Vertex> const> pairs);
  static PartialInjection from_pairs(std::size_t degree,
                                     std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_pairs(degree, std::span<std::pair<Vertex, Vertex> const>(pairs.begin(), pairs.size()));
  }

  std::size_t degree() const noexcept { return image_.size(); }
  bool defined_at(Vertex i) const noexcept {
    return image_[static_cast<std::size_t>(i)] != kUndefined;
  }
  Vertex operator()(Vertex i) const noexcept { return image_[static_cast<std::size_t>(i)]; }
  std::vector<Vertex> const& images() const noexcept { return image_; }

  VertexSet domain() const;
  VertexSet range() const;
  std::size_t rank() const noexcept;

  bool is_zero() const noexcept;
  bool is_total() const noexcept;
  // Image of a vertex set; vertices outside the domain are dropped.
  VertexSet apply(VertexSet const& s) const;

  // Source-sorted (source, target) pairs.
  std::vector<std::pair<Vertex, Vertex>> pairs() const;

  friend bool operator==(PartialInjection const&, PartialInjection const&) = default;
  friend auto operator<=>(PartialInjection const&, PartialInjection const&) = default;

  std::size_t hash() const noexcept;

 private:
  struct Trusted {};
  PartialInjection(Trusted, std::vector<Vertex> image) : image_(std::move(image)) {}

  friend PartialInjection compose(PartialInjection const&, PartialInjection const&);
  friend PartialInjection inverse(PartialInjection const&);
  friend PartialInjection restrict(PartialInjection const&, VertexSet const&);

  std::vector<Vertex> image_;
};

// (tau sigma)(i) = tau(sigma(i)).
PartialInjection compose(PartialInjection const& tau, PartialInjection const& sigma);
PartialInjection inverse(PartialInjection const& sigma);
// sigma <= tau in the natural partial order: tau restricted to dom(sigma) is sigma.
bool natural_leq(PartialInjection const& sigma, PartialInjection const& tau);
PartialInjection restrict(PartialInjection const& sigma, VertexSet const& s);
bool is_idempotent(PartialInjection const& sigma);

}  // namespace renner

template <>
struct std::hash<renner::VertexSet> {
  std::size_t operator()(renner::VertexSet const& s) const noexcept { return s.hash(); }
};

template <>
struct std::hash<renner::PartialInjection> {
  std::size_t operator()(renner::PartialInjection const& p) const noexcept { return p.hash(); }
};

#endif  // RENNER_PARTIALINJ_HPP
