#include "renner/partialinj.hpp"

#include <algorithm>
#include <bit>

#include "renner/errors.hpp"

namespace renner {

namespace {

constexpr std::size_t word_count(std::size_t degree) { return (degree + 63) / 64; }

std::size_t mix(std::size_t seed, std::uint64_t v) noexcept {
  // splitmix64 finalizer folded into a boost-style combine
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  v ^= v >> 31;
  return seed ^ (static_cast<std::size_t>(v) + 0x9e3779b9 + (seed << 6) + (seed >> 2));
}

}  // namespace

VertexSet::VertexSet(std::size_t degree) : degree_(degree), words_(word_count(degree), 0) {}

VertexSet::VertexSet(std::size_t degree, std::initializer_list<Vertex> members)
    : VertexSet(degree) {
  for (Vertex v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= degree) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t degree) {
  VertexSet s(degree);
  for (std::size_t i = 0; i < degree; ++i) s.insert(static_cast<Vertex>(i));
  return s;
}

VertexSet VertexSet::from_indices(std::size_t degree, std::span<Vertex const> members) {
  VertexSet s(degree);
  for (Vertex v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= degree) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
    s.insert(v);
  }
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::is_subset_of(VertexSet const& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet VertexSet::operator&(VertexSet const& other) const {
  VertexSet r(degree_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  return r;
}

VertexSet VertexSet::operator|(VertexSet const& other) const {
  VertexSet r(degree_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
  return r;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool operator<(VertexSet const& a, VertexSet const& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return std::lexicographical_compare(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                      b.words_.end());
}

std::size_t VertexSet::hash() const noexcept {
  std::size_t h = degree_;
  for (auto w : words_) h = mix(h, w);
  return h;
}

PartialInjection::PartialInjection(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (Vertex t : image_) {
    if (t == kUndefined) continue;
    if (t < 0 || static_cast<std::size_t>(t) >= image_.size()) {
      throw InvalidInput("partial injection image " + std::to_string(t) + " out of range");
    }
    if (hit[static_cast<std::size_t>(t)]++ != 0) {
      throw InvalidInput("map is not injective at image " + std::to_string(t));
    }
  }
}

PartialInjection PartialInjection::zero(std::size_t degree) {
  PartialInjection p;
  p.image_.assign(degree, kUndefined);
  return p;
}

PartialInjection PartialInjection::identity(std::size_t degree) {
  PartialInjection p;
  p.image_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.image_[i] = static_cast<Vertex>(i);
  return p;
}

PartialInjection PartialInjection::partial_identity(VertexSet const& k) {
  auto p = zero(k.degree());
  k.for_each([&](Vertex v) { p.image_[static_cast<std::size_t>(v)] = v; });
  return p;
}

PartialInjection PartialInjection::from_pairs(std::size_t degree,
                                              std::span<std::pair<Vertex, Vertex> const> pairs) {
  std::vector<Vertex> image(degree, kUndefined);
  for (auto [s, t] : pairs) {
    if (s < 0 || static_cast<std::size_t>(s) >= degree) {
      throw InvalidInput("pair source " + std::to_string(s) + " out of range");
    }
    if (image[static_cast<std::size_t>(s)] != kUndefined) {
      throw InvalidInput("duplicate source " + std::to_string(s));
    }
    image[static_cast<std::size_t>(s)] = t;
  }
  return PartialInjection(std::move(image));
}

VertexSet PartialInjection::domain() const {
  VertexSet s(degree());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != kUndefined) s.insert(static_cast<Vertex>(i));
  }
  return s;
}

VertexSet PartialInjection::range() const {
  VertexSet s(degree());
  for (Vertex t : image_) {
    if (t != kUndefined) s.insert(t);
  }
  return s;
}

std::size_t PartialInjection::rank() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(image_.begin(), image_.end(), [](Vertex t) { return t != kUndefined; }));
}

bool PartialInjection::is_zero() const noexcept {
  return std::all_of(image_.begin(), image_.end(), [](Vertex t) { return t == kUndefined; });
}

bool PartialInjection::is_total() const noexcept {
  return std::none_of(image_.begin(), image_.end(), [](Vertex t) { return t == kUndefined; });
}

VertexSet PartialInjection::apply(VertexSet const& s) const {
  VertexSet out(degree());
  s.for_each([&](Vertex v) {
    if (defined_at(v)) out.insert((*this)(v));
  });
  return out;
}

std::vector<std::pair<Vertex, Vertex>> PartialInjection::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != kUndefined) out.emplace_back(static_cast<Vertex>(i), image_[i]);
  }
  return out;
}

std::size_t PartialInjection::hash() const noexcept {
  std::size_t h = image_.size();
  for (Vertex t : image_) h = mix(h, static_cast<std::uint32_t>(t));
  return h;
}

PartialInjection compose(PartialInjection const& tau, PartialInjection const& sigma) {
  if (tau.degree() != sigma.degree()) throw InvalidInput("compose: degree mismatch");
  std::vector<Vertex> image(sigma.degree(), PartialInjection::kUndefined);
  for (std::size_t i = 0; i < image.size(); ++i) {
    Vertex const mid = sigma.images()[i];
    if (mid != PartialInjection::kUndefined) image[i] = tau(mid);
  }
  return PartialInjection(PartialInjection::Trusted{}, std::move(image));
}

PartialInjection inverse(PartialInjection const& sigma) {
  std::vector<Vertex> image(sigma.degree(), PartialInjection::kUndefined);
  for (std::size_t i = 0; i < image.size(); ++i) {
    Vertex const t = sigma.images()[i];
    if (t != PartialInjection::kUndefined) image[static_cast<std::size_t>(t)] = static_cast<Vertex>(i);
  }
  return PartialInjection(PartialInjection::Trusted{}, std::move(image));
}

bool natural_leq(PartialInjection const& sigma, PartialInjection const& tau) {
  if (sigma.degree() != tau.degree()) return false;
  for (std::size_t i = 0; i < sigma.degree(); ++i) {
    Vertex const s = sigma.images()[i];
    if (s != PartialInjection::kUndefined && tau.images()[i] != s) return false;
  }
  return true;
}

PartialInjection restrict(PartialInjection const& sigma, VertexSet const& s) {
  std::vector<Vertex> image(sigma.degree(), PartialInjection::kUndefined);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (s.contains(static_cast<Vertex>(i))) image[i] = sigma.images()[i];
  }
  return PartialInjection(PartialInjection::Trusted{}, std::move(image));
}

bool is_idempotent(PartialInjection const& sigma) {
  for (std::size_t i = 0; i < sigma.degree(); ++i) {
    Vertex const t = sigma.images()[i];
    if (t != PartialInjection::kUndefined && t != static_cast<Vertex>(i)) return false;
  }
  return true;
}

}  // namespace renner
