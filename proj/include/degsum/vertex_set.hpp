#ifndef DEGSUM_VERTEX_SET_HPP
#define DEGSUM_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace degsum {

using Vertex = std::size_t;

inline constexpr std::size_t kMaxVertices = 256;

/// Fixed-capacity bit set of vertex indices in [0, kMaxVertices).
///
/// Every adjacency row of a Graph is one of these, so intersections and
/// degree counts inside a vertex subset reduce to a few AND + popcount.
class VertexSet {
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kWords = kMaxVertices / kWordBits;

 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, Vertex pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex pos_ = kMaxVertices;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  /// {0, 1, ..., n-1}
  static VertexSet range(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < kWordBits ? n : kWordBits;
      s.words_[w] = take == kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  template <typename Range>
  static VertexSet of(const Range& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  void insert(Vertex v) { words_[v / kWordBits] |= bit(v); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~bit(v); }
  bool contains(Vertex v) const {
    return v < kMaxVertices && (words_[v / kWordBits] & bit(v)) != 0;
  }

  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Number of common members, without materializing the intersection.
  std::size_t count_common(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < kWords; ++w)
      c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return c;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  /// Smallest member, or kMaxVertices when empty.
  Vertex first() const { return scan(0); }
  /// Smallest member strictly greater than v, or kMaxVertices.
  Vertex next(Vertex v) const { return v + 1 >= kMaxVertices ? kMaxVertices : scan(v + 1); }

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, kMaxVertices); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v % kWordBits); }

  Vertex scan(Vertex from) const {
    std::size_t w = from / kWordBits;
    if (w >= kWords) return kMaxVertices;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % kWordBits));
    while (true) {
      if (word != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
      if (++w == kWords) return kMaxVertices;
      word = words_[w];
    }
  }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace degsum

template <>
struct std::hash<degsum::VertexSet> {
  std::size_t operator()(const degsum::VertexSet& s) const noexcept { return s.hash(); }
};

#endif  // DEGSUM_VERTEX_SET_HPP
