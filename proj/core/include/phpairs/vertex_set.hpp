#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

namespace phpairs {

using Vertex = std::uint32_t;

/// Fixed-universe bitset of vertex ids. All binary operations require both
/// operands to share the same universe.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  /// |*this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;
  /// Lexicographic order on the ascending member lists.
  std::strong_ordering lex_compare(const VertexSet& other) const;

  std::optional<Vertex> first() const noexcept;
  std::vector<Vertex> to_vector() const;
  std::span<const Word> words() const noexcept { return words_; }

  const_iterator begin() const { return {this, next_from(0)}; }
  const_iterator end() const { return {this, universe_}; }

 private:
  std::size_t next_from(std::size_t pos) const noexcept;
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Unordered pair {lo, hi} of distinct vertices, stored normalized.
struct VertexPair {
  Vertex lo = 0;
  Vertex hi = 1;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b);

  auto operator<=>(const VertexPair&) const = default;
};

}  // namespace phpairs
