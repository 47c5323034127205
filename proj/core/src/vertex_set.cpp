#include "phpairs/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "phpairs/errors.hpp"

namespace phpairs {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (universe % kWordBits != 0) {
    s.words_.back() = (Word{1} << (universe % kWordBits)) - 1;
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw ContractViolation("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw ContractViolation("vertex sets over different universes");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  check_same_universe(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering VertexSet::lex_compare(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  for (; a != end() && b != other.end(); ++a, ++b) {
    if (*a != *b) return *a <=> *b;
  }
  const bool a_done = a == end();
  const bool b_done = b == other.end();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::optional<Vertex> VertexSet::first() const noexcept {
  const std::size_t pos = next_from(0);
  if (pos >= universe_) return std::nullopt;
  return static_cast<Vertex>(pos);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::next_from(std::size_t pos) const noexcept {
  if (pos >= universe_) return universe_;
  std::size_t wi = pos / kWordBits;
  Word w = words_[wi] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (w != 0) {
      return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    }
    if (++wi >= words_.size()) return universe_;
    w = words_[wi];
  }
}

VertexPair::VertexPair(Vertex a, Vertex b) : lo(std::min(a, b)), hi(std::max(a, b)) {
  if (a == b) throw ContractViolation("vertex pair needs two distinct vertices");
}

}  // namespace phpairs
