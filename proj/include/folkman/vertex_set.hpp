#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace folkman {

using Vertex = int;

/// Bitset over the vertices 0..universe-1 of some host graph.
///
/// The width is fixed at construction; binary operations require both
/// operands to share the same universe.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  [[nodiscard]] int universe() const { return universe_; }

  [[nodiscard]] bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }

  [[nodiscard]] int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  [[nodiscard]] bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  [[nodiscard]] Vertex first() const { return next(0); }

  /// Smallest member >= from, or -1.
  [[nodiscard]] Vertex next(Vertex from) const {
    if (from >= universe_) return -1;
    auto wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  [[nodiscard]] bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  [[nodiscard]] std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  static std::size_t word_count(int universe) {
    return (static_cast<std::size_t>(universe) + 63) / 64;
  }
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace folkman
