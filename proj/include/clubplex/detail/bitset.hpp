#pragma once

#include "clubplex/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace clubplex::detail {

/// Fixed-size dynamic bitset sized at construction.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Bits full(std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i)
      b.set(i);
    return b;
  }

  std::size_t size() const noexcept { return n_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w)
        return true;
    return false;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= n_)
      return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w)
        return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size())
        return n_;
      w = words_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  std::size_t and_count(const Bits &other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  Bits &operator|=(const Bits &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  Bits &operator&=(const Bits &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bits &subtract(const Bits &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bits &, const Bits &) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Adjacency matrix as one bitset row per vertex.
struct BitGraph {
  std::vector<Bits> rows;

  explicit BitGraph(const Graph &g) : rows(g.vertex_count(), Bits(g.vertex_count())) {
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v : g.neighbors(u))
        rows[u].set(v);
  }

  std::size_t size() const noexcept { return rows.size(); }
};

} // namespace clubplex::detail
