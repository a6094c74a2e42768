#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace mgk {

/// Index of an element in the universe of a multi-group space. Ids follow the
/// order of first appearance in the instance file, which is the canonical order.
struct ElementId {
  std::uint32_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t v) : value(v) {}
  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// Subset of a universe `{0, ..., capacity-1}` stored as a bitset. Iteration and
/// comparison follow canonical element order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  ElementSet(std::size_t capacity, std::initializer_list<ElementId> ids) : ElementSet(capacity) {
    for (ElementId id : ids) insert(id);
  }

  static ElementSet full(std::size_t capacity) {
    ElementSet s(capacity);
    for (std::size_t i = 0; i < capacity; ++i) s.insert(ElementId(static_cast<std::uint32_t>(i)));
    return s;
  }

  /// Bits of `mask` select elements 0..63.
  static ElementSet from_mask(std::size_t capacity, std::uint64_t mask) {
    ElementSet s(capacity);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  std::size_t capacity() const { return capacity_; }

  bool contains(ElementId id) const {
    return id.index() < capacity_ && ((words_[id.index() / 64] >> (id.index() % 64)) & 1u);
  }
  void insert(ElementId id) { words_[id.index() / 64] |= std::uint64_t{1} << (id.index() % 64); }
  void erase(ElementId id) { words_[id.index() / 64] &= ~(std::uint64_t{1} << (id.index() % 64)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.word(i)) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.word(i)) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.word(i);
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.word(i);
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  std::vector<ElementId> elements() const {
    std::vector<ElementId> out;
    for_each([&](ElementId id) { out.push_back(id); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(ElementId(static_cast<std::uint32_t>(w * 64 + bit)));
        bits &= bits - 1;
      }
    }
  }

  /// First element in canonical order; precondition: not empty.
  ElementId front() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return ElementId(static_cast<std::uint32_t>(w * 64 + std::countr_zero(words_[w])));
    return ElementId(static_cast<std::uint32_t>(capacity_));
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < std::max(a.words_.size(), b.words_.size()); ++i)
      if (a.word(i) != b.word(i)) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the sorted element lists.
bool lex_less(const ElementSet& a, const ElementSet& b);

/// Canonical order for families of sets: by cardinality, then lexicographic.
bool canonical_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace mgk
