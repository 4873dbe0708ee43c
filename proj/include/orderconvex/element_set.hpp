#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace orderconvex {

/// Index of an element in the carrier of a finite structure.
using Element = unsigned;

/// Hard limit imposed by the bitset word; configurable caps sit below it.
inline constexpr std::size_t kMaxCarrier = 32;

/// A subset of the carrier {0, ..., n-1}, stored as a bitmask.
class ElementSet {
 public:
  using word_type = std::uint32_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}

    constexpr Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(word_type bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> xs) {
    for (Element x : xs) insert(x);
  }

  static constexpr ElementSet singleton(Element x) { return ElementSet(word_type{1} << x); }
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 32 ? ~word_type{0} : ((word_type{1} << n) - 1));
  }
  static ElementSet from_range(const std::vector<Element>& xs) {
    ElementSet s;
    for (Element x : xs) s.insert(x);
    return s;
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Element x) const { return (bits_ >> x) & 1U; }
  constexpr Element front() const {
    assert(!empty());
    return static_cast<Element>(std::countr_zero(bits_));
  }
  constexpr Element back() const {
    assert(!empty());
    return static_cast<Element>(31 - std::countl_zero(bits_));
  }

  constexpr void insert(Element x) { bits_ |= word_type{1} << x; }
  constexpr void erase(Element x) { bits_ &= ~(word_type{1} << x); }

  constexpr ElementSet with(Element x) const { return ElementSet(bits_ | (word_type{1} << x)); }
  constexpr ElementSet without(Element x) const { return ElementSet(bits_ & ~(word_type{1} << x)); }

  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }

  constexpr ElementSet complement(std::size_t n) const { return full(n) - *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

 private:
  word_type bits_ = 0;
};

/// Calls f(sub) for every subset of s, in increasing bitmask order, the empty set first.
template <typename F>
constexpr void for_each_subset(ElementSet s, F&& f) {
  const auto mask = s.bits();
  ElementSet::word_type sub = 0;
  while (true) {
    f(ElementSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Like for_each_subset but stops as soon as f returns false. Returns false if stopped.
template <typename F>
constexpr bool for_each_subset_while(ElementSet s, F&& f) {
  const auto mask = s.bits();
  ElementSet::word_type sub = 0;
  while (true) {
    if (!f(ElementSet(sub))) return false;
    if (sub == mask) return true;
    sub = (sub - mask) & mask;
  }
}

/// Calls f(sub) for every subset of s with exactly k members, in lexicographic order of members.
template <typename F>
bool for_each_subset_of_size_while(ElementSet s, std::size_t k, F&& f) {
  const std::vector<Element> members = s.to_vector();
  if (k > members.size()) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElementSet sub;
    for (std::size_t i : idx) sub.insert(members[i]);
    if (!f(sub)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == members.size() - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace orderconvex
