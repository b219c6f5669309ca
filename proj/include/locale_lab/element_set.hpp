#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace locale_lab {

/// Dense element identifier of a finite frame (0..size-1).
using Element = std::uint32_t;

/// A set of element identifiers drawn from a fixed universe 0..universe-1.
///
/// Value type. Iteration yields members in increasing order, and operator<
/// compares the sorted member lists lexicographically, which is the order
/// used for deterministic output everywhere in the library.
class ElementSet {
  using Bits = boost::dynamic_bitset<std::uint64_t>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    const_iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    Element operator*() const { return static_cast<Element>(pos_); }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_ = Bits::npos;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members) : bits_(universe) {
    for (Element e : members) insert(e);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.set();
    return s;
  }

  template <class Range>
  static ElementSet from(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto e : members) s.insert(static_cast<Element>(e));
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Element e) const { return e < bits_.size() && bits_.test(e); }

  ElementSet& insert(Element e) {
    assert(e < bits_.size());
    bits_.set(e);
    return *this;
  }
  ElementSet& erase(Element e) {
    assert(e < bits_.size());
    bits_.reset(e);
    return *this;
  }

  bool is_subset_of(const ElementSet& other) const {
    assert(universe() == other.universe());
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ElementSet& other) const {
    assert(universe() == other.universe());
    return bits_.intersects(other.bits_);
  }

  /// Smallest / largest member, or universe() when empty.
  Element first() const {
    auto p = bits_.find_first();
    return static_cast<Element>(p == Bits::npos ? universe() : p);
  }

  ElementSet& operator|=(const ElementSet& o) {
    assert(universe() == o.universe());
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    assert(universe() == o.universe());
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    assert(universe() == o.universe());
    bits_ -= o.bits_;
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  ElementSet complement() const {
    ElementSet c = *this;
    c.bits_.flip();
    return c;
  }

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    auto i = a.begin(), j = b.begin();
    for (; i != a.end() && j != b.end(); ++i, ++j) {
      if (*i != *j) return *i < *j;
    }
    return i == a.end() && j != b.end();
  }

  std::size_t hash() const {
    std::size_t h = universe() * 0x9e3779b97f4a7c15ULL;
    for (Element e : *this) h = (h ^ e) * 0x100000001b3ULL + 0x7f4a7c15ULL;
    return h;
  }

  /// "{0,3,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Element e : *this) {
      if (!first_member) out += ',';
      out += std::to_string(e);
      first_member = false;
    }
    return out + "}";
  }

 private:
  Bits bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace locale_lab
