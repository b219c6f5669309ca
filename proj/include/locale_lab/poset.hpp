#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "frame.hpp"

namespace locale_lab {

/// Maximum poset size accepted by the downset construction (2^k elements).
inline constexpr std::size_t max_poset_points = 16;

/// The lattice of downsets of a finite poset, ordered by inclusion. Element ids
/// follow the bitmask order of the downsets; labels list the points, e.g.
/// "{0,2}". Every finite frame is isomorphic to one of these.
inline FiniteFrame downset_lattice(const OrderRelation& poset) {
  const std::size_t k = poset.size();
  if (k > max_poset_points) throw std::invalid_argument("poset too large for downset lattice");
  std::vector<std::uint32_t> masks;
  std::vector<std::uint32_t> below(k, 0);
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y)
      if (poset.leq(y, x)) below[x] |= 1u << y;
  for (std::uint32_t m = 0; m < (1u << k); ++m) {
    bool down = true;
    for (Element x = 0; x < k && down; ++x)
      if ((m >> x & 1) && (below[x] & ~m)) down = false;
    if (down) masks.push_back(m);
  }
  std::vector<std::string> labels;
  for (auto m : masks) {
    std::string s = "{";
    bool first = true;
    for (Element x = 0; x < k; ++x)
      if (m >> x & 1) {
        if (!first) s += ',';
        s += std::to_string(x);
        first = false;
      }
    labels.push_back(s + "}");
  }
  auto order = OrderRelation::from_predicate(masks.size(), [&](Element a, Element b) {
    return (masks[a] & ~masks[b]) == 0;
  });
  return make_frame(order, std::move(labels));
}

/// Random poset on k points, k uniform in [1, bound]: each pair i < j is
/// related with probability 1/2, then transitively closed. Uses raw engine
/// output so results are identical across standard libraries.
inline OrderRelation random_poset(std::mt19937_64& rng, std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("poset bound must be at least 1");
  const std::size_t k = 1 + rng() % bound;
  OrderRelation r(k);
  for (Element i = 0; i < k; ++i)
    for (Element j = i + 1; j < k; ++j)
      if (rng() & 1) r.relate(i, j);
  r.close_transitively();
  return r;
}

inline FiniteFrame random_frame(std::mt19937_64& rng, std::size_t bound) {
  return downset_lattice(random_poset(rng, bound));
}

namespace detail {

inline std::uint64_t relation_code(const OrderRelation& r, const std::vector<Element>& perm) {
  const auto k = r.size();
  std::uint64_t code = 0;
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j)
      if (i != j && r.leq(i, j)) code |= std::uint64_t{1} << (perm[i] * k + perm[j]);
  return code;
}

}  // namespace detail

/// Lexicographically least relation code over all relabellings; equal codes
/// mean isomorphic posets. Limited to 7 points.
inline std::uint64_t canonical_code(const OrderRelation& r) {
  const auto k = r.size();
  if (k > 7) throw std::invalid_argument("canonical form limited to 7 points");
  std::vector<Element> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, detail::relation_code(r, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// All posets on exactly k points up to isomorphism (k <= 6), each presented
/// with a linear extension equal to the identity labelling.
inline std::vector<OrderRelation> posets_up_to_iso(std::size_t k) {
  if (k > 6) throw std::invalid_argument("poset enumeration limited to 6 points");
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i < k; ++i)
    for (Element j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<OrderRelation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    OrderRelation r(k);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) r.relate(pairs[e].first, pairs[e].second);
    OrderRelation closed = r;
    closed.close_transitively();
    bool was_closed = true;
    for (Element i = 0; i < k && was_closed; ++i) was_closed = closed.up(i) == r.up(i);
    if (!was_closed) continue;
    if (seen.insert(canonical_code(r)).second) out.push_back(r);
  }
  return out;
}

/// Downset lattices of all posets with at most `max_points` points, up to
/// isomorphism, smallest posets first. Includes the one-element frame.
inline std::vector<FiniteFrame> all_frames_up_to(std::size_t max_points) {
  std::vector<FiniteFrame> out;
  for (std::size_t k = 0; k <= max_points; ++k)
    for (const auto& p : posets_up_to_iso(k)) out.push_back(downset_lattice(p));
  return out;
}

/// 0 < a1 < ... < 1 with n elements (the 3-chain is 0 < a < 1).
inline FiniteFrame chain_frame(std::size_t n) {
  if (n == 0) throw std::invalid_argument("chain needs at least one element");
  std::vector<std::pair<Element, Element>> covers;
  for (Element i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  std::vector<std::string> labels;
  for (Element i = 0; i < n; ++i) {
    if (n == 1) labels.push_back("1");
    else if (i == 0) labels.push_back("0");
    else if (i + 1 == n) labels.push_back("1");
    else if (n == 3) labels.push_back("a");
    else labels.push_back("a" + std::to_string(i));
  }
  return make_frame(OrderRelation::from_covers(n, covers), std::move(labels));
}

/// The powerset of a k-point set (downsets of a k-antichain).
inline FiniteFrame boolean_frame(std::size_t k) { return downset_lattice(OrderRelation(k)); }

/// The Boolean 2x2 frame with labels 0, p, q, 1.
inline FiniteFrame boolean_square() {
  return make_frame(OrderRelation::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), {"0", "p", "q", "1"});
}

/// A frame with a new top element adjoined above the old top.
inline FiniteFrame with_new_top(const FiniteFrame& f) {
  const auto n = f.size();
  auto order = OrderRelation::from_predicate(n + 1, [&](Element a, Element b) {
    if (b == n) return true;
    if (a == n) return false;
    return f.leq(a, b);
  });
  auto labels = f.labels();
  labels.push_back("top");
  return make_frame(order, std::move(labels));
}

}  // namespace locale_lab
