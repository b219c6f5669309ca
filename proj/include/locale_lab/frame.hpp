#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "fault_injection.hpp"

namespace locale_lab {

/// A binary relation on 0..n-1 meant to be a partial order; row `up(a)` holds
/// every b with a <= b.
class OrderRelation {
 public:
  explicit OrderRelation(std::size_t n) : up_(n, ElementSet(n)) {
    for (Element a = 0; a < n; ++a) up_[a].insert(a);
  }

  /// Reflexive-transitive closure of a cover list; (i, j) means i is covered by j.
  static OrderRelation from_covers(std::size_t n, const std::vector<std::pair<Element, Element>>& covers) {
    OrderRelation r(n);
    for (auto [lo, hi] : covers) {
      if (lo >= n || hi >= n) throw std::invalid_argument("cover references an element out of range");
      r.relate(lo, hi);
    }
    r.close_transitively();
    return r;
  }

  template <class Leq>
  static OrderRelation from_predicate(std::size_t n, Leq&& leq) {
    OrderRelation r(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (leq(a, b)) r.relate(a, b);
    return r;
  }

  std::size_t size() const { return up_.size(); }
  void relate(Element a, Element b) { up_[a].insert(b); }
  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  const ElementSet& up(Element a) const { return up_[a]; }

  void close_transitively() {
    const auto n = size();
    for (Element k = 0; k < n; ++k)
      for (Element i = 0; i < n; ++i)
        if (up_[i].contains(k)) up_[i] |= up_[k];
  }

 private:
  std::vector<ElementSet> up_;
};

enum class Violation { non_poset, non_lattice, non_distributive };

inline std::string_view violation_name(Violation v) {
  switch (v) {
    case Violation::non_poset: return "NonPoset";
    case Violation::non_lattice: return "NonLattice";
    case Violation::non_distributive: return "NonDistributive";
  }
  return "";
}

/// Why a candidate order was not accepted as a frame. The witness lists the
/// elements involved: one or two for poset failures, a pair for lattice
/// failures, a triple (a, b, c) with a∧(b∨c) ≠ (a∧b)∨(a∧c) for distributivity.
struct FrameRejection {
  Violation violation;
  std::vector<Element> witness;
  std::string message;
};

class FrameError : public Error {
 public:
  explicit FrameError(FrameRejection r)
      : Error(std::string(violation_name(r.violation)) + ": " + r.message), rejection_(std::move(r)) {}
  const FrameRejection& rejection() const { return rejection_; }

 private:
  FrameRejection rejection_;
};

class FiniteFrame;
std::variant<FiniteFrame, FrameRejection> verify_frame(const OrderRelation& order,
                                                       std::vector<std::string> labels = {});

/// A validated finite frame (finite distributive lattice). Immutable; all
/// lattice operations are table lookups.
class FiniteFrame {
 public:
  std::size_t size() const { return n_; }
  Element top() const { return top_; }
  Element bottom() const { return bottom_; }

  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }

  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  /// Largest c with a∧c <= b.
  Element heyting(Element a, Element b) const { return heyting_[a * n_ + b]; }
  Element pseudocomplement(Element a) const { return heyting(a, bottom_); }

  template <class Range>
  Element meet_of(const Range& elements) const {
    Element m = top_;
    for (auto e : elements) m = meet(m, static_cast<Element>(e));
    return m;
  }
  template <class Range>
  Element join_of(const Range& elements) const {
    Element j = bottom_;
    for (auto e : elements) j = join(j, static_cast<Element>(e));
    return j;
  }

  /// ↑a and ↓a.
  const ElementSet& up_set(Element a) const { return up_[a]; }
  const ElementSet& down_set(Element a) const { return down_[a]; }
  ElementSet strictly_above(Element a) const { return ElementSet(up_[a]).erase(a); }
  ElementSet strictly_below(Element a) const { return ElementSet(down_[a]).erase(a); }
  ElementSet elements() const { return ElementSet::full(n_); }

  /// Hasse diagram edges (lower, upper), sorted.
  const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find_label(std::string_view name) const {
    for (Element a = 0; a < n_; ++a)
      if (labels_[a] == name) return a;
    return std::nullopt;
  }

  std::string format(const ElementSet& s) const {
    std::string out = "{";
    bool first = true;
    for (Element e : s) {
      if (!first) out += ',';
      out += labels_[e];
      first = false;
    }
    return out + "}";
  }

 private:
  friend std::variant<FiniteFrame, FrameRejection> verify_frame(const OrderRelation&, std::vector<std::string>);
  FiniteFrame() = default;

  std::size_t n_ = 0;
  Element top_ = 0;
  Element bottom_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> heyting_;
  std::vector<std::pair<Element, Element>> covers_;
  std::vector<std::string> labels_;
};

using FramePtr = std::shared_ptr<const FiniteFrame>;

namespace detail {

inline std::string pair_text(Element a, Element b) { return std::to_string(a) + ", " + std::to_string(b); }

// Greatest element of `bounds` w.r.t. the rows `below` (below[g] = ↓g), if any.
inline std::optional<Element> greatest_in(const ElementSet& bounds, const std::vector<ElementSet>& below) {
  std::optional<Element> best;
  std::size_t best_size = 0;
  for (Element g : bounds) {
    auto sz = below[g].size();
    if (!best || sz > best_size) {
      best = g;
      best_size = sz;
    }
  }
  if (best && bounds.is_subset_of(below[*best])) return best;
  return std::nullopt;
}

}  // namespace detail

/// Validates `order` as a frame: partial order, then lattice (every pair has a
/// meet and a join), then binary distributivity. On finite lattices binary
/// distributivity already gives the infinite frame law.
inline std::variant<FiniteFrame, FrameRejection> verify_frame(const OrderRelation& order,
                                                              std::vector<std::string> labels) {
  const std::size_t n = order.size();
  auto reject = [](Violation v, std::vector<Element> w, std::string msg) {
    return FrameRejection{v, std::move(w), std::move(msg)};
  };
  if (n == 0) return reject(Violation::non_lattice, {}, "empty order has no top or bottom");
  if (!labels.empty() && labels.size() != n) throw std::invalid_argument("label count does not match element count");

  for (Element a = 0; a < n; ++a)
    if (!order.leq(a, a)) return reject(Violation::non_poset, {a}, "not reflexive at " + std::to_string(a));
  for (Element a = 0; a < n; ++a)
    for (Element b : order.up(a))
      if (a != b && order.leq(b, a))
        return reject(Violation::non_poset, {a, b}, "antisymmetry fails for " + detail::pair_text(a, b));
  for (Element a = 0; a < n; ++a)
    for (Element b : order.up(a))
      if (!order.up(b).is_subset_of(order.up(a))) {
        Element c = (order.up(b) - order.up(a)).first();
        return reject(Violation::non_poset, {a, b, c},
                      "transitivity fails for " + detail::pair_text(a, b) + ", " + std::to_string(c));
      }

  FiniteFrame f;
  f.n_ = n;
  f.up_.assign(n, ElementSet(n));
  f.down_.assign(n, ElementSet(n));
  for (Element a = 0; a < n; ++a) {
    f.up_[a] = order.up(a);
    for (Element b : order.up(a)) f.down_[b].insert(a);
  }

  f.meet_.assign(n * n, 0);
  f.join_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      auto glb = detail::greatest_in(f.down_[a] & f.down_[b], f.down_);
      if (!glb) return reject(Violation::non_lattice, {a, b}, "no meet for " + detail::pair_text(a, b));
      auto lub = detail::greatest_in(f.up_[a] & f.up_[b], f.up_);
      if (!lub) return reject(Violation::non_lattice, {a, b}, "no join for " + detail::pair_text(a, b));
      f.meet_[a * n + b] = f.meet_[b * n + a] = *glb;
      f.join_[a * n + b] = f.join_[b * n + a] = *lub;
    }
  }
  // With up-rows, "greatest" means the upper bound whose up-set contains all
  // other upper bounds, i.e. the least upper bound.

  for (Element a = 0; a < n; ++a) {
    if (f.down_[a].size() == n) f.top_ = a;
    if (f.up_[a].size() == n) f.bottom_ = a;
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = b + 1; c < n; ++c) {
        Element lhs = f.meet(a, f.join(b, c));
        Element rhs = f.join(f.meet(a, b), f.meet(a, c));
        if (lhs != rhs)
          return reject(Violation::non_distributive, {a, b, c},
                        "a∧(b∨c) ≠ (a∧b)∨(a∧c) for a, b, c = " + detail::pair_text(a, b) + ", " +
                            std::to_string(c));
      }

  f.heyting_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element h = f.bottom_;
      for (Element c = 0; c < n; ++c)
        if (f.leq(f.meet(a, c), b)) h = f.join(h, c);
      f.heyting_[a * n + b] = h;
    }

  for (Element a = 0; a < n; ++a) {
    ElementSet above = f.strictly_above(a);
    ElementSet upper_covers = above;
    for (Element c : above) upper_covers -= f.strictly_above(c);
    for (Element c : upper_covers) f.covers_.emplace_back(a, c);
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (Element a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  f.labels_ = std::move(labels);
  return f;
}

/// verify_frame, throwing FrameError on rejection.
inline FiniteFrame make_frame(const OrderRelation& order, std::vector<std::string> labels = {}) {
  auto r = verify_frame(order, std::move(labels));
  if (auto* rej = std::get_if<FrameRejection>(&r)) throw FrameError(*rej);
  return std::get<FiniteFrame>(std::move(r));
}

inline FramePtr share(FiniteFrame f) { return std::make_shared<const FiniteFrame>(std::move(f)); }

inline Element heyting(const FiniteFrame& f, Element a, Element b) { return f.heyting(a, b); }
inline Element pseudocomplement(const FiniteFrame& f, Element a) { return f.pseudocomplement(a); }

/// Elements p ≠ 1 such that p = x∧y forces p ∈ {x, y}.
inline ElementSet primes(const FiniteFrame& f) {
  ElementSet out(f.size());
  for (Element p = 0; p < f.size(); ++p) {
    if (p == f.top()) continue;
    ElementSet above = f.strictly_above(p);
    bool prime = true;
    for (Element x : above) {
      for (Element y : above)
        if (y > x && f.meet(x, y) == p) {
          prime = false;
          break;
        }
      if (!prime) break;
    }
    if (prime) out.insert(p);
  }
  return out;
}

/// Primes p whose strict upper set has a meet strictly above p, i.e. no meet
/// of elements other than p itself can produce p.
inline ElementSet covered_primes(const FiniteFrame& f) {
  ElementSet out(f.size());
  for (Element p : primes(f))
    if (f.meet_of(f.strictly_above(p)) != p) out.insert(p);
  if (mutant_active(Mutant::covered_prime_underreport) && !out.empty()) {
    Element last = 0;
    for (Element p : out) last = p;
    out.erase(last);
  }
  return out;
}

/// Whenever a ≰ b there is c with a∨c = 1 and b∨c ≠ 1.
inline bool is_subfit(const FiniteFrame& f) {
  for (Element a = 0; a < f.size(); ++a)
    for (Element b = 0; b < f.size(); ++b) {
      if (f.leq(a, b)) continue;
      bool separated = false;
      for (Element c = 0; c < f.size() && !separated; ++c)
        separated = f.join(a, c) == f.top() && f.join(b, c) != f.top();
      if (!separated) return false;
    }
  return true;
}

inline bool maximal_primes_only(const FiniteFrame& f) {
  for (Element p : primes(f))
    for (Element x : f.strictly_above(p))
      if (x != f.top()) return false;
  return true;
}

/// Whether a equals the meet of the members of `candidates` lying above it.
inline bool is_meet_of_above(const FiniteFrame& f, Element a, const ElementSet& candidates) {
  return f.meet_of(candidates & f.up_set(a)) == a;
}

/// Every element is a meet of primes.
inline bool is_spatial(const FiniteFrame& f) {
  ElementSet pts = primes(f);
  for (Element a = 0; a < f.size(); ++a)
    if (!is_meet_of_above(f, a, pts)) return false;
  return true;
}

/// Every element is a meet of covered primes.
inline bool every_element_meet_of_covered_primes(const FiniteFrame& f) {
  ElementSet pts = covered_primes(f);
  for (Element a = 0; a < f.size(); ++a)
    if (!is_meet_of_above(f, a, pts)) return false;
  return true;
}

inline bool is_boolean(const FiniteFrame& f) {
  for (Element a = 0; a < f.size(); ++a) {
    Element c = f.pseudocomplement(a);
    if (f.join(a, c) != f.top()) return false;
  }
  return true;
}

/// Self-check of the infinite distributive law a∧⋁B = ⋁{a∧b} over every
/// subset B. Exponential; intended for frames of at most ~16 elements.
inline bool satisfies_subset_distributivity(const FiniteFrame& f) {
  const std::size_t n = f.size();
  if (n > 20) throw std::invalid_argument("subset distributivity scan limited to 20 elements");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Element j = f.bottom();
    for (Element b = 0; b < n; ++b)
      if (mask >> b & 1) j = f.join(j, b);
    for (Element a = 0; a < n; ++a) {
      Element rhs = f.bottom();
      for (Element b = 0; b < n; ++b)
        if (mask >> b & 1) rhs = f.join(rhs, f.meet(a, b));
      if (f.meet(a, j) != rhs) return false;
    }
  }
  return true;
}

}  // namespace locale_lab
