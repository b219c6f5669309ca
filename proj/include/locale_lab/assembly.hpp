#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sublocale.hpp"

namespace locale_lab {

inline constexpr std::size_t default_assembly_cap = std::size_t{1} << 16;

/// Largest assembly for which the reverse-inclusion frame is materialized.
inline constexpr std::size_t max_assembly_frame = 256;

/// Cap from LOCALE_LAB_CAP, or the built-in default when unset or invalid.
inline std::size_t cap_from_environment() {
  if (const char* v = std::getenv("LOCALE_LAB_CAP")) {
    char* end = nullptr;
    unsigned long long c = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && c >= 1) return static_cast<std::size_t>(c);
  }
  return default_assembly_cap;
}

/// A set of assembly indices.
using Family = ElementSet;

/// All sublocales of a frame, sorted by member list, together with the frame
/// S(L)^op (reverse inclusion) when small enough.
class Assembly {
 public:
  Assembly(FramePtr base, std::vector<Sublocale> sorted) : base_(std::move(base)), subs_(std::move(sorted)) {
    for (std::size_t i = 0; i < subs_.size(); ++i) index_.emplace(subs_[i].members(), i);
    zero_ = *index_of(zero_sublocale(base_).members());
    whole_ = *index_of(base_->elements());
    if (subs_.size() <= max_assembly_frame) {
      auto order = OrderRelation::from_predicate(subs_.size(), [&](Element i, Element j) {
        return subs_[j].members().is_subset_of(subs_[i].members());
      });
      std::vector<std::string> labels;
      for (const auto& s : subs_) labels.push_back(s.to_string());
      op_frame_ = share(make_frame(order, std::move(labels)));
    }
  }

  const FramePtr& base() const { return base_; }
  std::size_t size() const { return subs_.size(); }
  const std::vector<Sublocale>& sublocales() const { return subs_; }
  const Sublocale& operator[](std::size_t i) const { return subs_[i]; }

  std::optional<std::size_t> index_of(const ElementSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> index_of(const Sublocale& s) const { return index_of(s.members()); }

  /// Index of a sublocale that must be present; throws NotASublocale otherwise.
  std::size_t require_index(const Sublocale& s) const {
    auto i = index_of(s);
    if (!i) throw NotASublocale("not in the assembly: " + s.to_string());
    return *i;
  }

  std::size_t zero_index() const { return zero_; }
  std::size_t whole_index() const { return whole_; }
  bool included(std::size_t i, std::size_t j) const { return subs_[i].is_subset_of(subs_[j]); }

  Family empty_family() const { return Family(size()); }
  Family all() const { return Family::full(size()); }
  template <class Pred>
  Family family_where(Pred&& pred) const {
    Family out(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (pred(subs_[i])) out.insert(static_cast<Element>(i));
    return out;
  }

  bool has_frame() const { return op_frame_ != nullptr; }
  /// S(L)^op as a frame; element i is sublocale i.
  const FramePtr& frame() const {
    if (!op_frame_) throw CapExceeded(size(), max_assembly_frame);
    return op_frame_;
  }

 private:
  FramePtr base_;
  std::vector<Sublocale> subs_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::size_t zero_ = 0;
  std::size_t whole_ = 0;
  FramePtr op_frame_;
};

/// Enumerates S(L) by closure-system search: start from the zero sublocale and
/// repeatedly join a known sublocale with a one-point generated sublocale 𝔟(x).
/// Throws CapExceeded as soon as more than `cap` sublocales are found.
inline Assembly enumerate_assembly(const FramePtr& frame, std::size_t cap = cap_from_environment()) {
  const auto& f = *frame;
  std::vector<ElementSet> generated;
  generated.reserve(f.size());
  for (Element x = 0; x < f.size(); ++x) generated.push_back(boolean_members(f, x));

  std::unordered_map<ElementSet, bool, ElementSetHash> seen;
  std::deque<ElementSet> frontier;
  ElementSet zero(f.size(), {f.top()});
  seen.emplace(zero, true);
  frontier.push_back(zero);
  std::vector<ElementSet> found{zero};
  while (!frontier.empty()) {
    ElementSet s = std::move(frontier.front());
    frontier.pop_front();
    for (Element x = 0; x < f.size(); ++x) {
      if (s.contains(x)) continue;
      ElementSet next = meet_closure(f, s | generated[x]);
      if (seen.emplace(next, true).second) {
        if (found.size() >= cap) throw CapExceeded(found.size() + 1, cap);
        found.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Sublocale> subs;
  subs.reserve(found.size());
  for (auto& m : found) subs.push_back(Sublocale::trusted(frame, std::move(m)));
  return Assembly(frame, std::move(subs));
}

inline constexpr std::size_t missing_index = std::numeric_limits<std::size_t>::max();

/// Binary operation tabulated over assembly indices. A cell holds
/// missing_index when the result is not a member of the assembly.
class OperationTable {
 public:
  template <class Op>
  OperationTable(const Assembly& a, Op&& op) : n_(a.size()), cells_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        auto r = a.index_of(op(a[i], a[j]));
        cells_[i * n_ + j] = r ? *r : missing_index;
      }
  }
  std::size_t operator()(std::size_t i, std::size_t j) const {
    if (i == missing_index || j == missing_index) return missing_index;
    return cells_[i * n_ + j];
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> cells_;
};

inline OperationTable join_table(const Assembly& a) {
  return OperationTable(a, [](const Sublocale& s, const Sublocale& t) { return sublocale_join(s, t); });
}
inline OperationTable meet_table(const Assembly& a) {
  return OperationTable(a, [](const Sublocale& s, const Sublocale& t) { return sublocale_meet(s, t); });
}
inline OperationTable difference_table(const Assembly& a) {
  return OperationTable(a, [](const Sublocale& s, const Sublocale& t) { return difference(s, t); });
}

/// Closure of a family under binary joins (and the empty join).
inline Family join_closure(const Assembly& a, Family seed) {
  seed.insert(static_cast<Element>(a.zero_index()));
  std::vector<Element> work = seed.to_vector();
  while (!work.empty()) {
    Element i = work.back();
    work.pop_back();
    for (Element j : seed.to_vector()) {
      auto r = a.index_of(sublocale_join(a[i], a[j]));
      if (!r) throw NotASublocale("join left the assembly");
      auto e = static_cast<Element>(*r);
      if (!seed.contains(e)) {
        seed.insert(e);
        work.push_back(e);
      }
    }
  }
  return seed;
}

/// A family ordered by reverse inclusion, as a frame (element k is the k-th
/// member of the family in index order). Throws FrameError if the family is
/// not a lattice under that order.
inline FiniteFrame family_frame(const Assembly& a, const Family& fam) {
  auto idx = fam.to_vector();
  auto order = OrderRelation::from_predicate(idx.size(), [&](Element i, Element j) {
    return a[idx[j]].is_subset_of(a[idx[i]]);
  });
  std::vector<std::string> labels;
  for (auto i : idx) labels.push_back(a[i].to_string());
  return make_frame(order, std::move(labels));
}

}  // namespace locale_lab
