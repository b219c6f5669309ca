#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frame.hpp"

namespace locale_lab {

/// Whether `members` contains top, is closed under binary meets and under
/// a -> s for every a in the frame. On a finite frame this is the full
/// sublocale condition.
inline bool is_sublocale(const FiniteFrame& f, const ElementSet& members) {
  if (!members.contains(f.top())) return false;
  for (Element s : members) {
    for (Element t : members)
      if (t > s && !members.contains(f.meet(s, t))) return false;
    for (Element a = 0; a < f.size(); ++a)
      if (!members.contains(f.heyting(a, s))) return false;
  }
  return true;
}

class Sublocale {
 public:
  /// Validating constructor; throws NotASublocale.
  static Sublocale make(FramePtr frame, ElementSet members) {
    if (members.universe() != frame->size()) throw NotASublocale("member set has the wrong universe");
    if (!is_sublocale(*frame, members)) throw NotASublocale("not a sublocale: " + frame->format(members));
    return Sublocale(std::move(frame), std::move(members));
  }
  /// For results that are sublocales by construction.
  static Sublocale trusted(FramePtr frame, ElementSet members) {
    return Sublocale(std::move(frame), std::move(members));
  }

  const FramePtr& frame_ptr() const { return frame_; }
  const FiniteFrame& frame() const { return *frame_; }
  const ElementSet& members() const { return members_; }
  bool contains(Element e) const { return members_.contains(e); }
  std::size_t size() const { return members_.size(); }
  /// The zero sublocale {1}.
  bool is_zero() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == frame_->size(); }
  bool is_subset_of(const Sublocale& o) const { return members_.is_subset_of(o.members_); }

  /// "0" for the zero sublocale, otherwise the labelled member list.
  std::string to_string() const { return is_zero() ? "0" : frame_->format(members_); }

  friend bool operator==(const Sublocale& a, const Sublocale& b) {
    return a.frame_ == b.frame_ && a.members_ == b.members_;
  }
  friend bool operator<(const Sublocale& a, const Sublocale& b) { return a.members_ < b.members_; }

 private:
  Sublocale(FramePtr frame, ElementSet members) : frame_(std::move(frame)), members_(std::move(members)) {}
  FramePtr frame_;
  ElementSet members_;
};

inline void require_same_frame(const Sublocale& a, const Sublocale& b) {
  if (a.frame_ptr() != b.frame_ptr()) throw MixedFrames();
}

/// Closure of a set under binary meets, plus top.
inline ElementSet meet_closure(const FiniteFrame& f, const ElementSet& seed) {
  ElementSet out = seed;
  out.insert(f.top());
  std::vector<Element> work = out.to_vector();
  while (!work.empty()) {
    Element x = work.back();
    work.pop_back();
    for (Element y : out.to_vector()) {
      Element m = f.meet(x, y);
      if (!out.contains(m)) {
        out.insert(m);
        work.push_back(m);
      }
    }
  }
  return out;
}

class Nucleus {
 public:
  /// Validating constructor; throws NotANucleus.
  static Nucleus make(FramePtr frame, std::vector<Element> table) {
    const auto& f = *frame;
    if (table.size() != f.size()) throw NotANucleus("table size does not match frame");
    for (Element a = 0; a < f.size(); ++a) {
      if (table[a] >= f.size()) throw NotANucleus("value out of range");
      if (!f.leq(a, table[a])) throw NotANucleus("not inflationary at " + f.label(a));
      if (table[table[a]] != table[a]) throw NotANucleus("not idempotent at " + f.label(a));
    }
    for (Element a = 0; a < f.size(); ++a)
      for (Element b = a + 1; b < f.size(); ++b)
        if (table[f.meet(a, b)] != f.meet(table[a], table[b]))
          throw NotANucleus("does not preserve the meet of " + f.label(a) + " and " + f.label(b));
    return Nucleus(std::move(frame), std::move(table));
  }

  const FramePtr& frame_ptr() const { return frame_; }
  Element operator()(Element a) const { return table_[a]; }
  const std::vector<Element>& table() const { return table_; }
  friend bool operator==(const Nucleus& a, const Nucleus& b) { return a.table_ == b.table_; }

 private:
  Nucleus(FramePtr frame, std::vector<Element> table) : frame_(std::move(frame)), table_(std::move(table)) {}
  FramePtr frame_;
  std::vector<Element> table_;
};

/// ν_S(a) = ⋀{s ∈ S : s ≥ a}.
inline Element nucleus_value(const Sublocale& s, Element a) {
  return s.frame().meet_of(s.members() & s.frame().up_set(a));
}

inline Nucleus sublocale_to_nucleus(const Sublocale& s) {
  std::vector<Element> table(s.frame().size());
  for (Element a = 0; a < table.size(); ++a) table[a] = nucleus_value(s, a);
  return Nucleus::make(s.frame_ptr(), std::move(table));
}

inline Sublocale nucleus_to_sublocale(const Nucleus& nu) {
  ElementSet image(nu.table().size());
  for (Element v : nu.table()) image.insert(v);
  return Sublocale::trusted(nu.frame_ptr(), std::move(image));
}

/// 𝔟(x) = {a -> x : a ∈ L}.
inline ElementSet boolean_members(const FiniteFrame& f, Element x) {
  ElementSet out(f.size());
  for (Element a = 0; a < f.size(); ++a) out.insert(f.heyting(a, x));
  return out;
}

/// Smallest sublocale containing `seed`: the meet closure of all a -> x with
/// x in the seed. The Heyting images are already closed under a -> (-) and
/// a -> ⋀(bᵢ -> xᵢ) = ⋀((a∧bᵢ) -> xᵢ), so one meet-closure pass suffices.
inline Sublocale generate_sublocale(const FramePtr& frame, const ElementSet& seed) {
  const auto& f = *frame;
  ElementSet h(f.size());
  for (Element x : seed) h |= boolean_members(f, x);
  return Sublocale::trusted(frame, meet_closure(f, h));
}

inline Sublocale open_sublocale(const FramePtr& frame, Element a) {
  ElementSet out(frame->size());
  for (Element b = 0; b < frame->size(); ++b) out.insert(frame->heyting(a, b));
  return Sublocale::trusted(frame, std::move(out));
}

inline Sublocale closed_sublocale(const FramePtr& frame, Element a) {
  return Sublocale::trusted(frame, frame->up_set(a));
}

inline Sublocale boolean_sublocale(const FramePtr& frame, Element a) {
  return Sublocale::trusted(frame, boolean_members(*frame, a));
}

inline Sublocale whole(const FramePtr& frame) { return Sublocale::trusted(frame, frame->elements()); }

inline Sublocale zero_sublocale(const FramePtr& frame) {
  return Sublocale::trusted(frame, ElementSet(frame->size(), {frame->top()}));
}

/// Meet closure of the union; the empty join is the zero sublocale.
inline Sublocale sublocale_join(const FramePtr& frame, const std::vector<Sublocale>& parts) {
  ElementSet u(frame->size());
  u.insert(frame->top());
  for (const auto& s : parts) {
    if (s.frame_ptr() != frame) throw MixedFrames();
    u |= s.members();
  }
  if (mutant_active(Mutant::join_without_meet_closure)) return Sublocale::trusted(frame, u);
  return Sublocale::trusted(frame, meet_closure(*frame, u));
}

inline Sublocale sublocale_join(const Sublocale& a, const Sublocale& b) {
  require_same_frame(a, b);
  return sublocale_join(a.frame_ptr(), {a, b});
}

/// Intersection; the empty meet is the whole frame.
inline Sublocale sublocale_meet(const FramePtr& frame, const std::vector<Sublocale>& parts) {
  ElementSet m = frame->elements();
  for (const auto& s : parts) {
    if (s.frame_ptr() != frame) throw MixedFrames();
    m &= s.members();
  }
  return Sublocale::trusted(frame, std::move(m));
}

inline Sublocale sublocale_meet(const Sublocale& a, const Sublocale& b) {
  require_same_frame(a, b);
  return Sublocale::trusted(a.frame_ptr(), a.members() & b.members());
}

inline Sublocale closure(const Sublocale& s) { return closed_sublocale(s.frame_ptr(), s.frame().meet_of(s.members())); }

inline bool is_dense(const Sublocale& s) { return s.contains(s.frame().bottom()); }

inline bool is_codense(const Sublocale& s) {
  for (Element a = 0; a < s.frame().size(); ++a)
    if (a != s.frame().top() && nucleus_value(s, a) == s.frame().top()) return false;
  return true;
}

/// Whether x ∈ 𝔬(a) ∨ 𝔠(b), i.e. x = (a -> x) ∧ (b ∨ x).
inline bool in_open_join_closed(const FiniteFrame& f, Element a, Element b, Element x) {
  return f.meet(f.heyting(a, x), f.join(b, x)) == x;
}

/// Largest b with T ⊆ 𝔬(a) ∨ 𝔠(b), namely ⋀_{t ∈ T} ((a -> t) -> t).
inline Element largest_closed_part(const FiniteFrame& f, const ElementSet& t_members, Element a) {
  Element b = f.top();
  for (Element t : t_members) b = f.meet(b, f.heyting(f.heyting(a, t), t));
  return b;
}

/// S ∖ T, the least R with S ⊆ T ∨ R. T is the intersection of the
/// complemented sublocales 𝔬(a) ∨ 𝔠(b) containing it, so S ∖ T is the join of
/// the pieces S ∩ 𝔠(a) ∩ 𝔬(b). For fixed a those pieces grow with b and the
/// admissible b have a largest element, so one piece per a is enough.
inline Sublocale difference(const Sublocale& s, const Sublocale& t) {
  require_same_frame(s, t);
  const auto& f = s.frame();
  if (mutant_active(Mutant::difference_without_decomposition))
    return generate_sublocale(s.frame_ptr(), s.members() - t.members());
  ElementSet pieces(f.size());
  for (Element a = 0; a < f.size(); ++a) {
    Element b = largest_closed_part(f, t.members(), a);
    for (Element x : s.members() & f.up_set(a))
      if (f.heyting(b, x) == x) pieces.insert(x);
  }
  return Sublocale::trusted(s.frame_ptr(), meet_closure(f, pieces));
}

/// S# = L ∖ S.
inline Sublocale supplement(const Sublocale& s) { return difference(whole(s.frame_ptr()), s); }

/// The complement of S in S(L) if it has one. When it exists it is S#.
inline std::optional<Sublocale> complement_of(const Sublocale& s) {
  Sublocale c = supplement(s);
  if (sublocale_meet(s, c).is_zero() && sublocale_join(s, c).is_whole()) return c;
  return std::nullopt;
}

}  // namespace locale_lab
