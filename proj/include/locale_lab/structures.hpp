#pragma once

#include <string>
#include <utility>
#include <vector>

#include "assembly.hpp"

namespace locale_lab {

/// A sublocale viewed as a frame in its own right (meets as in the parent,
/// joins computed inside S). Element k of `frame` is parent element to_parent[k].
struct SubFrame {
  FramePtr frame;
  std::vector<Element> to_parent;
  std::vector<std::size_t> from_parent;  // missing_index outside S
};

inline SubFrame sublocale_as_frame(const Sublocale& s) {
  const auto& f = s.frame();
  SubFrame out;
  out.to_parent = s.members().to_vector();
  out.from_parent.assign(f.size(), missing_index);
  for (std::size_t k = 0; k < out.to_parent.size(); ++k) out.from_parent[out.to_parent[k]] = k;
  auto order = OrderRelation::from_predicate(out.to_parent.size(), [&](Element i, Element j) {
    return f.leq(out.to_parent[i], out.to_parent[j]);
  });
  std::vector<std::string> labels;
  for (auto e : out.to_parent) labels.push_back(f.label(e));
  out.frame = share(make_frame(order, std::move(labels)));
  return out;
}

/// Primes of the lattice `members` (a meet-closed subset containing top).
inline ElementSet primes_within(const FiniteFrame& f, const ElementSet& members) {
  ElementSet out(f.size());
  for (Element p : members) {
    if (p == f.top()) continue;
    ElementSet above = members & f.strictly_above(p);
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

/// Covered primes of the lattice `members`: primes strictly below the meet of
/// the members above them.
inline ElementSet covered_primes_within(const FiniteFrame& f, const ElementSet& members) {
  ElementSet out(f.size());
  for (Element p : primes_within(f, members))
    if (f.meet_of(members & f.strictly_above(p)) != p) out.insert(p);
  return out;
}

/// pt(S): the primes of S as a frame (parent ids).
inline ElementSet pt(const Sublocale& s) { return primes_within(s.frame(), s.members()); }
/// pt_D(S): the covered primes of S as a frame (parent ids).
inline ElementSet pt_D(const Sublocale& s) { return covered_primes_within(s.frame(), s.members()); }

inline ElementSet pt_extrinsic(const Sublocale& s) { return primes(s.frame()) & s.members(); }
inline ElementSet pt_D_extrinsic(const Sublocale& s) { return covered_primes(s.frame()) & s.members(); }

/// pt_D(S) ⊆ pt_D(L).
inline bool is_D_sublocale(const Sublocale& s) { return pt_D(s).is_subset_of(covered_primes(s.frame())); }

class PrimeSubset {
 public:
  enum class Kind { classical, covered };

  /// Throws InvalidPrimeSubset if some member is not a (covered) prime.
  static PrimeSubset make(FramePtr frame, ElementSet members, Kind kind) {
    ElementSet allowed = kind == Kind::covered ? covered_primes(*frame) : primes(*frame);
    if (!members.is_subset_of(allowed))
      throw InvalidPrimeSubset("not a subset of the " + std::string(kind == Kind::covered ? "covered " : "") +
                               "primes: " + frame->format(members - allowed));
    return PrimeSubset(std::move(frame), std::move(members), kind);
  }

  const FramePtr& frame_ptr() const { return frame_; }
  const ElementSet& members() const { return members_; }
  Kind kind() const { return kind_; }

 private:
  PrimeSubset(FramePtr f, ElementSet m, Kind k) : frame_(std::move(f)), members_(std::move(m)), kind_(k) {}
  FramePtr frame_;
  ElementSet members_;
  Kind kind_;
};

/// 𝔐(Y): all meets of subsets of Y.
inline Sublocale meet_closure_M(const FramePtr& frame, const ElementSet& y) {
  return Sublocale::trusted(frame, meet_closure(*frame, y));
}
inline Sublocale meet_closure_M(const PrimeSubset& y) { return meet_closure_M(y.frame_ptr(), y.members()); }

/// ⋁{𝔟(p) : p ∈ Y}, which equals 𝔐(Y) for a set of primes.
inline Sublocale join_of_point_sublocales(const PrimeSubset& y) {
  std::vector<Sublocale> parts;
  for (Element p : y.members()) parts.push_back(boolean_sublocale(y.frame_ptr(), p));
  return sublocale_join(y.frame_ptr(), parts);
}

/// 𝔐(pt(S)).
inline Sublocale spatialization(const Sublocale& s) { return meet_closure_M(s.frame_ptr(), pt(s)); }

/// 𝔐(pt_D(S)); only defined on D-sublocales.
inline Sublocale sp_D(const Sublocale& s) {
  if (!is_D_sublocale(s)) throw NotDSublocale("not a D-sublocale: " + s.to_string());
  return meet_closure_M(s.frame_ptr(), pt_D(s));
}

/// Fixpoints of the double supplement.
inline Family S_b(const Assembly& a) {
  return a.family_where([](const Sublocale& s) { return supplement(supplement(s)) == s; });
}

inline Family complemented_family(const Assembly& a) {
  return a.family_where([](const Sublocale& s) { return complement_of(s).has_value(); });
}

/// Joins of complemented sublocales.
inline Family smooth_family(const Assembly& a) { return join_closure(a, complemented_family(a)); }

/// Joins of closed sublocales.
inline Family S_c(const Assembly& a) {
  Family closed(a.size());
  for (Element x = 0; x < a.base()->size(); ++x)
    closed.insert(static_cast<Element>(a.require_index(closed_sublocale(a.base(), x))));
  return join_closure(a, closed);
}

inline Family S_D(const Assembly& a) { return a.family_where(is_D_sublocale); }

/// Spatial sublocales: S = 𝔐(pt(S)).
inline Family sp_S(const Assembly& a) {
  return a.family_where([](const Sublocale& s) { return spatialization(s) == s; });
}

struct CheckReport {
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;

  void record(bool ok, const std::string& witness) {
    ++cases;
    if (!ok) {
      passed = false;
      if (witnesses.size() < 8) witnesses.push_back(witness);
    }
  }
};

namespace detail {

template <class Fn>
void for_each_subset(const ElementSet& base, Fn&& fn) {
  auto items = base.to_vector();
  if (items.size() > 20) throw CapExceeded(std::size_t{1} << 20, std::size_t{1} << 20);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    ElementSet y(base.universe());
    for (std::size_t k = 0; k < items.size(); ++k)
      if (mask >> k & 1) y.insert(items[k]);
    fn(y);
  }
}

}  // namespace detail

/// 𝔐(Y) ⊆ S ⇔ Y ⊆ pt_D(S) for every D-sublocale S and Y ⊆ pt_D(L), and
/// pt_D(𝔐(Y)) = Y.
inline CheckReport check_adjunction_M_ptD(const Assembly& a) {
  CheckReport r;
  const auto& f = *a.base();
  ElementSet points = covered_primes(f);
  std::vector<Sublocale> ds;
  for (const auto& s : a.sublocales())
    if (is_D_sublocale(s)) ds.push_back(s);
  detail::for_each_subset(points, [&](const ElementSet& y) {
    Sublocale m = meet_closure_M(a.base(), y);
    r.record(pt_D(m) == y, "pt_D(M(Y)) != Y for Y = " + f.format(y));
    for (const auto& s : ds)
      r.record(m.is_subset_of(s) == y.is_subset_of(pt_D(s)),
               "adjunction fails for Y = " + f.format(y) + ", S = " + s.to_string());
  });
  return r;
}

/// The classical square: 𝔐(Y) ⊆ S ⇔ Y ⊆ pt(S) for every S and Y ⊆ pt(L).
inline CheckReport check_adjunction_M_pt(const Assembly& a) {
  CheckReport r;
  const auto& f = *a.base();
  detail::for_each_subset(primes(f), [&](const ElementSet& y) {
    Sublocale m = meet_closure_M(a.base(), y);
    for (const auto& s : a.sublocales())
      r.record(m.is_subset_of(s) == y.is_subset_of(pt(s)),
               "adjunction fails for Y = " + f.format(y) + ", S = " + s.to_string());
  });
  return r;
}

/// pt(↑a), after checking that a is the meet of those primes.
inline ElementSet primes_above_checked(const FiniteFrame& f, Element a) {
  ElementSet p = primes(f) & f.up_set(a);
  if (f.meet_of(p) != a) throw PreconditionFailed(f.label(a) + " is not a meet of primes");
  return p;
}

/// p ∈ pt(↑a) with ⋀(pt(↑a) ∖ ↑p) ≠ a.
inline ElementSet essential_primes(const FiniteFrame& f, Element a) {
  ElementSet p = primes_above_checked(f, a);
  ElementSet out(f.size());
  for (Element q : p)
    if (f.meet_of(p - f.up_set(q)) != a) out.insert(q);
  return out;
}

/// p ∈ pt(↑a) with ⋀(pt(↑a) ∖ {p}) ≠ a.
inline ElementSet absolutely_essential_primes(const FiniteFrame& f, Element a) {
  ElementSet p = primes_above_checked(f, a);
  ElementSet out(f.size());
  for (Element q : p)
    if (f.meet_of(ElementSet(p).erase(q)) != a) out.insert(q);
  return out;
}

/// p ≠ ⋀(pt(↑p) ∖ {p}).
inline bool weakly_covered(const FiniteFrame& f, Element p) {
  return f.meet_of(primes(f) & f.strictly_above(p)) != p;
}

}  // namespace locale_lab
