#pragma once

#include <string>
#include <utility>
#include <vector>

#include "interior.hpp"
#include "structures.hpp"

namespace locale_lab {

/// A frame homomorphism h: source -> target with its right adjoint, the
/// localic map r: target -> source.
class AdjointPair {
 public:
  /// Computes r(b) = ⋁{a : h(a) ≤ b}. Throws InvalidAdjointPair unless h
  /// preserves finite meets and joins (including top and bottom).
  static AdjointPair from_hom(FramePtr source, FramePtr target, ElementMap hom) {
    const auto& s = *source;
    const auto& t = *target;
    if (hom.size() != s.size()) throw InvalidAdjointPair("hom table has the wrong size");
    for (Element v : hom)
      if (v >= t.size()) throw InvalidAdjointPair("hom value out of range");
    if (hom[s.top()] != t.top()) throw InvalidAdjointPair("hom does not preserve top");
    if (hom[s.bottom()] != t.bottom()) throw InvalidAdjointPair("hom does not preserve bottom");
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = a + 1; b < s.size(); ++b) {
        if (hom[s.meet(a, b)] != t.meet(hom[a], hom[b]))
          throw InvalidAdjointPair("hom does not preserve the meet of " + s.label(a) + " and " + s.label(b));
        if (hom[s.join(a, b)] != t.join(hom[a], hom[b]))
          throw InvalidAdjointPair("hom does not preserve the join of " + s.label(a) + " and " + s.label(b));
      }
    ElementMap right(t.size());
    for (Element b = 0; b < t.size(); ++b) {
      Element r = s.bottom();
      for (Element a = 0; a < s.size(); ++a)
        if (t.leq(hom[a], b)) r = s.join(r, a);
      right[b] = r;
    }
    return make(std::move(source), std::move(target), std::move(hom), std::move(right));
  }

  /// Checks h(a) ≤ b ⇔ a ≤ r(b) for all a, b.
  static AdjointPair make(FramePtr source, FramePtr target, ElementMap hom, ElementMap right) {
    const auto& s = *source;
    const auto& t = *target;
    if (hom.size() != s.size() || right.size() != t.size()) throw InvalidAdjointPair("table sizes do not match");
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = 0; b < t.size(); ++b)
        if (t.leq(hom[a], b) != s.leq(a, right[b]))
          throw InvalidAdjointPair("adjunction fails at " + s.label(a) + ", " + t.label(b));
    return AdjointPair(std::move(source), std::move(target), std::move(hom), std::move(right));
  }

  const FramePtr& source() const { return source_; }
  const FramePtr& target() const { return target_; }
  Element hom(Element a) const { return hom_[a]; }
  Element right(Element b) const { return right_[b]; }
  const ElementMap& hom_table() const { return hom_; }
  const ElementMap& right_table() const { return right_; }

 private:
  AdjointPair(FramePtr s, FramePtr t, ElementMap h, ElementMap r)
      : source_(std::move(s)), target_(std::move(t)), hom_(std::move(h)), right_(std::move(r)) {}
  FramePtr source_;
  FramePtr target_;
  ElementMap hom_;
  ElementMap right_;
};

inline AdjointPair identity_pair(const FramePtr& f) {
  ElementMap id(f->size());
  for (Element a = 0; a < id.size(); ++a) id[a] = a;
  return AdjointPair::make(f, f, id, id);
}

/// The surjection L -> S, a ↦ ν_S(a), whose right adjoint is the inclusion.
/// Returns the pair and the frame S it lands in.
inline std::pair<AdjointPair, SubFrame> surjection_onto(const Sublocale& s) {
  SubFrame sub = sublocale_as_frame(s);
  ElementMap hom(s.frame().size());
  for (Element a = 0; a < hom.size(); ++a) hom[a] = static_cast<Element>(sub.from_parent[nucleus_value(s, a)]);
  auto pair = AdjointPair::make(s.frame_ptr(), sub.frame, std::move(hom), sub.to_parent);
  return {std::move(pair), std::move(sub)};
}

/// f[T]: the set image of a sublocale of the target under the localic map.
inline Sublocale image(const AdjointPair& phi, const Sublocale& t) {
  if (t.frame_ptr() != phi.target()) throw MixedFrames();
  ElementSet out(phi.source()->size());
  for (Element b : t.members()) out.insert(phi.right(b));
  return Sublocale::make(phi.source(), std::move(out));
}

/// f₋₁[S]: the join of all T in the target assembly with f[T] ⊆ S.
inline Sublocale preimage(const AdjointPair& phi, const Sublocale& s, const Assembly& target_assembly) {
  if (s.frame_ptr() != phi.source() || target_assembly.base() != phi.target()) throw MixedFrames();
  std::vector<Sublocale> below;
  for (const auto& t : target_assembly.sublocales())
    if (image(phi, t).is_subset_of(s)) below.push_back(t);
  return sublocale_join(phi.target(), below);
}

/// The localic map sends covered primes of the target to covered primes of
/// the source.
inline bool is_D_homomorphism(const AdjointPair& phi) {
  ElementSet source_points = covered_primes(*phi.source());
  for (Element p : covered_primes(*phi.target()))
    if (!source_points.contains(phi.right(p))) return false;
  return true;
}

/// Largest D-sublocale of L contained in `members`: the join of the D-sublocales
/// below it, which is again a D-sublocale.
inline Sublocale d_interior(const Assembly& a, const Family& d_family, const ElementSet& members) {
  std::vector<Sublocale> below;
  for (Element i : d_family)
    if (a[i].members().is_subset_of(members)) below.push_back(a[i]);
  return sublocale_join(a.base(), below);
}

inline Sublocale d_interior(const Assembly& a, const ElementSet& members) {
  return d_interior(a, S_D(a), members);
}

/// The lift h: S_D(L) -> S_D(S), h(T) = T ∧ S computed in S_D(L), of the
/// surjection L -> S, with the checks that make it a lift.
struct Lift {
  SubFrame sub;                              // S as a frame
  Assembly target;                           // S(S)
  Family source_family;                      // S_D(L), indices into the L assembly
  Family target_family;                      // S_D(S), indices into `target`
  std::vector<std::size_t> table;            // L-assembly index -> target index
  bool preserves_meets = true;               // binary meets and top
  bool preserves_finite_joins = true;        // binary joins and bottom
  bool square_commutes = true;               // h(𝔠_L(a)) = 𝔠_S(a) for a ∈ S
  bool surjective = true;

  std::size_t operator()(std::size_t i) const { return table[i]; }
  bool verified() const { return preserves_meets && preserves_finite_joins && square_commutes && surjective; }
};

/// Builds and checks the lift of L -> S. Throws NotLiftable when S is not a
/// D-sublocale, the exact condition under which no lift exists.
inline Lift lift_surjection(const Assembly& assembly, const Sublocale& s) {
  if (s.frame_ptr() != assembly.base()) throw MixedFrames();
  if (!is_D_sublocale(s)) throw NotLiftable("not a D-sublocale, the surjection does not lift: " + s.to_string());
  SubFrame sub = sublocale_as_frame(s);
  Assembly target = enumerate_assembly(sub.frame);
  Lift lift{sub, target, S_D(assembly), S_D(target), std::vector<std::size_t>(assembly.size(), missing_index)};

  auto to_target = [&](const Sublocale& t) {
    ElementSet m(sub.frame->size());
    for (Element e : t.members()) m.insert(static_cast<Element>(sub.from_parent[e]));
    return target.index_of(m);
  };
  for (Element i : lift.source_family) {
    Sublocale meet = d_interior(assembly, lift.source_family, assembly[i].members() & s.members());
    auto j = to_target(meet);
    if (!j) throw NotASublocale("lifted value is not a sublocale of S");
    lift.table[i] = *j;
  }

  // Meets and joins in S_D(L) and S_D(S).
  auto meet_in = [](const Assembly& a, const Family& d, std::size_t i, std::size_t j) {
    return a.require_index(d_interior(a, d, a[i].members() & a[j].members()));
  };
  auto join_in = [](const Assembly& a, std::size_t i, std::size_t j) {
    return a.require_index(sublocale_join(a[i], a[j]));
  };
  Family hit(target.size());
  for (Element i : lift.source_family) {
    hit.insert(static_cast<Element>(lift.table[i]));
    for (Element j : lift.source_family) {
      if (lift.table[meet_in(assembly, lift.source_family, i, j)] !=
          meet_in(target, lift.target_family, lift.table[i], lift.table[j]))
        lift.preserves_meets = false;
      if (lift.table[join_in(assembly, i, j)] != join_in(target, lift.table[i], lift.table[j]))
        lift.preserves_finite_joins = false;
    }
  }
  if (lift.table[assembly.whole_index()] != target.whole_index()) lift.preserves_meets = false;
  if (lift.table[assembly.zero_index()] != target.zero_index()) lift.preserves_finite_joins = false;
  for (Element a : s.members()) {
    auto c_l = assembly.require_index(closed_sublocale(assembly.base(), a));
    auto c_s = target.require_index(closed_sublocale(sub.frame, static_cast<Element>(sub.from_parent[a])));
    if (lift.table[c_l] != c_s) lift.square_commutes = false;
  }
  lift.surjective = hit == lift.target_family;
  return lift;
}

}  // namespace locale_lab
