#pragma once

#include <random>
#include <vector>

#include "frame.hpp"

namespace locale_lab {

/// A self-map of a finite lattice given by its table.
using ElementMap = std::vector<Element>;

/// ι(x) = ⋁{k ∈ K : k ≤ x} for a join-closed K containing bottom.
inline ElementMap interior_from_join_closed(const FiniteFrame& f, const ElementSet& k) {
  ElementMap out(f.size());
  for (Element x = 0; x < f.size(); ++x) out[x] = f.join_of(k & f.down_set(x));
  return out;
}

/// A random interior operator: the join closure of a random subset.
inline ElementMap random_interior(const FiniteFrame& f, std::mt19937_64& rng) {
  ElementSet k(f.size(), {f.bottom()});
  for (Element x = 0; x < f.size(); ++x)
    if (rng() & 1) k.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x : k.to_vector())
      for (Element y : k.to_vector())
        if (!k.contains(f.join(x, y))) {
          k.insert(f.join(x, y));
          grew = true;
        }
  }
  return interior_from_join_closed(f, k);
}

struct InteriorReport {
  bool is_interior = true;             // deflationary, monotone, idempotent
  bool joins_as_in_host = true;        // image closed under host joins, incl. bottom
  bool meets_by_formula = true;        // ι(ι(x)∧ι(y)) is the meet in the image
  bool surjection_preserves_meets = true;
  bool preserves_finite_joins = true;  // ι itself
  bool surjection_preserves_finite_joins = true;

  bool all_lemmas_hold() const {
    return is_interior && joins_as_in_host && meets_by_formula && surjection_preserves_meets &&
           (!preserves_finite_joins || surjection_preserves_finite_joins);
  }
};

/// Checks the two interior-operator lemmas on a finite lattice: the image is
/// a lattice with host joins and meets ι(⋀ι(xᵢ)), the corestriction preserves
/// meets, and it preserves finite joins whenever ι does.
inline InteriorReport check_interior(const FiniteFrame& f, const ElementMap& iota) {
  InteriorReport r;
  const auto n = f.size();
  ElementSet image(n);
  for (Element x = 0; x < n; ++x) {
    image.insert(iota[x]);
    if (!f.leq(iota[x], x) || iota[iota[x]] != iota[x]) r.is_interior = false;
    for (Element y = 0; y < n; ++y)
      if (f.leq(x, y) && !f.leq(iota[x], iota[y])) r.is_interior = false;
  }
  if (!r.is_interior) return r;

  if (!image.contains(f.bottom())) r.joins_as_in_host = false;
  for (Element u : image)
    for (Element v : image) {
      if (!image.contains(f.join(u, v))) r.joins_as_in_host = false;
      // Meet in the image: the greatest image element below both.
      Element m = f.join_of(image & f.down_set(u) & f.down_set(v));
      if (!image.contains(m) || iota[f.meet(u, v)] != m) r.meets_by_formula = false;
    }
  if (iota[f.top()] != f.join_of(image)) r.surjection_preserves_meets = false;
  if (iota[f.bottom()] != f.bottom()) r.preserves_finite_joins = false;
  if (iota[f.bottom()] != f.meet_of(image)) r.surjection_preserves_finite_joins = false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (iota[f.meet(x, y)] != iota[f.meet(iota[x], iota[y])]) r.surjection_preserves_meets = false;
      if (iota[f.join(x, y)] != f.join(iota[x], iota[y])) r.preserves_finite_joins = false;
      // Least image element above both, found by search rather than the formula.
      Element image_join = f.meet_of(image & f.up_set(iota[x]) & f.up_set(iota[y]));
      if (iota[f.join(x, y)] != image_join) r.surjection_preserves_finite_joins = false;
    }
  return r;
}

}  // namespace locale_lab
