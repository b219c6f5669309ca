#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "frame_io.hpp"
#include "sublocale.hpp"

namespace locale_lab {

/// A finite topological space on points 0..n-1. The empty set and the whole
/// set are always open, whether or not they were listed.
class FiniteSpace {
 public:
  /// Throws NotATopology unless the family is closed under binary unions and
  /// intersections.
  static FiniteSpace make(std::size_t n, std::vector<ElementSet> opens) {
    for (const auto& u : opens)
      if (u.universe() != n) throw NotATopology("open set has the wrong universe");
    opens.emplace_back(n);
    opens.push_back(ElementSet::full(n));
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    FiniteSpace x(n, std::move(opens));
    for (const auto& u : x.opens_)
      for (const auto& v : x.opens_) {
        if (!x.is_open(u | v)) throw NotATopology("union of " + u.to_string() + " and " + v.to_string() + " is not open");
        if (!x.is_open(u & v))
          throw NotATopology("intersection of " + u.to_string() + " and " + v.to_string() + " is not open");
      }
    return x;
  }

  /// The coarsest topology containing `subbasis`.
  static FiniteSpace generated_by(std::size_t n, std::vector<ElementSet> subbasis) {
    subbasis.emplace_back(n);
    subbasis.push_back(ElementSet::full(n));
    bool grew = true;
    while (grew) {
      grew = false;
      std::sort(subbasis.begin(), subbasis.end());
      subbasis.erase(std::unique(subbasis.begin(), subbasis.end()), subbasis.end());
      const auto current = subbasis;
      for (const auto& u : current)
        for (const auto& v : current)
          for (const auto& w : {u | v, u & v})
            if (!std::binary_search(current.begin(), current.end(), w)) {
              subbasis.push_back(w);
              grew = true;
            }
    }
    return make(n, std::move(subbasis));
  }

  std::size_t points() const { return n_; }
  /// Open sets in lexicographic order.
  const std::vector<ElementSet>& opens() const { return opens_; }
  bool is_open(const ElementSet& u) const { return std::binary_search(opens_.begin(), opens_.end(), u); }

  /// Smallest open containing x.
  ElementSet neighbourhood(Element x) const {
    ElementSet out = ElementSet::full(n_);
    for (const auto& u : opens_)
      if (u.contains(x)) out &= u;
    return out;
  }
  /// Closure of {x}: points every open neighbourhood of which contains x.
  ElementSet point_closure(Element x) const {
    ElementSet out(n_);
    for (Element y = 0; y < n_; ++y)
      if (neighbourhood(y).contains(x)) out.insert(y);
    return out;
  }
  /// Specialization preorder x ≤ y iff x ∈ cl{y}.
  bool specializes(Element x, Element y) const { return point_closure(y).contains(x); }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) { return a.n_ == b.n_ && a.opens_ == b.opens_; }

 private:
  FiniteSpace(std::size_t n, std::vector<ElementSet> opens) : n_(n), opens_(std::move(opens)) {}
  std::size_t n_;
  std::vector<ElementSet> opens_;
};

inline FiniteSpace discrete_space(std::size_t n) {
  std::vector<ElementSet> singletons;
  for (Element x = 0; x < n; ++x) singletons.push_back(ElementSet(n, {x}));
  return FiniteSpace::generated_by(n, singletons);
}
inline FiniteSpace indiscrete_space(std::size_t n) { return FiniteSpace::make(n, {}); }
/// Two points, {1} open; point 0 is closed.
inline FiniteSpace sierpinski_space() { return FiniteSpace::make(2, {ElementSet(2, {1})}); }

/// Ω(X): element k of `frame` is the open set opens()[k].
struct OpenFrame {
  FramePtr frame;
  std::vector<ElementSet> open_of;

  Element element_of(const ElementSet& u) const {
    auto it = std::lower_bound(open_of.begin(), open_of.end(), u);
    if (it == open_of.end() || !(*it == u)) throw std::invalid_argument("not an open set");
    return static_cast<Element>(it - open_of.begin());
  }
};

inline OpenFrame omega(const FiniteSpace& x) {
  const auto& opens = x.opens();
  auto order = OrderRelation::from_predicate(opens.size(), [&](Element i, Element j) {
    return opens[i].is_subset_of(opens[j]);
  });
  std::vector<std::string> labels;
  for (const auto& u : opens) labels.push_back(u.to_string());
  return {share(make_frame(order, std::move(labels))), opens};
}

/// A spectrum: point i of `space` is the prime `point_element[i]`.
struct Spectrum {
  FiniteSpace space;
  std::vector<Element> point_element;
};

namespace detail {

inline Spectrum spectrum_on(const FiniteFrame& f, const ElementSet& pts) {
  std::vector<Element> points = pts.to_vector();
  std::vector<ElementSet> opens;
  for (Element a = 0; a < f.size(); ++a) {
    ElementSet u(points.size());
    for (Element i = 0; i < points.size(); ++i)
      if (!f.leq(a, points[i])) u.insert(i);
    opens.push_back(std::move(u));
  }
  return {FiniteSpace::make(points.size(), std::move(opens)), std::move(points)};
}

}  // namespace detail

/// Σ(L): the primes with opens Σ_a = {p : a ≰ p}.
inline Spectrum spectrum(const FiniteFrame& f) { return detail::spectrum_on(f, primes(f)); }
/// Σ′(L): the covered primes with opens Σ′_a.
inline Spectrum spectrum_TD(const FiniteFrame& f) { return detail::spectrum_on(f, covered_primes(f)); }

/// Whether a ↦ Σ_a (restricted to `pts`) is injective, i.e. the counit onto
/// the opens of that spectrum is an isomorphism.
inline bool spectrum_map_injective(const FiniteFrame& f, const ElementSet& pts) {
  for (Element a = 0; a < f.size(); ++a)
    for (Element b = a + 1; b < f.size(); ++b) {
      bool same = true;
      for (Element p : pts)
        if (f.leq(a, p) != f.leq(b, p)) {
          same = false;
          break;
        }
      if (same) return false;
    }
  return true;
}

inline bool is_T0(const FiniteSpace& x) {
  for (Element a = 0; a < x.points(); ++a)
    for (Element b = a + 1; b < x.points(); ++b)
      if (x.neighbourhood(a).contains(b) && x.neighbourhood(b).contains(a)) return false;
  return true;
}

/// Every point x has an open neighbourhood U with U ∖ {x} open.
inline bool is_TD(const FiniteSpace& x) {
  for (Element p = 0; p < x.points(); ++p) {
    bool found = false;
    for (const auto& u : x.opens())
      if (u.contains(p) && x.is_open(ElementSet(u).erase(p))) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

/// Every irreducible closed set is the closure of exactly one point. On a
/// finite space the irreducible closed sets are the complements of the
/// meet-irreducible proper opens.
inline bool is_sober(const FiniteSpace& x) {
  const auto& opens = x.opens();
  const auto full = ElementSet::full(x.points());
  for (const auto& p : opens) {
    if (p == full) continue;
    bool irreducible = true;
    for (const auto& u : opens) {
      for (const auto& v : opens)
        if (!(u == p) && !(v == p) && (u & v) == p && p.is_subset_of(u) && p.is_subset_of(v)) {
          irreducible = false;
          break;
        }
      if (!irreducible) break;
    }
    if (!irreducible) continue;
    ElementSet closed = full - p;
    std::size_t generic = 0;
    for (Element y = 0; y < x.points(); ++y)
      if (x.point_closure(y) == closed) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

inline bool is_discrete(const FiniteSpace& x) {
  for (Element p = 0; p < x.points(); ++p)
    if (!x.is_open(ElementSet(x.points(), {p}))) return false;
  return true;
}

/// Topology generated by the opens and their complements.
inline FiniteSpace skula(const FiniteSpace& x) {
  std::vector<ElementSet> sub;
  for (const auto& u : x.opens()) {
    sub.push_back(u);
    sub.push_back(u.complement());
  }
  return FiniteSpace::generated_by(x.points(), sub);
}

/// Every nonempty subset has a point isolated in it.
inline bool is_scattered(const FiniteSpace& x) {
  const auto n = x.points();
  if (n > 20) throw std::invalid_argument("scatteredness scan limited to 20 points");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool isolated = false;
    for (Element p = 0; p < n && !isolated; ++p) {
      if (!(mask >> p & 1)) continue;
      ElementSet nb = x.neighbourhood(p);
      isolated = true;
      for (Element q : nb)
        if (q != p && (mask >> q & 1)) isolated = false;
    }
    if (!isolated) return false;
  }
  return true;
}

/// Ω′(A): the sublocale of Ω(X) induced by the subspace A, the image of
/// U ↦ largest open V with V ∩ A = U ∩ A.
inline Sublocale omega_prime(const FiniteSpace& x, const OpenFrame& of, const ElementSet& a) {
  ElementSet members(of.frame->size());
  for (const auto& u : x.opens()) {
    ElementSet largest(x.points());
    for (const auto& v : x.opens())
      if ((v & a) == (u & a)) largest |= v;
    members.insert(of.element_of(largest));
  }
  return Sublocale::make(of.frame, std::move(members));
}

/// Searches all bijections; limited to 8 points.
inline bool homeomorphic(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.points() != y.points() || x.opens().size() != y.opens().size()) return false;
  const auto n = x.points();
  if (n > 8) throw std::invalid_argument("homeomorphism search limited to 8 points");
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& u : x.opens()) {
      ElementSet image(n);
      for (Element p : u) image.insert(perm[p]);
      if (!y.is_open(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every topology on n points (n <= 4), as labelled spaces.
inline std::vector<FiniteSpace> all_topologies(std::size_t n) {
  if (n > 4) throw std::invalid_argument("topology enumeration limited to 4 points");
  std::vector<ElementSet> proper;
  for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) {
    ElementSet s(n);
    for (Element p = 0; p < n; ++p)
      if (m >> p & 1) s.insert(p);
    proper.push_back(s);
  }
  std::vector<FiniteSpace> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << proper.size()); ++fam) {
    std::vector<ElementSet> opens;
    for (std::size_t k = 0; k < proper.size(); ++k)
      if (fam >> k & 1) opens.push_back(proper[k]);
    try {
      out.push_back(FiniteSpace::make(n, std::move(opens)));
    } catch (const NotATopology&) {
    }
  }
  return out;
}

/// Space text format: `points: n` first, then `open: i j k` lines.
inline FiniteSpace read_space(std::istream& in) {
  auto lines = text::key_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'points:' line");
  const auto& head = lines.front();
  if (head.key != "points") throw ParseError(head.line, "first line must be 'points: n'");
  std::size_t n = 0;
  if (!text::parse_number(text::trim(head.rest), n)) throw ParseError(head.line, "point count is not a number");
  std::vector<ElementSet> opens;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.key != "open") throw ParseError(l.line, "unknown key '" + l.key + "'");
    ElementSet u(n);
    for (auto w : text::words(l.rest)) u.insert(static_cast<Element>(text::element_id(l, w, n)));
    opens.push_back(std::move(u));
  }
  return FiniteSpace::make(n, std::move(opens));
}

inline FiniteSpace parse_space(const std::string& content) {
  std::istringstream in(content);
  return read_space(in);
}

inline FiniteSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_space(in);
}

/// Writes every open except ∅ and the whole set.
inline void write_space(std::ostream& out, const FiniteSpace& x) {
  out << "points: " << x.points() << '\n';
  for (const auto& u : x.opens()) {
    if (u.empty() || u.size() == x.points()) continue;
    out << "open:";
    for (Element p : u) out << ' ' << p;
    out << '\n';
  }
}

}  // namespace locale_lab
