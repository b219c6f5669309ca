#pragma once

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"

namespace locale_lab {

/// How the conditions of a suite relate.
enum class Shape {
  equivalent,  // all conditions take the same value
  implies,     // condition 0 implies condition 1
  holds,       // every condition is true
};

struct TheoremResult {
  std::string name;
  Shape shape = Shape::equivalent;
  bool must_hold = false;  // equivalences whose conditions are all true on finite frames
  std::vector<std::pair<std::string, bool>> conditions;
  std::string error;  // set when evaluating a condition threw

  bool passed() const {
    if (!error.empty()) return false;
    if (conditions.empty()) return true;
    switch (shape) {
      case Shape::implies:
        return !conditions[0].second || conditions[1].second;
      case Shape::holds:
        for (const auto& c : conditions)
          if (!c.second) return false;
        return true;
      case Shape::equivalent:
        break;
    }
    for (const auto& c : conditions)
      if (c.second != conditions[0].second || (must_hold && !c.second)) return false;
    return true;
  }
};

namespace detail {

/// Every element of S is the meet of the given points of S above it.
inline bool meets_of(const Sublocale& s, const ElementSet& points) {
  const auto& f = s.frame();
  for (Element x : s.members())
    if (f.meet_of(points & f.up_set(x)) != x) return false;
  return true;
}

/// S as a frame is T_D-spatial: every member is a meet of its own covered primes.
inline bool sub_td_spatial(const Sublocale& s) { return meets_of(s, pt_D(s)); }

/// S as a frame is spatial with all of its primes covered.
inline bool sub_strongly_td_spatial(const Sublocale& s) {
  ElementSet p = pt(s);
  return p == pt_D(s) && meets_of(s, p);
}

/// Y ↦ 𝔐(Y) is a bijection from the subsets of `points` onto `fam`.
inline bool meet_closure_bijects(const Assembly& a, const ElementSet& points, const Family& fam) {
  Family hit(a.size());
  bool injective = true;
  for_each_subset(points, [&](const ElementSet& y) {
    auto i = static_cast<Element>(a.require_index(meet_closure_M(a.base(), y)));
    if (hit.contains(i)) injective = false;
    hit.insert(i);
  });
  return injective && hit == fam;
}

inline bool family_spatial_boolean(const Assembly& a, const Family& fam) {
  FiniteFrame ff = family_frame(a, fam);
  return is_spatial(ff) && is_boolean(ff);
}

inline bool closed_under_intersections(const Assembly& a, const Family& fam) {
  if (!fam.contains(static_cast<Element>(a.whole_index()))) return false;
  for (Element i : fam)
    for (Element j : fam)
      if (!fam.contains(static_cast<Element>(a.require_index(sublocale_meet(a[i], a[j]))))) return false;
  return true;
}

inline bool all_of_family(const Assembly& a, const Family& fam, const std::function<bool(const Sublocale&)>& pred) {
  for (Element i : fam)
    if (!pred(a[i])) return false;
  return true;
}

inline std::size_t power_of_two(std::size_t k) { return std::size_t{1} << k; }

}  // namespace detail

/// Evaluates every condition of every suite on one frame.
inline std::vector<TheoremResult> evaluate_theorems(const FramePtr& frame, std::size_t cap = cap_from_environment()) {
  const auto& f = *frame;
  std::vector<TheoremResult> out;
  Assembly a = enumerate_assembly(frame, cap);
  Families fam(a);
  const ElementSet prime_set = primes(f);
  const ElementSet covered = covered_primes(f);
  const bool spatial = is_spatial(f);
  const bool primes_are_covered = covered == prime_set;
  const bool totally_spatial = fam.sp == fam.all;
  const bool d_scattered_by_points = pointless_sublocales_smooth(a, fam);

  auto run = [&](std::string name, Shape shape, bool must_hold,
                 std::vector<std::pair<std::string, std::function<bool()>>> conds) {
    TheoremResult r{std::move(name), shape, must_hold, {}, {}};
    for (auto& [label, fn] : conds) {
      try {
        r.conditions.emplace_back(label, fn());
      } catch (const std::exception& e) {
        r.error = label + ": " + e.what();
        break;
      }
    }
    out.push_back(std::move(r));
  };

  run("td-spatial", Shape::equivalent, false,
      {{"L is T_D-spatial", [&] { return is_td_spatial(f); }},
       {"every element is a meet of covered primes", [&] { return every_element_meet_of_covered_primes(f); }},
       {"S_b is spatial", [&] { return is_spatial(family_frame(a, fam.sb)); }},
       {"S_b ≅ P(pt_D(L))", [&] {
          return is_boolean(family_frame(a, fam.sb)) && fam.sb.size() == detail::power_of_two(covered.size());
        }}});

  run("strongly-td-spatial", Shape::equivalent, false,
      {{"spatial with all primes covered", [&] { return spatial && primes_are_covered; }},
       {"meets of covered primes, all primes covered",
        [&] { return every_element_meet_of_covered_primes(f) && primes_are_covered; }},
       {"spatial and pt(L) is T_D", [&] { return spatial && is_TD(spectrum(f).space); }},
       {"L ≅ Ω(X) for a sober T_D space X",
        [&] {
          // Any sober X with Ω(X) ≅ L is homeomorphic to pt(L).
          auto x = spectrum(f).space;
          return is_sober(x) && is_TD(x) && spectrum_map_injective(f, prime_set);
        }},
       {"spatial and sp[S(L)] ≅ P(pt(L))",
        [&] { return spatial && detail::meet_closure_bijects(a, prime_set, fam.sp); }},
       {"S_b = sp[S(L)]", [&] { return fam.sb == fam.sp; }}});

  run("primes-covered", Shape::equivalent, true,
      {{"all primes are covered", [&] { return primes_are_covered; }},
       {"sp[S(L)] ⊆ S_b", [&] { return fam.sp.is_subset_of(fam.sb); }},
       {"S_D = S(L)", [&] { return fam.sd == fam.all; }},
       {"S_D closed under intersections", [&] { return detail::closed_under_intersections(a, fam.sd); }},
       {"sp[S(L)] ⊆ S_D", [&] { return fam.sp.is_subset_of(fam.sd); }}});

  run("totally-spatial", Shape::equivalent, false,
      {{"every sublocale is spatial", [&] { return totally_spatial; }},
       {"every element is the meet of its essential primes", [&] { return meets_of_essential_primes(f); }},
       {"S_D ⊆ sp[S(L)]", [&] { return fam.sd.is_subset_of(fam.sp); }}});

  run("d-scattered-spatialization", Shape::implies, false,
      {{"S_D ⊆ S_b", [&] { return fam.sd.is_subset_of(fam.sb); }},
       {"sp(L) is totally spatial", [&] {
          Sublocale spl = spatialization(whole(frame));
          SubFrame sub = sublocale_as_frame(spl);
          Assembly inner = enumerate_assembly(sub.frame, cap);
          return sp_S(inner) == inner.all();
        }}});

  // Used without proof inside the previous suite; checked, not relied upon.
  run("booleanization-below-spatialization", Shape::holds, false,
      {{"S_b(sp(L)) contains every S ∈ S_b(L) below sp(L)", [&] {
          Sublocale spl = spatialization(whole(frame));
          SubFrame sub = sublocale_as_frame(spl);
          Assembly inner = enumerate_assembly(sub.frame, cap);
          Family inner_sb = S_b(inner);
          for (Element i : fam.sb) {
            if (!a[i].is_subset_of(spl)) continue;
            ElementSet m(sub.frame->size());
            for (Element e : a[i].members()) m.insert(static_cast<Element>(sub.from_parent[e]));
            auto j = inner.index_of(m);
            if (!j || !inner_sb.contains(static_cast<Element>(*j))) return false;
          }
          return true;
        }}});

  run("d-scattered", Shape::equivalent, false,
      {{"S_D ⊆ S_b", [&] { return fam.sd.is_subset_of(fam.sb); }},
       {"sublocales without covered primes are smooth", [&] { return d_scattered_by_points; }}});

  run("all-sublocales-td-spatial", Shape::equivalent, true,
      {{"all sublocales are T_D-spatial", [&] { return detail::all_of_family(a, fam.all, detail::sub_td_spatial); }},
       {"all D-sublocales are T_D-spatial", [&] { return detail::all_of_family(a, fam.sd, detail::sub_td_spatial); }},
       {"𝔐∘pt_D is the identity on S_D",
        [&] {
          return detail::all_of_family(a, fam.sd, [&](const Sublocale& s) { return meet_closure_M(frame, pt_D(s)) == s; });
        }},
       {"S_D ≅ P(pt_D(L))", [&] { return detail::meet_closure_bijects(a, covered, fam.sd); }},
       {"S_D is spatial and Boolean", [&] { return detail::family_spatial_boolean(a, fam.sd); }},
       {"S_D = S_b and L is T_D-spatial", [&] { return fam.sd == fam.sb && is_td_spatial(f); }},
       {"every nonzero sublocale has a covered prime of its own", [&] {
          return detail::all_of_family(a, fam.all, [](const Sublocale& s) { return s.is_zero() || !pt_D(s).empty(); });
        }}});

  run("all-sublocales-strongly-td-spatial", Shape::equivalent, true,
      {{"totally spatial, all primes covered", [&] { return totally_spatial && primes_are_covered; }},
       {"totally spatial and strongly T_D-spatial", [&] { return totally_spatial && spatial && primes_are_covered; }},
       {"all sublocales strongly T_D-spatial",
        [&] { return detail::all_of_family(a, fam.all, detail::sub_strongly_td_spatial); }},
       {"S(L) ≅ P(pt_D(L))", [&] { return detail::meet_closure_bijects(a, covered, fam.all); }},
       {"S(L) is spatial and Boolean", [&] { return detail::family_spatial_boolean(a, fam.all); }},
       {"every element is the meet of its covered essential primes",
        [&] {
          for (Element x = 0; x < f.size(); ++x)
            if (f.meet_of(essential_primes(f, x) & covered) != x) return false;
          return true;
        }},
       {"every element is the meet of its covered absolutely essential primes",
        [&] {
          for (Element x = 0; x < f.size(); ++x)
            if (f.meet_of(absolutely_essential_primes(f, x) & covered) != x) return false;
          return true;
        }},
       {"spatial, every element below top has a covered absolutely essential prime",
        [&] {
          if (!spatial) return false;
          for (Element x = 0; x < f.size(); ++x)
            if (x != f.top() && (absolutely_essential_primes(f, x) & covered).empty()) return false;
          return true;
        }},
       {"every nonzero sublocale contains a covered prime of L", [&] {
          return detail::all_of_family(a, fam.all,
                                       [](const Sublocale& s) { return s.is_zero() || !pt_D_extrinsic(s).empty(); });
        }}});

  run("spatial-iff-closed-joins-spatial", Shape::equivalent, false,
      {{"spatial", [&] { return spatial; }}, {"S_c ⊆ sp[S(L)]", [&] { return fam.sc.is_subset_of(fam.sp); }}});

  run("primes-maximal", Shape::equivalent, false,
      {{"all primes are maximal", [&] { return maximal_primes_only(f); }},
       {"sp[S(L)] ⊆ S_c", [&] { return fam.sp.is_subset_of(fam.sc); }}});

  run("spatial-iff-booleanization-spatial", Shape::equivalent, false,
      {{"spatial", [&] { return spatial; }}, {"S_b ⊆ sp[S(L)]", [&] { return fam.sb.is_subset_of(fam.sp); }}});

  run("d-sublocales-closed-joins", Shape::equivalent, false,
      {{"S_D ⊆ S_c", [&] { return fam.sd.is_subset_of(fam.sc); }},
       {"subfit and D-scattered", [&] { return is_subfit(f) && d_scattered_by_points; }}});

  return out;
}

/// A failing suite on a generated frame.
struct VerifyFailure {
  std::size_t index;  // position in the batch
  FramePtr frame;
  TheoremResult result;
};

struct VerifyReport {
  std::size_t frames = 0;
  std::size_t suites = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Runs every suite on `count` random frames drawn with `seed` and `bound`.
inline VerifyReport verify_random(std::uint64_t seed, std::size_t bound, std::size_t count,
                                  std::size_t cap = cap_from_environment()) {
  VerifyReport report;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    FramePtr frame = share(random_frame(rng, bound));
    ++report.frames;
    std::vector<TheoremResult> results;
    try {
      results = evaluate_theorems(frame, cap);
    } catch (const CapExceeded&) {
      throw;
    } catch (const Error& e) {
      // Enumeration or the shared families broke before any suite could run.
      TheoremResult r{"evaluation", Shape::holds, false, {}, e.what()};
      results.push_back(std::move(r));
    }
    for (auto& r : results) {
      ++report.suites;
      if (!r.passed()) report.failures.push_back({k, frame, std::move(r)});
    }
  }
  return report;
}

inline std::string format_result(const TheoremResult& r) {
  std::string out = (r.passed() ? "PASS " : "FAIL ") + r.name + "\n";
  for (const auto& [label, v] : r.conditions) out += "  " + std::string(v ? "true " : "false") + "  " + label + "\n";
  if (!r.error.empty()) out += "  error: " + r.error + "\n";
  return out;
}

}  // namespace locale_lab
