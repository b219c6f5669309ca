// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support/oracles.hpp"

using namespace locale_lab;

namespace {

/// Collects the first few failures of a criterion.
struct Check {
  bool ok = true;
  std::size_t cases = 0;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond) {
      ok = false;
      if (notes.size() < 5) notes.push_back(what);
    }
  }
};

std::vector<FramePtr> fixtures() {
  return {share(chain_frame(2)), share(chain_frame(3)), share(boolean_square()),
          omega(sierpinski_space()).frame};
}

std::vector<FramePtr> frames_from_posets(std::size_t max_points) {
  std::vector<FramePtr> out;
  for (auto& f : all_frames_up_to(max_points)) out.push_back(share(std::move(f)));
  return out;
}

// 1. Assembly enumeration against the subset filter.
Check assembly_matches_filter() {
  Check c;
  for (const auto& f : frames_from_posets(4)) {
    auto a = enumerate_assembly(f);
    auto expected = oracle::all_sublocales(*f);
    c.expect(a.size() == expected.size(), "size differs on\n" + frame_text(*f));
    std::size_t k = 0;
    for (const auto& m : expected) {
      if (k >= a.size()) break;
      c.expect(a[k].members() == m, "sublocale " + f->format(m) + " differs");
      ++k;
    }
  }
  return c;
}

// 2. Every row of the comparison table agrees.
Check table_rows_agree() {
  Check c;
  std::vector<FramePtr> frames = fixtures();
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) frames.push_back(share(random_frame(rng, 5)));
  for (const auto& f : frames) {
    auto cl = classify(f);
    c.expect(!cl.degraded, "degraded classification");
    for (const auto& r : cl.rows) c.expect(r.agree(), r.key + " disagrees on\n" + frame_text(*f));
    Families fam(enumerate_assembly(f));
    c.expect(fam.sb.is_subset_of(fam.sp), "S_b not inside sp[S(L)]");
    c.expect((fam.sc == fam.sb) == is_subfit(*f), "S_c = S_b does not track subfitness");
  }
  auto three = classify(share(chain_frame(3)));
  c.expect(three.sc_size == std::optional<std::size_t>(3) && three.sb_size == std::optional<std::size_t>(4),
           "3-chain sizes are not |S_c| = 3, |S_b| = 4");
  c.expect(!three.properties.subfit, "3-chain reported subfit");
  return c;
}

// 3. Theorem suites on generated frames, finite degeneracy asserted.
Check theorem_suites(std::size_t count) {
  Check c;
  for (const auto& f : fixtures())
    for (const auto& r : evaluate_theorems(f)) c.expect(r.passed(), format_result(r));
  auto report = verify_random(7, 5, count);
  c.expect(report.frames == count, "not every frame was evaluated");
  for (const auto& fail : report.failures) c.expect(false, format_result(fail.result));
  return c;
}

// 4. Difference identities over pairs and triples, from tabulated operations.
Check difference_laws() {
  Check c;
  auto frames = frames_from_posets(5);
  for (const auto& f : frames) {
    auto a = enumerate_assembly(f);
    if (a.size() > 32) continue;
    auto d = difference_table(a), j = join_table(a), m = meet_table(a);
    const auto n = a.size();
    const auto zero = a.zero_index();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        c.expect(d(s, t) != missing_index, "difference left the assembly");
        c.expect(a.included(d(s, t), s), "S∖T not inside S");
        c.expect((d(s, t) == zero) == a.included(s, t), "S∖T = 0 does not match S ⊆ T");
        if (auto comp = complement_of(a[t]))
          c.expect(a[d(s, t)] == sublocale_meet(a[s], supplement(a[t])), "S∖C differs from S ∩ C#");
        for (std::size_t r = 0; r < n; ++r) {
          c.expect(d(s, m(t, r)) == j(d(s, t), d(s, r)), "S∖(T∩R) differs from (S∖T) ∨ (S∖R)");
          c.expect(d(d(s, t), r) == d(d(s, r), t), "(S∖T)∖R differs from (S∖R)∖T");
        }
      }
  }
  return c;
}

// 5. One-point sublocales, Boolean parts and essential primes.
Check point_lemmas() {
  Check c;
  std::vector<FramePtr> frames;
  for (const auto& f : frames_from_posets(4))
    if (f->size() <= 8) frames.push_back(f);
  for (const auto& f : frames) {
    for (Element x = 0; x < f->size(); ++x) {
      for (Element y = 0; y < f->size(); ++y)
        c.expect(boolean_sublocale(f, f->heyting(x, y)) ==
                     sublocale_meet(open_sublocale(f, x), boolean_sublocale(f, y)),
                 "𝔟(x→y) differs from 𝔬(x) ∩ 𝔟(y)");
      c.expect(essential_primes(*f, x) == pt(boolean_sublocale(f, x)), "essential primes differ from pt(𝔟(a))");
    }
    auto covered = covered_primes(*f);
    for (Element p : primes(*f))
      c.expect(complement_of(boolean_sublocale(f, p)).has_value() == covered.contains(p),
               "𝔟(p) complemented does not match p covered");
  }
  for (const auto& f : frames_from_posets(5)) {
    auto a = enumerate_assembly(f);
    if (a.size() > 64) continue;
    Family points(a.size());
    for (Element p : covered_primes(*f)) points.insert(static_cast<Element>(a.require_index(boolean_sublocale(f, p))));
    c.expect(covered_primes(*a.frame()) == points, "covered primes of S(L)^op are not the 𝔟(p)");
  }
  return c;
}

// 6. Meet closure against covered primes, sp_D as an interior, pt_D of joins.
Check adjunction_battery() {
  Check c;
  for (const auto& f : fixtures()) {
    auto a = enumerate_assembly(f);
    auto r = check_adjunction_M_ptD(a);
    c.expect(r.passed, r.witnesses.empty() ? "adjunction failed" : r.witnesses.front());
    const auto& subs = a.sublocales();
    for (const auto& s : subs) {
      auto k = sp_D(s);
      c.expect(k.is_subset_of(s), "sp_D not deflationary");
      c.expect(sp_D(k) == k, "sp_D not idempotent");
      for (const auto& t : subs) {
        if (s.is_subset_of(t)) c.expect(k.is_subset_of(sp_D(t)), "sp_D not monotone");
        c.expect(sp_D(sublocale_join(s, t)) == sublocale_join(k, sp_D(t)), "sp_D does not preserve joins");
        for (const auto& u : subs)
          c.expect(pt_D(sublocale_join(f, {s, t, u})) == (pt_D(s) | pt_D(t) | pt_D(u)), "pt_D of a join");
      }
    }
    c.expect(sp_D(zero_sublocale(f)).is_zero(), "sp_D does not preserve the empty join");
  }
  return c;
}

// 7. Evens and odds on the infinite chain.
Check chain_remark() {
  Check c;
  auto r = run_remark(chain_evens(), chain_odds(), {16, 32, 64});
  c.expect(r.s_is_d && r.t_is_d, "S or T is not a D-sublocale");
  c.expect(r.meet == make_chain_subset(LevelSet::finite({}), true), "S∩T is not {top, ⊥}");
  c.expect(r.pt_meet.bottom && r.pt_meet.levels.empty(), "pt_D(S∩T) is not {⊥}");
  c.expect(!r.bottom_in_pt_whole, "⊥ reported in pt_D(L)");
  c.expect(!r.meet_is_d, "S∩T reported as a D-sublocale");
  c.expect(r.truncations.size() == 3 && r.truncations_agree(), "truncations disagree");
  return c;
}

// 8. Lifts exist exactly on D-sublocales and behave as frame maps.
Check lifting() {
  Check c;
  std::vector<FramePtr> frames = fixtures();
  for (const auto& f : frames_from_posets(4)) frames.push_back(f);
  for (const auto& f : frames) {
    auto a = enumerate_assembly(f);
    if (a.size() > 32) continue;
    for (const auto& s : a.sublocales()) {
      try {
        auto lift = lift_surjection(a, s);
        c.expect(is_D_sublocale(s), "lift built for a non-D sublocale");
        c.expect(lift.verified(), "lift fails its checks for " + s.to_string());
      } catch (const NotLiftable&) {
        c.expect(!is_D_sublocale(s), "no lift for D-sublocale " + s.to_string());
      }
    }
  }
  auto corpus = chain_corpus(99, 60);
  for (const auto& s : corpus) {
    bool built = true;
    try {
      ChainLift h(s);
      // Meets in S_D are D-interiors of intersections.
      for (const auto& t : corpus)
        for (const auto& u : corpus) {
          if (!chain_is_D_sublocale(t) || !chain_is_D_sublocale(u)) continue;
          auto meet = chain_d_interior(chain_intersect(t, u));
          c.expect(h(meet) == chain_d_interior(chain_intersect(h(t), h(u))), "chain lift does not preserve meets");
        }
      c.expect(h(chain_whole()) == s, "chain lift does not preserve top");
      for (std::size_t n = 0; n < 12; ++n) {
        if (!s.levels.contains(n)) continue;
        auto closed_in_s = make_chain_subset(s.levels & chain_closed(ChainElement::at(n)).levels, false);
        c.expect(h(chain_closed(ChainElement::at(n))) == closed_in_s, "closed square fails on the chain");
      }
    } catch (const NotLiftable&) {
      built = false;
    }
    c.expect(built == chain_is_D_sublocale(s), "chain lift exists off D-sublocales: " + format_chain(s));
  }
  return c;
}

using Criterion = std::function<Check()>;

bool run_safely(const Criterion& fn, std::string* note) {
  try {
    auto c = fn();
    if (!c.ok && note && !c.notes.empty()) *note = c.notes.front();
    return c.ok;
  } catch (const std::exception& e) {
    if (note) *note = std::string("exception: ") + e.what();
    return false;
  }
}

// 9. Each mutant must make some criterion fail.
Check mutants_detected() {
  Check c;
  std::vector<Criterion> suites{[] { return theorem_suites(40); }, difference_laws, point_lemmas,
                                adjunction_battery};
  for (Mutant m : {Mutant::covered_prime_underreport, Mutant::join_without_meet_closure,
                   Mutant::difference_without_decomposition}) {
    ScopedMutant scope(m);
    bool caught = false;
    for (const auto& s : suites) {
      if (!run_safely(s, nullptr)) {
        caught = true;
        break;
      }
    }
    c.expect(caught, "mutant " + std::string(mutant_name(m)) + " went unnoticed");
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    std::string title;
    Criterion run;
    double limit_seconds;  // 0 when there is no time bound
  };
  std::vector<Entry> entries{
      {1, "assembly enumeration matches the subset filter", assembly_matches_filter, 10},
      {2, "comparison table rows agree", table_rows_agree, 120},
      {3, "theorem suites hold on generated frames", [] { return theorem_suites(200); }, 0},
      {4, "difference identities", difference_laws, 0},
      {5, "one-point sublocale lemmas", point_lemmas, 0},
      {6, "adjunction battery", adjunction_battery, 0},
      {7, "evens and odds on the infinite chain", chain_remark, 1},
      {8, "lifts of surjections", lifting, 0},
      {9, "mutants are detected", mutants_detected, 0},
  };
  int failed = 0;
  for (const auto& e : entries) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = run_safely(e.run, &note);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && e.limit_seconds > 0 && secs > e.limit_seconds) {
      ok = false;
      note = "took longer than " + std::to_string(static_cast<int>(e.limit_seconds)) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << e.number << ": " << e.title << " (" << timing << ")\n";
    if (!ok) {
      std::cout << "  " << note << "\n";
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
