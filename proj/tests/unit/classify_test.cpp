#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace locale_lab;

namespace {

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(Classify, ThreeChain) {
  auto c = classify(share(chain_frame(3)));
  ASSERT_FALSE(c.degraded);
  EXPECT_EQ(c.frame_size, 3u);
  EXPECT_EQ(c.assembly_size, 4u);
  EXPECT_EQ(c.sb_size, 4u);
  EXPECT_EQ(c.sc_size, 3u);
  EXPECT_EQ(c.sd_size, 4u);
  EXPECT_EQ(c.sp_size, 4u);
  const auto& p = c.properties;
  EXPECT_TRUE(p.spatial);
  EXPECT_FALSE(p.subfit);
  EXPECT_TRUE(p.scattered);
  EXPECT_TRUE(p.totally_spatial);
  EXPECT_TRUE(p.primes_covered);
  EXPECT_FALSE(p.primes_maximal);
  EXPECT_TRUE(p.td_spatial);
  EXPECT_TRUE(p.strongly_td_spatial);
  EXPECT_EQ(p.d_scattered, std::optional<bool>(true));
  EXPECT_EQ(c.rows.size(), 15u);
  EXPECT_TRUE(c.all_agree());
}

TEST(Classify, BooleanSquareIsSubfit) {
  auto c = classify(share(boolean_square()));
  EXPECT_TRUE(c.properties.subfit);
  EXPECT_TRUE(c.properties.primes_maximal);
  EXPECT_EQ(c.sc_size, 4u);
  EXPECT_TRUE(c.all_agree());
}

TEST(Classify, EveryRowAgreesOnRandomFrames) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 150; ++k) {
    auto f = share(random_frame(rng, 5));
    auto c = classify(f);
    for (const auto& r : c.rows) EXPECT_TRUE(r.agree()) << r.key << "\n" << frame_text(*f);
    // Subfit agrees with the order-scan oracle.
    EXPECT_EQ(c.properties.subfit, oracle::is_subfit(*f));
  }
}

TEST(Classify, DegradesPastTheCap) {
  auto c = classify(share(boolean_square()), 2);
  ASSERT_TRUE(c.degraded.has_value());
  EXPECT_TRUE(c.rows.empty());
  EXPECT_FALSE(c.assembly_size.has_value());
  EXPECT_FALSE(c.properties.d_scattered.has_value());
  EXPECT_TRUE(c.properties.subfit);
  auto kv = format_keyvalue(c);
  EXPECT_TRUE(has_line(kv, "degraded=true"));
  EXPECT_TRUE(has_line(kv, "size.assembly=unknown"));
  EXPECT_TRUE(has_line(kv, "property.d_scattered=unknown"));
  EXPECT_NE(format_text(c).find("table skipped: "), std::string::npos);
}

TEST(Classify, KeyValueOutput) {
  auto kv = format_keyvalue(classify(share(chain_frame(3))));
  EXPECT_TRUE(has_line(kv, "size.frame=3"));
  EXPECT_TRUE(has_line(kv, "size.sc=3"));
  EXPECT_TRUE(has_line(kv, "property.subfit=false"));
  EXPECT_TRUE(has_line(kv, "row.sc_eq_sb.relation=false"));
  EXPECT_TRUE(has_line(kv, "row.sc_eq_sb.property=false"));
  EXPECT_TRUE(has_line(kv, "row.sc_eq_sb.verdict=AGREE"));
  EXPECT_EQ(kv.find("DISAGREE"), std::string::npos);
}

TEST(Classify, TextOutput) {
  auto text = format_text(classify(share(chain_frame(3))));
  EXPECT_TRUE(has_line(text, "|L| = 3"));
  EXPECT_TRUE(has_line(text, "subfit: no"));
  EXPECT_TRUE(has_line(text, "AGREE    S_c = S_b [fails]  <->  subfit [no]"));
}

TEST(Theorems, ShapeSemantics) {
  TheoremResult eq{"x", Shape::equivalent, false, {{"a", false}, {"b", false}}, {}};
  EXPECT_TRUE(eq.passed());
  eq.must_hold = true;
  EXPECT_FALSE(eq.passed());
  TheoremResult imp{"y", Shape::implies, false, {{"a", false}, {"b", false}}, {}};
  EXPECT_TRUE(imp.passed());
  imp.conditions[0].second = true;
  EXPECT_FALSE(imp.passed());
  TheoremResult holds{"z", Shape::holds, false, {{"a", true}, {"b", true}}, {}};
  EXPECT_TRUE(holds.passed());
  holds.error = "boom";
  EXPECT_FALSE(holds.passed());
  EXPECT_EQ(format_result(holds).substr(0, 7), "FAIL z\n");
}

TEST(Theorems, AllSuitesPassOnRandomFrames) {
  auto report = verify_random(2, 5, 120);
  EXPECT_EQ(report.frames, 120u);
  EXPECT_EQ(report.suites, 120u * 13u);
  for (const auto& f : report.failures) ADD_FAILURE() << format_result(f.result) << frame_text(*f.frame);
}

TEST(Theorems, SuitesAreNamedAndMarked) {
  auto results = evaluate_theorems(share(chain_frame(4)));
  ASSERT_EQ(results.size(), 13u);
  std::set<std::string> must;
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed()) << format_result(r);
    EXPECT_FALSE(r.conditions.empty()) << r.name;
    if (r.must_hold) must.insert(r.name);
  }
  EXPECT_EQ(must, (std::set<std::string>{"primes-covered", "all-sublocales-td-spatial",
                                         "all-sublocales-strongly-td-spatial"}));
}

TEST(Theorems, EachMutantIsCaught) {
  for (Mutant m : {Mutant::covered_prime_underreport, Mutant::join_without_meet_closure,
                   Mutant::difference_without_decomposition}) {
    ScopedMutant scope(m);
    EXPECT_FALSE(verify_random(1, 4, 30).passed()) << mutant_name(m);
  }
  EXPECT_TRUE(verify_random(1, 4, 30).passed());
}

TEST(Theorems, UnderreportedPrimesBreakMustHoldSuites) {
  ScopedMutant scope(Mutant::covered_prime_underreport);
  auto results = evaluate_theorems(share(boolean_square()));
  for (const auto& r : results)
    if (r.name == "primes-covered") EXPECT_FALSE(r.passed());
}

TEST(Mutants, NamesRoundTrip) {
  for (Mutant m : {Mutant::none, Mutant::covered_prime_underreport, Mutant::join_without_meet_closure,
                   Mutant::difference_without_decomposition})
    EXPECT_EQ(parse_mutant(mutant_name(m)), m);
  EXPECT_FALSE(parse_mutant("nonsense").has_value());
  {
    ScopedMutant outer(Mutant::join_without_meet_closure);
    {
      ScopedMutant inner(Mutant::none);
      EXPECT_TRUE(mutant_active(Mutant::none));
    }
    EXPECT_TRUE(mutant_active(Mutant::join_without_meet_closure));
  }
  EXPECT_TRUE(mutant_active(Mutant::none));
}
