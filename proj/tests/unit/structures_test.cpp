#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace locale_lab;

namespace {

std::vector<Assembly> random_assemblies(std::uint64_t seed, std::size_t bound, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Assembly> out;
  for (int k = 0; k < count; ++k) out.push_back(enumerate_assembly(share(random_frame(rng, bound))));
  return out;
}

const std::vector<Assembly>& assemblies() {
  static const auto out = random_assemblies(17, 4, 40);
  return out;
}

Family indices_of_points(const Assembly& a) {
  Family out(a.size());
  for (Element p : primes(*a.base()))
    out.insert(static_cast<Element>(a.require_index(boolean_sublocale(a.base(), p))));
  return out;
}

}  // namespace

TEST(Families, ThreeChain) {
  auto a = enumerate_assembly(share(chain_frame(3)));
  EXPECT_EQ(S_b(a).size(), 4u);
  EXPECT_EQ(S_D(a).size(), 4u);
  EXPECT_EQ(sp_S(a).size(), 4u);
  EXPECT_EQ(S_c(a).size(), 3u);  // {0,1} is not a join of closed sublocales
  EXPECT_FALSE(S_c(a).contains(static_cast<Element>(*a.index_of(ElementSet(3, {0, 2})))));
}

TEST(Families, FiniteFramesCollapse) {
  for (const auto& a : assemblies()) {
    EXPECT_EQ(S_b(a), a.all());
    EXPECT_EQ(S_D(a), a.all());
    EXPECT_EQ(sp_S(a), a.all());
    EXPECT_EQ(smooth_family(a), S_b(a));
    EXPECT_EQ(complemented_family(a), a.all());
    EXPECT_EQ(S_c(a) == a.all(), is_subfit(*a.base()));
  }
}

TEST(Points, IntrinsicMatchOracleAndExtrinsic) {
  for (const auto& a : assemblies())
    for (const auto& s : a.sublocales()) {
      const auto& f = s.frame();
      EXPECT_EQ(pt(s), oracle::primes_within(f, s.members()));
      EXPECT_EQ(pt_D(s), oracle::covered_primes_within(f, s.members()));
      EXPECT_EQ(pt(s), pt_extrinsic(s));
      EXPECT_EQ(pt_D(s), pt_D_extrinsic(s));
      EXPECT_TRUE(is_D_sublocale(s));
    }
}

TEST(Points, PtDOfJoinIsUnion) {
  for (const auto& a : assemblies())
    for (const auto& s : a.sublocales())
      for (const auto& t : a.sublocales()) EXPECT_EQ(pt_D(sublocale_join(s, t)), pt_D(s) | pt_D(t));
}

TEST(Points, SublocaleAsFrameAgreesOnPrimes) {
  for (const auto& a : assemblies())
    for (const auto& s : a.sublocales()) {
      auto sub = sublocale_as_frame(s);
      ElementSet mapped(s.frame().size());
      for (Element p : primes(*sub.frame)) mapped.insert(sub.to_parent[p]);
      EXPECT_EQ(mapped, pt(s));
    }
}

TEST(Adjunctions, MeetClosureAgainstPoints) {
  for (const auto& a : assemblies()) {
    auto d = check_adjunction_M_ptD(a);
    EXPECT_TRUE(d.passed) << (d.witnesses.empty() ? "" : d.witnesses.front());
    EXPECT_GT(d.cases, 0u);
    auto c = check_adjunction_M_pt(a);
    EXPECT_TRUE(c.passed) << (c.witnesses.empty() ? "" : c.witnesses.front());
  }
}

TEST(Adjunctions, UnderreportedPrimesLoseTheWholeLocale) {
  auto f = share(boolean_square());
  auto a = enumerate_assembly(f);
  EXPECT_EQ(meet_closure_M(f, covered_primes(*f)), whole(f));
  ScopedMutant m(Mutant::covered_prime_underreport);
  // Both sides of the adjunction see the same shortened point set, so it still holds.
  EXPECT_TRUE(check_adjunction_M_ptD(a).passed);
  EXPECT_NE(meet_closure_M(f, covered_primes(*f)), whole(f));
  EXPECT_FALSE(is_D_sublocale(whole(f)));
}

TEST(SpD, IsAnInterior) {
  for (const auto& a : assemblies())
    for (const auto& s : a.sublocales()) {
      auto k = sp_D(s);
      EXPECT_TRUE(k.is_subset_of(s));
      EXPECT_EQ(sp_D(k), k);
      EXPECT_EQ(k, spatialization(s));
      for (const auto& t : a.sublocales())
        if (s.is_subset_of(t)) EXPECT_TRUE(k.is_subset_of(sp_D(t)));
    }
}

TEST(PrimeSubsets, ValidationAndJoin) {
  auto f = share(chain_frame(3));
  EXPECT_THROW(PrimeSubset::make(f, ElementSet(3, {2}), PrimeSubset::Kind::classical), InvalidPrimeSubset);
  for (const auto& a : assemblies()) {
    detail::for_each_subset(covered_primes(*a.base()), [&](const ElementSet& y) {
      auto ps = PrimeSubset::make(a.base(), y, PrimeSubset::Kind::covered);
      EXPECT_EQ(join_of_point_sublocales(ps), meet_closure_M(ps));
    });
  }
}

TEST(PointSublocales, AreTheCoveredPrimesOfTheAssembly) {
  for (const auto& a : assemblies()) {
    const auto& op = *a.frame();
    EXPECT_EQ(covered_primes(op), indices_of_points(a));
    EXPECT_EQ(primes(op), indices_of_points(a));
  }
}

TEST(PointSublocales, ComplementedExactlyForCoveredPrimes) {
  for (const auto& a : assemblies()) {
    const auto& f = *a.base();
    auto covered = covered_primes(f);
    for (Element p : primes(f)) EXPECT_EQ(complement_of(boolean_sublocale(a.base(), p)).has_value(), covered.contains(p));
  }
}

TEST(EssentialPrimes, ChainExample) {
  auto f = chain_frame(3);
  EXPECT_EQ(essential_primes(f, 0), ElementSet(3, {0}));
  EXPECT_EQ(absolutely_essential_primes(f, 0), ElementSet(3, {0}));
  EXPECT_TRUE(essential_primes(f, 2).empty());
  auto sq = boolean_square();
  EXPECT_EQ(essential_primes(sq, 0), ElementSet(4, {1, 2}));
}

TEST(EssentialPrimes, MeetOfEssentialRecoversElement) {
  for (const auto& a : assemblies()) {
    const auto& f = *a.base();
    for (Element x = 0; x < f.size(); ++x) {
      auto ess = essential_primes(f, x);
      EXPECT_TRUE(absolutely_essential_primes(f, x).is_subset_of(ess));
      EXPECT_EQ(f.meet_of(ess), x);
    }
    for (Element p : primes(f)) {
      EXPECT_TRUE(weakly_covered(f, p));
      EXPECT_TRUE(essential_primes(f, p).contains(p));
    }
  }
}

TEST(EssentialPrimes, AreThePointsOfTheBooleanPart) {
  for (const auto& a : assemblies()) {
    const auto& f = *a.base();
    auto covered = covered_primes(f);
    for (Element x = 0; x < f.size(); ++x) {
      EXPECT_EQ(essential_primes(f, x), pt(boolean_sublocale(a.base(), x)));
      EXPECT_TRUE((essential_primes(f, x) & covered).is_subset_of(absolutely_essential_primes(f, x)));
    }
  }
}
