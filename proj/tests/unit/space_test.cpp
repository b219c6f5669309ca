#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "support/oracles.hpp"

using namespace locale_lab;

namespace {

const std::vector<FiniteSpace>& spaces_up_to_three() {
  static const auto out = [] {
    std::vector<FiniteSpace> v;
    for (std::size_t n = 0; n <= 3; ++n)
      for (auto& x : all_topologies(n)) v.push_back(std::move(x));
    return v;
  }();
  return out;
}

}  // namespace

TEST(Topologies, LabelledCounts) {
  // Labelled topologies and labelled T0 topologies on 0..4 points.
  const std::vector<std::size_t> all{1, 1, 4, 29, 355};
  const std::vector<std::size_t> t0{1, 1, 3, 19, 219};
  for (std::size_t n = 0; n <= 4; ++n) {
    auto tops = all_topologies(n);
    EXPECT_EQ(tops.size(), all[n]) << n;
    EXPECT_EQ(static_cast<std::size_t>(std::count_if(tops.begin(), tops.end(), is_T0)), t0[n]) << n;
  }
}

TEST(Topologies, MakeRejectsNonClosedFamilies) {
  EXPECT_THROW(FiniteSpace::make(3, {ElementSet(3, {0}), ElementSet(3, {1})}), NotATopology);
  EXPECT_THROW(FiniteSpace::make(3, {ElementSet(2, {0})}), NotATopology);
  auto x = FiniteSpace::generated_by(3, {ElementSet(3, {0}), ElementSet(3, {1})});
  EXPECT_TRUE(x.is_open(ElementSet(3, {0, 1})));
  EXPECT_EQ(x.opens().size(), 5u);
}

TEST(Sierpinski, Properties) {
  auto x = sierpinski_space();
  EXPECT_TRUE(is_T0(x));
  EXPECT_TRUE(is_TD(x));
  EXPECT_TRUE(is_sober(x));
  EXPECT_FALSE(is_discrete(x));
  EXPECT_TRUE(is_discrete(skula(x)));
  EXPECT_TRUE(x.specializes(0, 1));
  EXPECT_FALSE(x.specializes(1, 0));
  auto of = omega(x);
  EXPECT_EQ(of.frame->size(), 3u);
  // Ω is a 3-chain: every pair of opens is comparable.
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) EXPECT_TRUE(of.frame->leq(a, b) || of.frame->leq(b, a));
}

TEST(Separation, IndiscreteIsNotT0) {
  auto x = indiscrete_space(2);
  EXPECT_FALSE(is_T0(x));
  EXPECT_FALSE(is_TD(x));
  EXPECT_FALSE(is_sober(x));
  EXPECT_TRUE(is_discrete(discrete_space(3)));
}

TEST(Separation, FiniteSpacesT0IffTDIffSoberIffScattered) {
  for (const auto& x : spaces_up_to_three()) {
    EXPECT_EQ(is_T0(x), is_TD(x));
    EXPECT_EQ(is_T0(x), is_sober(x));
    EXPECT_EQ(is_T0(x), is_scattered(x));
    EXPECT_TRUE(is_discrete(skula(x)) || !is_T0(x));
  }
}

TEST(Spectrum, ChainIsSierpinski) {
  auto s = spectrum(chain_frame(3));
  EXPECT_TRUE(homeomorphic(s.space, sierpinski_space()));
  EXPECT_EQ(s.point_element, (std::vector<Element>{0, 1}));
}

TEST(Spectrum, SoberSpacesAreRecovered) {
  for (const auto& x : spaces_up_to_three()) {
    auto of = omega(x);
    auto s = spectrum(*of.frame);
    EXPECT_EQ(homeomorphic(s.space, x), is_sober(x));
    EXPECT_TRUE(is_sober(s.space));
    EXPECT_EQ(spectrum_TD(*of.frame).space, s.space);
    EXPECT_TRUE(spectrum_map_injective(*of.frame, primes(*of.frame)));
  }
}

TEST(Spectrum, FrameIsRecoveredFromItsSpectrum) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    auto f = random_frame(rng, 4);
    auto of = omega(spectrum(f).space);
    EXPECT_EQ(of.frame->size(), f.size());
    EXPECT_TRUE(spectrum_map_injective(f, primes(f)));
  }
}

TEST(OmegaPrime, SubspacesAreSublocalesBijectivelyOnT0Spaces) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& x : all_topologies(n)) {
      if (!is_T0(x)) continue;
      auto of = omega(x);
      auto all = enumerate_assembly(of.frame);
      std::set<ElementSet> images;
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        ElementSet a(n);
        for (Element p = 0; p < n; ++p)
          if (m >> p & 1) a.insert(p);
        images.insert(omega_prime(x, of, a).members());
      }
      EXPECT_EQ(images.size(), std::size_t{1} << n);
      EXPECT_EQ(images.size(), all.size());
    }
}

TEST(OmegaPrime, WholeAndEmptySubspace) {
  auto x = sierpinski_space();
  auto of = omega(x);
  EXPECT_TRUE(omega_prime(x, of, ElementSet::full(2)).is_whole());
  EXPECT_TRUE(omega_prime(x, of, ElementSet(2)).is_zero());
}

TEST(Homeomorphism, RelabelledSpaces) {
  auto x = FiniteSpace::make(3, {ElementSet(3, {0}), ElementSet(3, {0, 1})});
  auto y = FiniteSpace::make(3, {ElementSet(3, {2}), ElementSet(3, {1, 2})});
  EXPECT_TRUE(homeomorphic(x, y));
  EXPECT_FALSE(homeomorphic(x, discrete_space(3)));
}

TEST(SpaceText, RoundTripAndErrors) {
  for (const auto& x : all_topologies(3)) {
    std::ostringstream out;
    write_space(out, x);
    EXPECT_EQ(parse_space(out.str()), x);
  }
  EXPECT_THROW(parse_space(""), ParseError);
  EXPECT_THROW(parse_space("open: 0\n"), ParseError);
  EXPECT_THROW(parse_space("points: 2\nopen: 5\n"), ParseError);
  try {
    parse_space("points: 2\nopen: 0\ncolour: 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  const std::string dir = LOCALE_LAB_SAMPLES;
  EXPECT_EQ(load_space(dir + "/sierpinski.space"), sierpinski_space());
  EXPECT_THROW(load_space(dir + "/bad/not_closed.space"), NotATopology);
}
