#include <gtest/gtest.h>

#include "locale_lab/locale_lab.hpp"

using namespace locale_lab;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_frame(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

}  // namespace

TEST(FrameText, ParsesCoversLabelsAndComments) {
  auto f = parse_frame("# chain\nelements: 3\ncover: 0 1   # lower first\ncover: 1 2\nlabel: 1 a\n\n");
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.top(), 2u);
  EXPECT_EQ(f.label(1), "a");
  EXPECT_EQ(f.label(2), "2");
  EXPECT_EQ(f.find_label("a"), std::optional<Element>(1));
}

TEST(FrameText, RoundTrip) {
  for (const auto& f : {chain_frame(4), boolean_square(), with_new_top(boolean_frame(2)), boolean_frame(3)}) {
    auto g = parse_frame(frame_text(f));
    ASSERT_EQ(g.size(), f.size());
    EXPECT_EQ(g.covers(), f.covers());
    EXPECT_EQ(g.labels(), f.labels());
    EXPECT_EQ(frame_text(g), frame_text(f));
  }
}

TEST(FrameText, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("cover: 0 1\n"), 1u);
  EXPECT_EQ(error_line("\n\nelements: x\n"), 3u);
  EXPECT_EQ(error_line("elements: 0\n"), 1u);
  EXPECT_EQ(error_line("elements: 2\ncover: 0 1\ncolour: 0 red\n"), 3u);
  EXPECT_EQ(error_line("elements: 2\ncover: 0 5\n"), 2u);
  EXPECT_EQ(error_line("elements: 2\ncover: 0\n"), 2u);
  EXPECT_EQ(error_line("elements: 2\ncover: 0 1\nlabel: 0 a\nlabel: 0 b\n"), 4u);
  EXPECT_EQ(error_line("elements: 2\ncover: 0 1\nlabel: 0 two words\n"), 3u);
  EXPECT_EQ(error_line("elements: 2\nelements: 2\n"), 2u);
  EXPECT_EQ(error_line("elements: 2\nno colon here\n"), 2u);
}

TEST(FrameText, OrderProblemsAreFrameErrors) {
  EXPECT_THROW(parse_frame("elements: 2\n"), FrameError);
  EXPECT_THROW(parse_frame("elements: 5\ncover: 0 1\ncover: 1 2\ncover: 2 4\ncover: 0 3\ncover: 3 4\n"), FrameError);
}

TEST(FrameText, SampleFilesLoad) {
  const std::string dir = LOCALE_LAB_SAMPLES;
  EXPECT_EQ(load_frame(dir + "/three_chain.frame").size(), 3u);
  EXPECT_EQ(load_frame(dir + "/boolean_square.frame").size(), 4u);
  EXPECT_EQ(load_frame(dir + "/antichain_with_top.frame").size(), 5u);
  EXPECT_THROW(load_frame(dir + "/bad/unknown_key.frame"), ParseError);
  EXPECT_THROW(load_frame(dir + "/bad/pentagon.frame"), FrameError);
  EXPECT_THROW(load_frame(dir + "/missing.frame"), std::ios_base::failure);
}
