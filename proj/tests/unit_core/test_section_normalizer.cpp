#include <gtest/gtest.h>

#include "aspectsim/section_normalizer.hpp"

using aspectsim::SectionNormalizer;
using Set = std::set<std::string>;

TEST(SectionNormalizer, SplitsCombinedSections) {
  const SectionNormalizer n;
  EXPECT_EQ(n.normalize("Conclusion and Future Work"), (Set{"conclusion", "future work"}));
  EXPECT_EQ(n.normalize("Results & Discussion"), (Set{"results", "discussion"}));
}

TEST(SectionNormalizer, LettersOnlyLowercase) {
  const SectionNormalizer n;
  EXPECT_EQ(n.normalize("5. RESULTS:"), Set{"results"});
  EXPECT_EQ(n.normalize("3.1\tRelated   Work"), Set{"related work"});
  EXPECT_EQ(n.normalize("Re-Ranking"), Set{"re ranking"});
}

TEST(SectionNormalizer, NumberVariantsMapToOneForm) {
  const SectionNormalizer n;
  EXPECT_EQ(n.normalize("Method"), Set{"methods"});
  EXPECT_EQ(n.normalize("Result"), Set{"results"});
  EXPECT_EQ(n.normalize("Introductions"), Set{"introduction"});
}

TEST(SectionNormalizer, EmptyWhenNothingAlphabetic) {
  const SectionNormalizer n;
  EXPECT_TRUE(n.normalize("").empty());
  EXPECT_TRUE(n.normalize("4.2.1").empty());
  EXPECT_TRUE(n.normalize("and & and").empty());
}

TEST(SectionNormalizer, NonAsciiBytesDropped) {
  const SectionNormalizer n;
  EXPECT_EQ(n.normalize("Einf\xc3\xbchrung"), Set{"einfhrung"});
}

TEST(SectionNormalizer, AndInsideWordIsNotSplit) {
  const SectionNormalizer n;
  EXPECT_EQ(n.normalize("Standard Candles"), Set{"standard candles"});
}

TEST(SectionNormalizer, VariantFileWithStopSectionAndChains) {
  const auto n = SectionNormalizer::from_string(
      "# comment\n"
      "acknowledgements ->\n"
      "expts -> experiments\n"
      "experiments -> experiment\n");
  EXPECT_TRUE(n.normalize("Acknowledgements").empty());
  EXPECT_EQ(n.normalize("Expts"), Set{"experiment"});
  EXPECT_EQ(n.normalize("Acknowledgements and Expts"), Set{"experiment"});
}

TEST(SectionNormalizer, RejectsCyclesAndBadLines) {
  EXPECT_THROW(SectionNormalizer::from_string("a -> b\nb -> a\n"), std::invalid_argument);
  EXPECT_THROW(SectionNormalizer::from_string("no arrow here\n"), std::invalid_argument);
}

TEST(SectionNormalizer, ShippedVariantFileMatchesBuiltIn) {
  const auto file = SectionNormalizer::from_file(std::string(ASPECTSIM_SOURCE_DIR) + "/config/section_variants.txt");
  EXPECT_EQ(file.variants(), SectionNormalizer().variants());
}

TEST(SectionNormalizer, IdempotentOnOutputs) {
  const SectionNormalizer n;
  for (const char* raw : {"Conclusion and Future Work", "2 Related Works", "Materials & Methods", "Appendix B.2",
                          "Experimental Results and Analysis"}) {
    for (const auto& s : n.normalize(raw)) {
      EXPECT_TRUE(aspectsim::is_canonical_section(s)) << s;
      EXPECT_EQ(n.normalize(s), Set{s});
    }
  }
}
