#include <gtest/gtest.h>

#include "aspectsim/aspect_pairs.hpp"

using namespace aspectsim;

namespace {

PaperRecord paper(const std::string& id, std::vector<RawCitation> cites = {}) {
  PaperRecord r;
  r.paper_id = id;
  r.title = "Title " + id;
  r.abstract = "Abstract " + id;
  r.year = 2000;
  r.citations = std::move(cites);
  return r;
}

}  // namespace

TEST(AspectPairs, MergesSectionsOfOneCitedPaper) {
  const std::vector<PaperRecord> records{
      paper("A", {{"B", "1 Introduction"}, {"B", "Discussion"}, {"B", "Introduction"}, {"C", "Acknowledgements"}}),
      paper("B"), paper("C")};
  const LabelVocabulary vocab({"introduction", "discussion"});
  const auto pairs = build_positive_pairs(records, vocab, SectionNormalizer());
  ASSERT_EQ(pairs.size(), 2U);
  EXPECT_EQ(pairs[0], (DocumentPair{"A", "B", LabelSet{0, 1}}));
  EXPECT_EQ(pairs[1], (DocumentPair{"A", "C", LabelSet{vocab.other_index()}}));
}

TEST(AspectPairs, InstancesAreDistinctAndResolved) {
  auto b = paper("B");
  b.external_ids["doi"] = "10.1/B";
  const std::vector<PaperRecord> records{
      paper("A", {{"doi:10.1/b", "Methods"}, {"B", "Method"}, {"missing", "Methods"}, {"A", "Methods"}, {"B", "12"}}),
      b};
  PairingDiagnostics diag;
  const auto inst = collect_citation_instances(records, SectionNormalizer(), &diag);
  ASSERT_EQ(inst.size(), 1U);
  EXPECT_EQ(inst[0], (CitationInstance{"A", "B", "methods"}));
  EXPECT_EQ(diag.citations, 5U);
  EXPECT_EQ(diag.unresolved, 1U);
  EXPECT_EQ(diag.self_citations, 1U);
  EXPECT_EQ(diag.empty_sections, 1U);
}

TEST(AspectPairs, ResolverKeys) {
  auto p = paper("X");
  p.title = "Deep   Learning!";
  p.year = 2015;
  p.external_ids["pmid"] = "77";
  const CitationResolver resolver({p});
  EXPECT_EQ(resolver.resolve("X"), "X");
  EXPECT_EQ(resolver.resolve("PMID:77"), "X");
  EXPECT_EQ(resolver.resolve(CitationResolver::title_key("deep learning", 2015)), "X");
  EXPECT_FALSE(resolver.resolve(CitationResolver::title_key("deep learning", 2016)));
}

TEST(AspectPairs, VocabularyOrderAndTies) {
  std::vector<CitationInstance> inst;
  auto add = [&](const std::string& section, int n) {
    for (int i = 0; i < n; ++i) inst.push_back({"s" + std::to_string(i), section + std::to_string(i), section});
  };
  add("results", 3);
  add("methods", 3);
  add("introduction", 5);
  add("zeta", 1);
  const auto counts = count_sections(inst);
  ASSERT_EQ(counts.size(), 4U);
  EXPECT_EQ(counts[0].first, "introduction");
  EXPECT_EQ(counts[1].first, "methods");
  EXPECT_EQ(counts[2].first, "results");
  const auto vocab = build_vocabulary(inst, 3);
  EXPECT_EQ(vocab.positive_classes(), (std::vector<std::string>{"introduction", "methods", "results"}));
  EXPECT_EQ(vocab.class_names().back(), "None");
  EXPECT_EQ(vocab.class_for_section("zeta"), vocab.other_index());
  EXPECT_THROW(build_vocabulary(inst, 5), std::invalid_argument);
}

TEST(AspectPairs, TenUniformSectionsLeaveOneForOther) {
  std::vector<CitationInstance> inst;
  for (int s = 0; s < 10; ++s) {
    for (int i = 0; i < 4; ++i) {
      inst.push_back({"seed" + std::to_string(i), "t" + std::to_string(s), "section " + std::string(1, char('a' + s))});
    }
  }
  const auto vocab = build_vocabulary(inst, 9);
  EXPECT_EQ(vocab.size(), 11U);
  EXPECT_EQ(vocab.class_for_section("section j"), vocab.other_index());
  const auto pairs = build_positive_pairs(inst, vocab);
  const auto counts = class_counts(pairs, vocab);
  EXPECT_EQ(counts[vocab.other_index()], 4U);
  EXPECT_EQ(counts[vocab.none_index()], 0U);
}

TEST(AspectPairs, DisplayNamesAndCsv) {
  const LabelVocabulary vocab({"related work", "introduction"});
  EXPECT_EQ(vocab.display_name(0), "Related Work");
  EXPECT_EQ(vocab.display_name(vocab.none_index()), "None");
  EXPECT_EQ(vocab.labels_from_names({"introduction", "None"}), (LabelSet{1, 3}));
  EXPECT_THROW((void)vocab.labels_from_names({"bogus"}), std::invalid_argument);
  const std::vector<DocumentPair> pairs{{"a", "b", LabelSet{0, 1}}, {"a", "c", LabelSet{1}}};
  EXPECT_EQ(label_distribution_csv(pairs, vocab), "class,count\nRelated Work,1\nIntroduction,2\nOther,0\nNone,0\n");
}

TEST(AspectPairs, VocabularyJsonRoundTrip) {
  const LabelVocabulary vocab({"introduction", "results"});
  EXPECT_EQ(LabelVocabulary::from_json(vocab.to_json()), vocab);
}
