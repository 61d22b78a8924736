#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aspectsim/dataset_store.hpp"
#include "aspectsim/label_set.hpp"
#include "aspectsim/paper_record.hpp"

namespace aspectsim::testing {

struct CorpusShape {
  std::size_t papers = 1000;
  std::size_t author_pool = 1500;
  std::size_t venue_pool = 40;
  std::size_t max_citations = 6;
  /// Fraction of papers without a venue.
  double missing_venue = 0.1;
};

/// Papers P00000.. with random authors (with case/spacing noise), venues and
/// citations to plain paper ids under a handful of section titles.
std::vector<PaperRecord> synthetic_corpus(const CorpusShape& shape, std::uint64_t seed);

/// Positive class weights ordered like the vocabulary below, then Other and
/// None, from the ACL label distribution.
const std::vector<double>& acl_class_weights();
LabelVocabulary acl_vocabulary();

/// Label sets with the ACL class skew: one primary class drawn by weight,
/// positives get a second (third) class with probability 0.25 (0.05).
std::vector<LabelSet> skewed_label_sets(std::size_t n, std::uint64_t seed);

/// Sample set whose text carries its labels: every class has a few cue words
/// placed in the seed or target abstract, plus filler noise.
SampleSet topical_sample_set(std::size_t n, std::uint64_t seed);

}  // namespace aspectsim::testing
