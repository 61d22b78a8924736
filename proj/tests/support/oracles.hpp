#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aspectsim/aspect_pairs.hpp"
#include "aspectsim/paper_record.hpp"

namespace aspectsim::testing {

/// Brute-force re-check of sampled negatives straight from the records.
/// Citation targets are compared as plain paper ids.
struct NegativeAudit {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::map<std::string, std::size_t> violations;
  [[nodiscard]] bool all_passed() const { return checked == passed; }
};
NegativeAudit audit_negatives(const std::vector<PaperRecord>& records, const std::vector<DocumentPair>& negatives,
                              std::size_t none_index);

/// Counting oracle for the metric surfaces, written against plain bool
/// matrices instead of label sets.
struct OraclePrf {
  double p = 0.0, r = 0.0, f = 0.0;
};
struct OracleMetrics {
  OraclePrf micro;
  OraclePrf macro_all;
  OraclePrf macro_without_last;
  std::vector<OraclePrf> per_class;
  std::vector<std::size_t> support;
  std::vector<std::optional<OraclePrf>> by_cardinality;  // 1, 2, >=3
  std::vector<std::size_t> cardinality_samples;
  std::map<std::pair<std::string, std::string>, std::size_t> confusion;  // bit strings
};
OracleMetrics oracle_metrics(const std::vector<std::vector<bool>>& gold, const std::vector<std::vector<bool>>& pred);

/// Population standard deviation, two-pass.
double oracle_std(const std::vector<double>& values);

}  // namespace aspectsim::testing
