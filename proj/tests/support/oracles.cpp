#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace aspectsim::testing {

namespace {

std::string squash(const std::string& s) {
  std::string out;
  bool space = false;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

const PaperRecord* find(const std::vector<PaperRecord>& records, const std::string& id) {
  for (const auto& r : records) {
    if (r.paper_id == id) return &r;
  }
  return nullptr;
}

bool cites(const PaperRecord& from, const std::string& to) {
  return std::any_of(from.citations.begin(), from.citations.end(), [&](const RawCitation& c) { return c.target_ref == to; });
}

OraclePrf prf(double tp, double fp, double fn) {
  OraclePrf out;
  out.p = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  out.r = tp + fn > 0 ? tp / (tp + fn) : 0.0;
  out.f = out.p + out.r > 0 ? 2 * out.p * out.r / (out.p + out.r) : 0.0;
  return out;
}

std::string bits(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace

NegativeAudit audit_negatives(const std::vector<PaperRecord>& records, const std::vector<DocumentPair>& negatives,
                              std::size_t none_index) {
  NegativeAudit audit;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& n : negatives) {
    ++audit.checked;
    std::vector<std::string> bad;
    const auto* a = find(records, n.seed_id);
    const auto* b = find(records, n.target_id);
    if (!a || !b) {
      ++audit.violations["unknown paper"];
      continue;
    }
    if (n.seed_id == n.target_id) bad.push_back("self pair");
    if (!(n.seed_id < n.target_id)) bad.push_back("not canonical order");
    if (n.labels != LabelSet{none_index}) bad.push_back("labels not {None}");
    if (!seen.insert({n.seed_id, n.target_id}).second) bad.push_back("duplicate");
    if (cites(*a, b->paper_id) || cites(*b, a->paper_id)) bad.push_back("positive pair");
    for (const auto& c : records) {
      if (cites(c, a->paper_id) && cites(c, b->paper_id)) {
        bad.push_back("co-cited");
        break;
      }
    }
    for (const auto& x : a->authors) {
      bool shared = false;
      for (const auto& y : b->authors) shared = shared || (!squash(x).empty() && squash(x) == squash(y));
      if (shared) {
        bad.push_back("shared author");
        break;
      }
    }
    if (!squash(a->venue).empty() && squash(a->venue) == squash(b->venue)) bad.push_back("same venue");
    if (bad.empty()) {
      ++audit.passed;
    } else {
      for (const auto& v : bad) ++audit.violations[v];
    }
  }
  return audit;
}

OracleMetrics oracle_metrics(const std::vector<std::vector<bool>>& gold, const std::vector<std::vector<bool>>& pred) {
  OracleMetrics m;
  const std::size_t n = gold.size();
  const std::size_t c = n ? gold[0].size() : 0;
  double tp = 0, fp = 0, fn = 0;
  m.per_class.resize(c);
  m.support.assign(c, 0);
  for (std::size_t k = 0; k < c; ++k) {
    double ktp = 0, kfp = 0, kfn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (gold[i][k]) ++m.support[k];
      if (gold[i][k] && pred[i][k]) ++ktp;
      if (!gold[i][k] && pred[i][k]) ++kfp;
      if (gold[i][k] && !pred[i][k]) ++kfn;
    }
    m.per_class[k] = prf(ktp, kfp, kfn);
    tp += ktp;
    fp += kfp;
    fn += kfn;
  }
  m.micro = prf(tp, fp, fn);
  for (std::size_t k = 0; k < c; ++k) {
    m.macro_all.p += m.per_class[k].p / static_cast<double>(c);
    m.macro_all.r += m.per_class[k].r / static_cast<double>(c);
    m.macro_all.f += m.per_class[k].f / static_cast<double>(c);
    if (k + 1 < c) {
      m.macro_without_last.p += m.per_class[k].p / static_cast<double>(c - 1);
      m.macro_without_last.r += m.per_class[k].r / static_cast<double>(c - 1);
      m.macro_without_last.f += m.per_class[k].f / static_cast<double>(c - 1);
    }
  }

  m.by_cardinality.resize(3);
  m.cardinality_samples.assign(3, 0);
  for (std::size_t bucket = 0; bucket < 3; ++bucket) {
    double btp = 0, bfp = 0, bfn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto card = static_cast<std::size_t>(std::count(gold[i].begin(), gold[i].end(), true));
      if (card == 0 || std::min<std::size_t>(card, 3) != bucket + 1) continue;
      ++m.cardinality_samples[bucket];
      for (std::size_t k = 0; k < c; ++k) {
        btp += gold[i][k] && pred[i][k];
        bfp += !gold[i][k] && pred[i][k];
        bfn += gold[i][k] && !pred[i][k];
      }
    }
    if (m.cardinality_samples[bucket] > 0) m.by_cardinality[bucket] = prf(btp, bfp, bfn);
  }

  for (std::size_t i = 0; i < n; ++i) ++m.confusion[{bits(gold[i]), bits(pred[i])}];
  return m;
}

double oracle_std(const std::vector<double>& values) {
  double mean = 0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

}  // namespace aspectsim::testing
