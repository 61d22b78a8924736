#include "aspectsim/negative_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "aspectsim/rng.hpp"
#include "aspectsim/text_util.hpp"

namespace aspectsim {

NegativeConstraintIndex::NegativeConstraintIndex(const std::vector<PaperRecord>& records) {
  ids_.reserve(records.size());
  info_.resize(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (!index_.emplace(r.paper_id, i).second) throw std::invalid_argument("duplicate paper_id: " + r.paper_id);
    ids_.push_back(r.paper_id);
    for (const auto& a : r.authors) {
      auto name = text::normalize_key(a);
      if (!name.empty()) info_[i].authors.insert(std::move(name));
    }
    info_[i].venue = text::normalize_key(r.venue);
  }
  const CitationResolver resolver(records);
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& c : records[i].citations) {
      const auto target = resolver.resolve(c.target_ref);
      if (!target) continue;
      const auto t = index_.at(*target);
      if (t == i) continue;
      positive_pairs_.insert(pair_key(i, t));
      info_[t].cited_by.insert(i);
    }
  }
}

std::uint64_t NegativeConstraintIndex::pair_key(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

bool NegativeConstraintIndex::contains(std::string_view paper_id) const {
  return index_.contains(std::string(paper_id));
}

const NegativeConstraintIndex::PaperInfo& NegativeConstraintIndex::info(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw std::invalid_argument("unknown paper key: " + std::string(id));
  return info_[it->second];
}

bool NegativeConstraintIndex::is_positive_pair(std::string_view a, std::string_view b) const {
  auto ia = index_.find(std::string(a));
  auto ib = index_.find(std::string(b));
  if (ia == index_.end() || ib == index_.end()) throw std::invalid_argument("unknown paper key");
  return positive_pairs_.contains(pair_key(ia->second, ib->second));
}

bool NegativeConstraintIndex::are_cocited(std::string_view a, std::string_view b) const {
  const auto& x = info(a).cited_by;
  const auto& y = info(b).cited_by;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool NegativeConstraintIndex::share_author(std::string_view a, std::string_view b) const {
  const auto& x = info(a).authors;
  const auto& y = info(b).authors;
  return std::any_of(x.begin(), x.end(), [&](const std::string& name) { return y.contains(name); });
}

bool NegativeConstraintIndex::same_venue(std::string_view a, std::string_view b) const {
  const auto& va = info(a).venue;
  return !va.empty() && va == info(b).venue;
}

std::string_view to_string(NegativeVerdict verdict) {
  switch (verdict) {
    case NegativeVerdict::kValid:
      return "valid";
    case NegativeVerdict::kPositivePair:
      return "positive_pair";
    case NegativeVerdict::kCocited:
      return "cocited";
    case NegativeVerdict::kSharedAuthor:
      return "shared_author";
    case NegativeVerdict::kSameVenue:
      return "same_venue";
  }
  return "unknown";
}

NegativeVerdict check_negative(std::string_view a, std::string_view b, const NegativeConstraintIndex& index) {
  if (a == b) throw std::invalid_argument("negative pair requires two distinct papers");
  if (!index.contains(a) || !index.contains(b)) throw std::invalid_argument("unknown paper key");
  if (index.is_positive_pair(a, b)) return NegativeVerdict::kPositivePair;
  if (index.are_cocited(a, b)) return NegativeVerdict::kCocited;
  if (index.share_author(a, b)) return NegativeVerdict::kSharedAuthor;
  if (index.same_venue(a, b)) return NegativeVerdict::kSameVenue;
  return NegativeVerdict::kValid;
}

bool is_valid_negative(std::string_view a, std::string_view b, const NegativeConstraintIndex& index) {
  return check_negative(a, b, index) == NegativeVerdict::kValid;
}

nlohmann::ordered_json SamplerReport::to_json() const {
  nlohmann::ordered_json j;
  j["requested"] = requested;
  j["produced"] = produced;
  j["attempts"] = attempts;
  j["seed"] = seed;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [reason, n] : rejections) hist[reason] = n;
  j["rejections"] = std::move(hist);
  return j;
}

std::vector<DocumentPair> sample_negatives(const NegativeConstraintIndex& index, std::size_t none_index,
                                           std::size_t count, std::uint64_t rng_seed, SamplerReport* report) {
  SamplerReport rep;
  rep.requested = count;
  rep.seed = rng_seed;
  std::vector<DocumentPair> out;
  out.reserve(count);
  const auto& ids = index.paper_ids();
  const std::size_t budget = kAttemptsPerNegative * count;
  SeededRng rng(rng_seed);
  std::unordered_set<std::uint64_t> taken;
  LabelSet none;
  none.insert(none_index);

  while (out.size() < count && ids.size() >= 2 && rep.attempts < budget) {
    ++rep.attempts;
    auto i = static_cast<std::size_t>(rng.uniform_index(ids.size()));
    auto j = static_cast<std::size_t>(rng.uniform_index(ids.size()));
    if (i == j) {
      ++rep.rejections["self_pair"];
      continue;
    }
    if (ids[j] < ids[i]) std::swap(i, j);
    const auto key = (static_cast<std::uint64_t>(std::min(i, j)) << 32) | std::max(i, j);
    if (taken.contains(key)) {
      ++rep.rejections["duplicate"];
      continue;
    }
    const auto verdict = check_negative(ids[i], ids[j], index);
    if (verdict != NegativeVerdict::kValid) {
      ++rep.rejections[std::string(to_string(verdict))];
      continue;
    }
    taken.insert(key);
    out.push_back({ids[i], ids[j], none});
  }
  rep.produced = out.size();
  if (report) *report = rep;
  if (out.size() < count) {
    throw SamplingError("negative sampling exhausted its attempt budget: produced " + std::to_string(out.size()) +
                            " of " + std::to_string(count),
                        rep);
  }
  return out;
}

std::size_t negative_count_for(std::size_t positive_pairs, double ratio) {
  if (ratio < 0) throw std::invalid_argument("negative ratio must be >= 0");
  return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(positive_pairs)));
}

}  // namespace aspectsim
