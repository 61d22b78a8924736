#include "aspectsim/metadata_client.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "aspectsim/corpus_ingest.hpp"
#include "aspectsim/text_util.hpp"

namespace aspectsim {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kFields = "paperId,title,abstract,authors,venue,year";

ordered_json response_to_json(const MetadataResponse& r) {
  ordered_json j;
  j["paper_id"] = r.paper_id;
  j["title"] = r.title;
  j["abstract"] = r.abstract;
  j["authors"] = r.authors;
  j["venue"] = r.venue;
  j["year"] = r.year;
  return j;
}

MetadataResponse response_from_json(const json& j) {
  MetadataResponse r;
  r.paper_id = j.value("paper_id", "");
  r.title = j.value("title", "");
  r.abstract = j.value("abstract", "");
  r.authors = j.value("authors", std::vector<std::string>{});
  r.venue = j.value("venue", "");
  r.year = j.value("year", 0);
  return r;
}

std::string str_or_empty(const json& j, const char* key) {
  auto it = j.find(key);
  return it != j.end() && it->is_string() ? it->get<std::string>() : std::string{};
}

MetadataResponse graph_paper(const json& j) {
  MetadataResponse r;
  r.paper_id = str_or_empty(j, "paperId");
  r.title = str_or_empty(j, "title");
  r.abstract = str_or_empty(j, "abstract");
  r.venue = str_or_empty(j, "venue");
  if (auto it = j.find("year"); it != j.end() && it->is_number_integer()) r.year = it->get<int>();
  if (auto it = j.find("authors"); it != j.end() && it->is_array()) {
    for (const auto& a : *it) {
      auto name = a.is_object() ? str_or_empty(a, "name") : (a.is_string() ? a.get<std::string>() : "");
      if (!name.empty()) r.authors.push_back(std::move(name));
    }
  }
  return r;
}

}  // namespace

std::string MetadataQuery::canonical() const {
  if (by_id()) return "id:" + text::to_lower_ascii(id_scheme) + ":" + id_value;
  return "title:" + title_year_key(title, year);
}

std::optional<MetadataResponse> parse_metadata_response(const std::string& body) {
  const auto j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return graph_paper(j);
}

// ---- cache -----------------------------------------------------------------

MetadataCache::MetadataCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path MetadataCache::file_for(const MetadataQuery& query) const {
  return dir_ / (text::hex64(text::fnv1a64(query.canonical())) + ".json");
}

std::optional<LookupResult> MetadataCache::get(const MetadataQuery& query) const {
  const auto key = query.canonical();
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const auto path = file_for(query);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  const auto j = json::parse(in, nullptr, false);
  // hash collisions: the stored query must match
  if (j.is_discarded() || j.value("query", "") != key) return std::nullopt;
  LookupResult result;
  result.status = j.value("status", "") == "found" ? LookupStatus::kFound : LookupStatus::kNotFound;
  if (result.status == LookupStatus::kFound) result.response = response_from_json(j.at("response"));
  std::unique_lock lock(mutex_);
  memo_.emplace(key, result);
  return result;
}

void MetadataCache::put(const MetadataQuery& query, const LookupResult& result) {
  if (result.status == LookupStatus::kFailed) return;
  ordered_json j;
  j["query"] = query.canonical();
  j["status"] = result.status == LookupStatus::kFound ? "found" : "not_found";
  if (result.response) j["response"] = response_to_json(*result.response);

  std::unique_lock lock(mutex_);
  memo_[query.canonical()] = result;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const auto path = file_for(query);
  const auto tmp = fs::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) {
      spdlog::warn("metadata cache not writable: {}", dir_.string());
      return;
    }
    out << j.dump(2, ' ', false, json::error_handler_t::replace) << '\n';
  }
  fs::rename(tmp, path, ec);
}

// ---- config ----------------------------------------------------------------

void MetadataClientConfig::apply_env() {
  if (const char* v = std::getenv("ASPECTSIM_METADATA_URL"); v && *v) base_url = v;
  if (const char* v = std::getenv("ASPECTSIM_METADATA_RPS"); v && *v) requests_per_second = std::stod(v);
  if (const char* v = std::getenv("ASPECTSIM_METADATA_RETRIES"); v && *v) max_retries = std::stoi(v);
  if (const char* v = std::getenv("ASPECTSIM_METADATA_CACHE"); v && *v) cache_dir = v;
  if (const char* v = std::getenv("ASPECTSIM_METADATA_API_KEY"); v && *v) api_key = v;
  if (const char* v = std::getenv("ASPECTSIM_METADATA_OFFLINE"); v && *v) {
    const std::string s = text::to_lower_ascii(v);
    offline = s == "1" || s == "true" || s == "yes";
  }
}

// ---- HTTP client -----------------------------------------------------------

HttpMetadataClient::HttpMetadataClient(MetadataClientConfig config, Sleeper sleeper)
    : config_(std::move(config)), sleeper_(std::move(sleeper)), cache_(config_.cache_dir) {
  if (!sleeper_) sleeper_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

HttpMetadataClient::~HttpMetadataClient() = default;

void HttpMetadataClient::throttle() {
  if (config_.requests_per_second <= 0) return;
  const auto interval = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(1.0 / config_.requests_per_second));
  const auto now = std::chrono::steady_clock::now();
  if (last_request_.time_since_epoch().count() != 0 && now - last_request_ < interval) {
    sleeper_(std::chrono::ceil<std::chrono::milliseconds>(interval - (now - last_request_)));
  }
  last_request_ = std::chrono::steady_clock::now();
}

HttpMetadataClient::HttpReply HttpMetadataClient::get(const std::string& path_and_query) {
  // split "scheme://host[:port]" from an optional path prefix
  std::string origin = config_.base_url;
  std::string prefix;
  if (auto scheme_end = origin.find("://"); scheme_end != std::string::npos) {
    if (auto slash = origin.find('/', scheme_end + 3); slash != std::string::npos) {
      prefix = origin.substr(slash);
      origin.resize(slash);
    }
  }
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();

  httplib::Client client(origin);
  const auto secs = config_.timeout.count() / 1000;
  const auto usecs = (config_.timeout.count() % 1000) * 1000;
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  httplib::Headers headers;
  if (!config_.api_key.empty()) headers.emplace("x-api-key", config_.api_key);

  throttle();
  ++requests_sent_;
  auto res = client.Get(prefix + path_and_query, headers);
  if (!res) return {0, {}, httplib::to_string(res.error())};
  return {res->status, res->body, {}};
}

LookupResult HttpMetadataClient::fetch(const MetadataQuery& query) {
  std::string path;
  if (query.by_id()) {
    const auto scheme = text::to_lower_ascii(query.id_scheme);
    const auto id = text::url_encode(query.id_value, "/:");
    path = "/paper/" + (scheme == "s2" ? id : query.id_scheme + ":" + id) + "?fields=" + kFields;
  } else {
    path = "/paper/search?query=" + text::url_encode(query.title) + "&limit=5&fields=" + kFields;
  }

  std::chrono::milliseconds backoff = config_.initial_backoff;
  std::string last_error;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      sleeper_(backoff);
      backoff *= 2;
    }
    const auto reply = get(path);
    if (reply.status == 404) return {LookupStatus::kNotFound, std::nullopt, "404"};
    if (reply.status == 200) {
      const auto j = json::parse(reply.body, nullptr, false);
      if (j.is_discarded()) {
        last_error = "invalid JSON in response";
        continue;
      }
      if (query.by_id()) return {LookupStatus::kFound, graph_paper(j), {}};
      // search: accept the first hit whose normalized title (and year, if known) matches
      const auto want = text::normalize_title(query.title);
      if (auto data = j.find("data"); data != j.end() && data->is_array()) {
        for (const auto& hit : *data) {
          auto paper = graph_paper(hit);
          if (text::normalize_title(paper.title) == want && (query.year == 0 || paper.year == query.year)) {
            return {LookupStatus::kFound, std::move(paper), {}};
          }
        }
      }
      return {LookupStatus::kNotFound, std::nullopt, "no matching search hit"};
    }
    if (reply.status != 0 && reply.status != 429 && reply.status < 500) {
      return {LookupStatus::kNotFound, std::nullopt, "HTTP " + std::to_string(reply.status)};
    }
    last_error = reply.status == 0 ? reply.error : "HTTP " + std::to_string(reply.status);
    spdlog::debug("metadata request {} failed ({}), attempt {}", path, last_error, attempt + 1);
  }
  return {LookupStatus::kFailed, std::nullopt, last_error};
}

LookupResult HttpMetadataClient::lookup(const MetadataQuery& query) {
  if (auto cached = cache_.get(query)) return *cached;
  if (config_.offline) return {LookupStatus::kNotFound, std::nullopt, "offline cache miss"};
  LookupResult result;
  {
    std::lock_guard lock(request_mutex_);
    if (auto cached = cache_.get(query)) return *cached;
    result = fetch(query);
  }
  cache_.put(query, result);
  return result;
}

}  // namespace aspectsim
