#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace aspectsim {

/// Lookup by external identifier (id_scheme + id_value) or, when no id is
/// known, by (title, year).
struct MetadataQuery {
  std::string id_scheme;
  std::string id_value;
  std::string title;
  int year = 0;

  [[nodiscard]] bool by_id() const { return !id_scheme.empty() && !id_value.empty(); }
  /// Canonical string form; hashed for the on-disk cache file name.
  [[nodiscard]] std::string canonical() const;
};

struct MetadataResponse {
  std::string paper_id;
  std::string title;
  std::string abstract;
  std::vector<std::string> authors;
  std::string venue;
  int year = 0;

  friend bool operator==(const MetadataResponse&, const MetadataResponse&) = default;
};

enum class LookupStatus { kFound, kNotFound, kFailed };

struct LookupResult {
  LookupStatus status = LookupStatus::kNotFound;
  std::optional<MetadataResponse> response;
  std::string error;
};

class MetadataClient {
 public:
  virtual ~MetadataClient() = default;
  virtual LookupResult lookup(const MetadataQuery& query) = 0;
};

/// JSON files keyed by query hash. Concurrent readers, serialized writers.
class MetadataCache {
 public:
  explicit MetadataCache(std::filesystem::path dir);

  /// nullopt on miss. A cached kNotFound is a hit.
  std::optional<LookupResult> get(const MetadataQuery& query) const;
  void put(const MetadataQuery& query, const LookupResult& result);

  [[nodiscard]] std::filesystem::path file_for(const MetadataQuery& query) const;

 private:
  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::string, LookupResult> memo_;
};

struct MetadataClientConfig {
  std::string base_url = "https://api.semanticscholar.org/graph/v1";
  double requests_per_second = 1.0;
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{500};
  std::chrono::milliseconds timeout{10000};
  std::filesystem::path cache_dir = ".aspectsim-cache/metadata";
  std::string api_key;
  bool offline = false;

  /// Overrides from ASPECTSIM_METADATA_{URL,RPS,RETRIES,CACHE,API_KEY,OFFLINE}.
  void apply_env();
};

/// Scholarly-metadata HTTP(S) client speaking the Semantic Scholar graph API
/// shape: GET {base}/paper/{SCHEME}:{id} and GET {base}/paper/search?query=.
/// Responses (including 404s) are cached; offline mode never touches the network.
class HttpMetadataClient final : public MetadataClient {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  explicit HttpMetadataClient(MetadataClientConfig config, Sleeper sleeper = {});
  ~HttpMetadataClient() override;

  LookupResult lookup(const MetadataQuery& query) override;

  /// Number of HTTP requests actually sent (retries included).
  [[nodiscard]] std::size_t requests_sent() const { return requests_sent_; }

 private:
  struct HttpReply {
    int status = 0;  // 0 = transport error
    std::string body;
    std::string error;
  };
  HttpReply get(const std::string& path_and_query);
  LookupResult fetch(const MetadataQuery& query);
  void throttle();

  MetadataClientConfig config_;
  Sleeper sleeper_;
  MetadataCache cache_;
  std::mutex request_mutex_;
  std::chrono::steady_clock::time_point last_request_{};
  std::size_t requests_sent_ = 0;
};

/// Parses one paper object of the graph API into a response.
std::optional<MetadataResponse> parse_metadata_response(const std::string& body);

}  // namespace aspectsim
