#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <thread>

#include <httplib.h>

#include "aspectsim/metadata_client.hpp"

namespace fs = std::filesystem;
using namespace aspectsim;
using namespace std::chrono_literals;

namespace {

class FakeApi {
 public:
  FakeApi() {
    server_.Get(R"(/graph/paper/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits_;
      const std::string id = req.matches[1];
      if (id == "DOI:10.1/ok") {
        res.set_content(
            R"({"paperId":"s2-1","title":"Okay Paper","abstract":"An abstract.","venue":"ACL","year":2019,)"
            R"("authors":[{"name":"Ann Lee"},{"name":"Bo Chen"}]})",
            "application/json");
      } else if (id == "DOI:10.1/flaky") {
        if (++flaky_ < 3) {
          res.status = 503;
        } else {
          res.set_content(R"({"paperId":"s2-2","title":"Flaky","abstract":"Eventually."})", "application/json");
        }
      } else if (id == "DOI:10.1/down") {
        res.status = 500;
      } else if (id == "search") {
        res.set_content(R"({"data":[{"title":"Other","year":2019},{"title":"Graph Nets","year":2018,"abstract":"Hit."}]})",
                        "application/json");
      } else {
        res.status = 404;
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeApi() {
    server_.stop();
    thread_.join();
  }
  [[nodiscard]] std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/graph"; }
  [[nodiscard]] int hits() const { return hits_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
  std::atomic<int> flaky_{0};
};

struct Recorder {
  std::vector<std::chrono::milliseconds> sleeps;
  HttpMetadataClient::Sleeper sleeper() {
    return [this](std::chrono::milliseconds d) { sleeps.push_back(d); };
  }
};

MetadataClientConfig config_for(const FakeApi& api, const std::string& name) {
  MetadataClientConfig c;
  c.base_url = api.url();
  c.requests_per_second = 0;
  c.max_retries = 3;
  c.initial_backoff = 100ms;
  c.timeout = 2000ms;
  c.cache_dir = fs::temp_directory_path() / ("aspectsim_meta_" + name);
  fs::remove_all(c.cache_dir);
  return c;
}

MetadataQuery doi(const std::string& id) { return {"DOI", id, "", 0}; }

}  // namespace

TEST(MetadataClient, FoundByIdAndCached) {
  FakeApi api;
  Recorder rec;
  HttpMetadataClient client(config_for(api, "found"), rec.sleeper());
  const auto r = client.lookup(doi("10.1/ok"));
  ASSERT_EQ(r.status, LookupStatus::kFound);
  EXPECT_EQ(r.response->abstract, "An abstract.");
  EXPECT_EQ(r.response->authors, (std::vector<std::string>{"Ann Lee", "Bo Chen"}));
  EXPECT_EQ(r.response->year, 2019);
  (void)client.lookup(doi("10.1/ok"));
  EXPECT_EQ(client.requests_sent(), 1U);
}

TEST(MetadataClient, NotFoundIsCachedOnDisk) {
  FakeApi api;
  const auto cfg = config_for(api, "notfound");
  {
    HttpMetadataClient client(cfg, Recorder().sleeper());
    EXPECT_EQ(client.lookup(doi("10.1/none")).status, LookupStatus::kNotFound);
  }
  HttpMetadataClient again(cfg, Recorder().sleeper());
  EXPECT_EQ(again.lookup(doi("10.1/none")).status, LookupStatus::kNotFound);
  EXPECT_EQ(again.requests_sent(), 0U);
  EXPECT_EQ(api.hits(), 1);
}

TEST(MetadataClient, RetriesWithExponentialBackoff) {
  FakeApi api;
  Recorder rec;
  HttpMetadataClient client(config_for(api, "flaky"), rec.sleeper());
  const auto r = client.lookup(doi("10.1/flaky"));
  ASSERT_EQ(r.status, LookupStatus::kFound);
  EXPECT_EQ(client.requests_sent(), 3U);
  EXPECT_EQ(rec.sleeps, (std::vector<std::chrono::milliseconds>{100ms, 200ms}));
}

TEST(MetadataClient, PersistentServerErrorFailsAndIsNotCached) {
  FakeApi api;
  Recorder rec;
  HttpMetadataClient client(config_for(api, "down"), rec.sleeper());
  const auto r = client.lookup(doi("10.1/down"));
  EXPECT_EQ(r.status, LookupStatus::kFailed);
  EXPECT_EQ(r.error, "HTTP 500");
  EXPECT_EQ(client.requests_sent(), 4U);
  (void)client.lookup(doi("10.1/down"));
  EXPECT_EQ(client.requests_sent(), 8U);
}

TEST(MetadataClient, TransportErrorIsFailure) {
  MetadataClientConfig c;
  c.base_url = "http://127.0.0.1:1";
  c.max_retries = 1;
  c.requests_per_second = 0;
  c.cache_dir = fs::temp_directory_path() / "aspectsim_meta_refused";
  fs::remove_all(c.cache_dir);
  Recorder rec;
  HttpMetadataClient client(c, rec.sleeper());
  EXPECT_EQ(client.lookup(doi("10.1/x")).status, LookupStatus::kFailed);
  EXPECT_EQ(client.requests_sent(), 2U);
}

TEST(MetadataClient, TitleSearchMatchesNormalizedTitleAndYear) {
  FakeApi api;
  HttpMetadataClient client(config_for(api, "search"), Recorder().sleeper());
  const auto hit = client.lookup({"", "", "graph  nets!", 2018});
  ASSERT_EQ(hit.status, LookupStatus::kFound);
  EXPECT_EQ(hit.response->abstract, "Hit.");
  EXPECT_EQ(client.lookup({"", "", "Graph Nets", 2017}).status, LookupStatus::kNotFound);
}

TEST(MetadataClient, OfflineNeverSends) {
  FakeApi api;
  auto cfg = config_for(api, "offline");
  cfg.offline = true;
  HttpMetadataClient client(cfg, Recorder().sleeper());
  EXPECT_EQ(client.lookup(doi("10.1/ok")).status, LookupStatus::kNotFound);
  EXPECT_EQ(client.requests_sent(), 0U);
  EXPECT_EQ(api.hits(), 0);
}

TEST(MetadataClient, ThrottleSleepsBetweenRequests) {
  FakeApi api;
  auto cfg = config_for(api, "throttle");
  cfg.requests_per_second = 2;
  Recorder rec;
  HttpMetadataClient client(cfg, rec.sleeper());
  (void)client.lookup(doi("10.1/a"));
  (void)client.lookup(doi("10.1/b"));
  (void)client.lookup(doi("10.1/c"));
  ASSERT_EQ(rec.sleeps.size(), 2U);
  for (auto d : rec.sleeps) {
    EXPECT_GT(d, 0ms);
    EXPECT_LE(d, 500ms);
  }
}

TEST(MetadataClient, ParseResponse) {
  EXPECT_FALSE(parse_metadata_response("not json"));
  const auto r = parse_metadata_response(R"({"title":"T","authors":["A B"],"year":"x"})");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->authors, std::vector<std::string>{"A B"});
  EXPECT_EQ(r->year, 0);
}
