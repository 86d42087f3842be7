// Copyright 2026 The IRF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>

#include "httplib.h"
#include "irf/gateway/config.h"
#include "irf/gateway/gateway.h"
#include "irf/gateway/http_service.h"
#include "irf/gateway/preference_repository.h"
#include "irf/gateway/upstream_client.h"
#include "stack.h"

namespace irf::gateway {
namespace {

using ::irf::testing::ConfigFor;
using ::irf::testing::kTestNow;
using ::irf::testing::Stack;
using ::irf::testing::StackOptions;
using ::irf::testing::TempDir;

dialogue::MessageCatalog Messages() {
  return dialogue::MessageCatalog::Load(testing::DataDir() / "messages.json");
}

std::vector<std::string> Ids(const Json& payload) {
  std::vector<std::string> ids;
  for (const auto& item : payload.at("items")) ids.push_back(item.at("item_id"));
  return ids;
}

void WriteFile(const std::filesystem::path& path, const std::string& data) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << data;
}

// ---------------------------------------------------------------- config

TEST(GatewayConfig, ReadsFlatDocumentAndResolvesPaths) {
  Json doc = ParseJson(R"({
    "recommender_base_url": "http://rec:9000/api/",
    "user_service_base_url": "http://users",
    "item_service_base_url": "http://items:1",
    "alpha": 0.25, "w_perm": 0.1, "ask_threshold": 3,
    "workspace_path": "ws.json", "messages_path": "/abs/m.json",
    "persistence_path": "prefs"
  })");
  GatewayConfig c = GatewayConfigFromJson(doc, "/etc/irf");
  EXPECT_EQ(c.rerank.alpha, 0.25);
  EXPECT_EQ(c.upm.w_perm, 0.1);
  EXPECT_EQ(c.upm.w_session, 0.6);
  EXPECT_EQ(c.policy.ask_threshold, 3);
  EXPECT_EQ(c.n_recommendations, 10);
  EXPECT_EQ(c.request_timeout_ms, 2000);
  EXPECT_FALSE(c.user_update_enabled);
  EXPECT_EQ(c.workspace_path, std::filesystem::path("/etc/irf/ws.json"));
  EXPECT_EQ(c.messages_path, std::filesystem::path("/abs/m.json"));
  EXPECT_EQ(c.persistence_path, std::filesystem::path("/etc/irf/prefs"));
  EXPECT_FALSE(c.corpus_snapshot_path.has_value());

  BaseUrl url = ParseBaseUrl(c.recommender_base_url);
  EXPECT_EQ(url.origin, "http://rec:9000");
  EXPECT_EQ(url.path_prefix, "/api");
}

TEST(GatewayConfig, RejectsOutOfRangeValues) {
  GatewayConfig good = ConfigFor(1, "/tmp/x");
  EXPECT_NO_THROW(good.Validate());
  auto expect_invalid = [&](auto mutate) {
    GatewayConfig c = good;
    mutate(c);
    EXPECT_THROW(c.Validate(), Error);
  };
  expect_invalid([](GatewayConfig& c) { c.rerank.alpha = 1.5; });
  expect_invalid([](GatewayConfig& c) { c.beta = -0.1; });
  expect_invalid([](GatewayConfig& c) { c.n_recommendations = 0; });
  expect_invalid([](GatewayConfig& c) { c.request_timeout_ms = 0; });
  expect_invalid([](GatewayConfig& c) { c.recommender_base_url = "rec:9000"; });
  expect_invalid([](GatewayConfig& c) { c.item_service_base_url = "https://x"; });
  expect_invalid([](GatewayConfig& c) { c.persistence_path.clear(); });
  EXPECT_THROW(GatewayConfigFromJson(ParseJson(R"({"alpha": "high"})"), "/"), Error);
}

TEST(FaultPoint, ReadsEnvironment) {
  ::unsetenv("IRF_FAULT_INJECT");
  EXPECT_EQ(FaultPointFromEnv(), FaultPoint::kNone);
  ::setenv("IRF_FAULT_INJECT", "before_rename", 1);
  EXPECT_EQ(FaultPointFromEnv(), FaultPoint::kBeforeRename);
  ::setenv("IRF_FAULT_INJECT", "after_rename", 1);
  EXPECT_EQ(FaultPointFromEnv(), FaultPoint::kAfterRename);
  ::unsetenv("IRF_FAULT_INJECT");
}

// ------------------------------------------------------- upstream client

// A hand-rolled upstream whose misbehaviour each test chooses.
class FakeUpstream : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Post("/recommend/get", [this](const httplib::Request&, httplib::Response& res) {
      res.set_content(recommend_body_, "application/json");
    });
    server_.Get(R"(/user/get/(.+))", [this](const httplib::Request& req,
                                           httplib::Response& res) {
      ++user_hits_;
      if (req.matches[1] == "slow") {
        std::this_thread::sleep_for(std::chrono::milliseconds(400));
      }
      if (req.matches[1] == "flaky" && user_hits_ == 1) {
        res.status = 500;
        return;
      }
      res.set_content(R"({"user_id": ")" + std::string(req.matches[1]) +
                          R"(", "history": [], "segment": "b"})",
                      "application/json");
    });
    server_.Post("/user/update", [](const httplib::Request&, httplib::Response& res) {
      res.status = 500;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    config_ = ConfigFor(port_, dir_.path());
    config_.request_timeout_ms = 150;
  }

  void TearDown() override {
    server_.stop();
    thread_.join();
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  TempDir dir_;
  GatewayConfig config_;
  std::string recommend_body_;
  std::atomic<int> user_hits_{0};
};

TEST_F(FakeUpstream, TruncatesToConfiguredLengthInUpstreamOrder) {
  Json items = Json::array();
  for (int i = 0; i < 37; ++i) {
    // Deliberately not sorted by score.
    items.push_back({{"item_id", "x" + std::to_string(i)}, {"score", (i * 7) % 37}});
  }
  recommend_body_ = Json{{"items", items}}.dump();
  UpstreamClient client(config_);
  RecommendationList list = client.FetchRecommendations(UserProfile{"u", {}, {}});
  ASSERT_EQ(list.items.size(), 10u);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(list.items[i].item_id, "x" + std::to_string(i));
  }
}

TEST_F(FakeUpstream, UnparseableBodyIsMalformed) {
  recommend_body_ = "<html>oops</html>";
  UpstreamClient client(config_);
  try {
    client.FetchRecommendations(UserProfile{"u", {}, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUpstreamMalformed);
  }
  recommend_body_ = R"({"items": [{"score": 1}]})";
  EXPECT_THROW(client.FetchRecommendations(UserProfile{"u", {}, {}}), Error);
}

TEST_F(FakeUpstream, TimeoutIsUnavailableAfterOneRetry) {
  UpstreamClient client(config_);
  try {
    client.FetchUser("slow");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUpstreamUnavailable);
  }
  EXPECT_EQ(user_hits_, 2);
}

TEST_F(FakeUpstream, ServerErrorOnGetIsRetriedOnce) {
  UpstreamClient client(config_);
  UserProfile user = client.FetchUser("flaky");
  EXPECT_EQ(user.user_id, "flaky");
  EXPECT_EQ(user.extra.at("segment"), "b");
  EXPECT_EQ(user_hits_, 2);
}

TEST_F(FakeUpstream, FailedUserUpdateIsNotFatal) {
  UpstreamClient client(config_);
  EXPECT_FALSE(client.PushUserUpdate(UserProfile{"u", {}, {}}));
}

TEST(UpstreamClient, ConnectionRefusedIsUnavailable) {
  TempDir dir;
  // Bind and release a port so nothing serves it.
  int port = 0;
  {
    httplib::Server s;
    port = s.bind_to_any_port("127.0.0.1");
  }
  GatewayConfig config = ConfigFor(port, dir.path());
  config.request_timeout_ms = 100;
  UpstreamClient client(config);
  try {
    client.FetchItem("i01");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUpstreamUnavailable);
  }
}

TEST(UpstreamClient, EncodesPathSegments) {
  EXPECT_EQ(EncodePathSegment("i01"), "i01");
  EXPECT_EQ(EncodePathSegment("a b/c"), "a%20b%2Fc");
}

// ---------------------------------------------------------- dialogue flow

TEST(Gateway, RecommendationReplyCarriesExplainedList) {
  Stack stack;
  auto& gw = *stack.gateway;
  std::string sid = gw.OpenSession("u01");
  Reply r = gw.HandleMessage(sid, "recommend me something");
  ASSERT_EQ(r.payload_type, "rec_list");
  const Json& items = r.payload.at("items");
  ASSERT_EQ(items.size(), 10u);
  for (const auto& item : items) {
    EXPECT_TRUE(item.contains("explanation")) << item.dump();
    EXPECT_GE(item.at("final_score").get<double>(), 0.0);
    EXPECT_LE(item.at("final_score").get<double>(), 1.0);
  }
  EXPECT_EQ(r.text.rfind("Here are 10 picks for you:", 0), 0u) << r.text;
  EXPECT_TRUE(r.payload.contains("question"));

  // No stated preferences yet: the recommender's order survives re-ranking.
  UpstreamClient client(stack.config);
  RecommendationList upstream = client.FetchRecommendations(client.FetchUser("u01"));
  std::vector<std::string> expected;
  for (const auto& item : upstream.items) expected.push_back(item.item_id);
  EXPECT_EQ(Ids(r.payload), expected);

  Reply why = gw.HandleMessage(sid, "why the first one");
  ASSERT_EQ(why.payload_type, "explanation");
  EXPECT_EQ(why.payload.at("item_id"), expected[0]);
  EXPECT_FALSE(why.payload.at("contributions").empty());
}

TEST(Gateway, LikingAFeatureNeverDemotesItsItems) {
  Stack stack;
  auto& gw = *stack.gateway;
  std::string sid = gw.OpenSession("u07");
  Reply before = gw.HandleMessage(sid, "recommend me something");
  gw.HandleMessage(sid, "i love drama");
  Reply after = gw.HandleMessage(sid, "recommend me something");
  auto b = Ids(before.payload);
  auto a = Ids(after.payload);
  ASSERT_EQ(std::set<std::string>(a.begin(), a.end()),
            std::set<std::string>(b.begin(), b.end()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!gw.GetItem(b[i]).HasFeature("genre=drama")) continue;
    auto pos = std::find(a.begin(), a.end(), b[i]) - a.begin();
    EXPECT_LE(static_cast<std::size_t>(pos), i) << b[i];
  }
}

TEST(Gateway, AnsweringAQuestionFiltersCandidates) {
  Stack stack;
  auto& gw = *stack.gateway;
  std::string sid = gw.OpenSession("u02");
  Reply r = gw.HandleMessage(sid, "recommend me something");
  ASSERT_TRUE(r.payload.contains("question"));
  std::string feature = r.payload.at("question").at("feature");
  Reply yes = gw.HandleMessage(sid, "yes");
  ASSERT_EQ(yes.payload_type, "rec_list");
  for (const auto& id : Ids(yes.payload)) {
    EXPECT_TRUE(gw.GetItem(id).HasFeature(feature)) << id;
  }
  EXPECT_LT(yes.payload.at("items").size(), r.payload.at("items").size());
  Reply again = gw.HandleMessage(sid, "yes");
  EXPECT_EQ(again.text, Messages().Render("no_question"));
}

TEST(Gateway, UnknownReferencesAndSessions) {
  Stack stack;
  auto& gw = *stack.gateway;
  std::string sid = gw.OpenSession("u01");
  Reply r = gw.HandleMessage(sid, "tell me about the fifth one");
  EXPECT_EQ(r.text, Messages().Render("item_unknown", {{"ref", "fifth"}}));
  EXPECT_EQ(gw.HandleMessage(sid, "asdf qwerty").text, Messages().Render("fallback"));
  try {
    gw.HandleMessage("no-such-session", "hi");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSessionNotFound);
  }
  try {
    gw.OpenSession("nobody");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST(Gateway, UpstreamOutageBecomesServiceUnavailableReply) {
  Stack stack;
  auto& gw = *stack.gateway;
  std::string sid = gw.OpenSession("u01");
  stack.backend->set_unavailable(true);
  Reply r = gw.HandleMessage(sid, "recommend me something");
  EXPECT_EQ(r.text, Messages().Render("service_unavailable"));
  EXPECT_EQ(r.payload_type, "none");
  stack.backend->set_unavailable(false);
  EXPECT_EQ(gw.HandleMessage(sid, "recommend me something").payload_type, "rec_list");
}

TEST(Gateway, ItemDetailsUseDescriptionOnlyWhenEnabled) {
  for (bool enabled : {true, false}) {
    StackOptions opts;
    opts.item_desc_enabled = enabled;
    Stack stack(opts);
    auto& gw = *stack.gateway;
    std::string sid = gw.OpenSession("u01");
    Reply list = gw.HandleMessage(sid, "recommend me something");
    std::string id;
    for (const auto& candidate : Ids(list.payload)) {
      if (gw.GetItem(candidate).description) {
        id = candidate;
        break;
      }
    }
    ASSERT_FALSE(id.empty());
    auto ids = Ids(list.payload);
    auto rank = std::find(ids.begin(), ids.end(), id) - ids.begin() + 1;
    const char* ordinals[] = {"", "first", "second", "third", "fourth", "fifth",
                              "sixth", "seventh", "eighth", "ninth", "tenth"};
    Reply r = gw.HandleMessage(sid, std::string("tell me about the ") + ordinals[rank] + " one");
    ASSERT_EQ(r.payload_type, "item_details");
    ItemProfile item = gw.GetItem(id);
    EXPECT_EQ(r.payload.contains("description"), enabled);
    if (enabled) {
      EXPECT_NE(r.text.find(*item.description), std::string::npos);
    } else {
      EXPECT_NE(r.text.find(item.features[0].category() + ": " + item.features[0].value()),
                std::string::npos);
    }
  }
}

TEST(Gateway, ItemPreferencePushesOneUserUpdateWhenEnabled) {
  for (bool enabled : {true, false}) {
    StackOptions opts;
    opts.user_update_enabled = enabled;
    Stack stack(opts);
    auto& gw = *stack.gateway;
    std::string sid = gw.OpenSession("u03");
    Reply list = gw.HandleMessage(sid, "recommend me something");
    std::string first = Ids(list.payload)[0];
    Reply r = gw.HandleMessage(sid, "i like the first one");
    EXPECT_EQ(r.payload_type, "preference");
    EXPECT_EQ(stack.backend->user_update_count(), enabled ? 1 : 0);
    auto user = stack.backend->FindUser("u03");
    ASSERT_TRUE(user.has_value());
    EXPECT_EQ(user->history.back().item_id == first, enabled);
  }
}

TEST(Gateway, ItemVectorCacheMatchesRecomputation) {
  Stack stack;
  auto& gw = *stack.gateway;
  UpstreamClient client(stack.config);
  for (const char* id : {"i01", "i17", "i42", "i60"}) {
    EXPECT_EQ(gw.GetItemVector(id), VectorizeItem(gw.model(), client.FetchItem(id)));
  }
}

TEST(Gateway, CorpusSnapshotReplacesItemAll) {
  TempDir dir;
  Stack stack;
  GatewayConfig config = stack.config;
  config.corpus_snapshot_path = testing::DataDir() / "corpus.json";
  Gateway gw(config, {});
  gw.Initialize();
  EXPECT_EQ(gw.model().n_docs, stack.gateway->model().n_docs);
  EXPECT_EQ(gw.model().df, stack.gateway->model().df);
}

TEST(Gateway, RepliesRenderOnlyFromTheMessagesFile) {
  Stack stack;
  auto& gw = *stack.gateway;
  std::string sid = gw.OpenSession("u05");
  for (const char* text : {"recommend me something", "why the second one", "help",
                           "show me my profile", "i hate westerns", "no", "bye",
                           "recommend me something"}) {
    Reply r = gw.HandleMessage(sid, text);
    EXPECT_FALSE(r.text.empty()) << text;
    EXPECT_EQ(r.text.find_first_of("{}"), std::string::npos) << text;
  }
}

// ------------------------------------------------------------ persistence

TEST(Persistence, NoEventSessionPersistsDecayedStore) {
  Stack stack;
  const Timestamp ten_days_ago = kTestNow - 10 * kSecondsPerDay;
  stack.gateway->repository().Save(
      PreferenceStore{"u02", {{"genre=drama", 0.8}, {"actor=ana lima", -0.5},
                              {"genre=horror", 0.001}},
                      ten_days_ago});
  std::string sid = stack.gateway->OpenSession("u02");
  CloseSummary summary = stack.gateway->CloseSession(sid);
  EXPECT_EQ(summary.merged_features, 0);
  PreferenceStore stored = stack.gateway->repository().Load("u02", kTestNow);
  const double f = std::exp(-0.01 * 10);
  ASSERT_EQ(stored.weights.size(), 2u);  // 0.001 decays below the prune threshold
  EXPECT_NEAR(stored.weights.at("genre=drama"), 0.8 * f, 1e-9);
  EXPECT_NEAR(stored.weights.at("actor=ana lima"), -0.5 * f, 1e-9);
  EXPECT_EQ(stored.last_updated, kTestNow);
  EXPECT_EQ(stack.gateway->session_count(), 0u);
}

TEST(Persistence, LikeAddsPermanentStep) {
  Stack stack;
  stack.gateway->repository().Save(PreferenceStore{"u04", {{"genre=comedy", 0.3}}, kTestNow});
  std::string sid = stack.gateway->OpenSession("u04");
  stack.gateway->HandleMessage(sid, "i love comedy");
  EXPECT_EQ(stack.gateway->CloseSession(sid).merged_features, 1);
  PreferenceStore stored = stack.gateway->repository().Load("u04", kTestNow);
  EXPECT_NEAR(stored.weights.at("genre=comedy"), 0.5, 1e-12);
}

TEST(Persistence, ChatGoodbyeAndDeleteMergeOnce) {
  Stack stack;
  auto& gw = *stack.gateway;
  std::string sid = gw.OpenSession("u06");
  gw.HandleMessage(sid, "i don't like horror");
  Reply bye = gw.HandleMessage(sid, "bye");
  EXPECT_EQ(bye.payload.at("merged_features"), 1);
  EXPECT_EQ(gw.HandleMessage(sid, "recommend me something").text,
            Messages().Render("session_ended"));
  EXPECT_EQ(gw.CloseSession(sid).merged_features, 1);
  EXPECT_NEAR(gw.repository().Load("u06", kTestNow).weights.at("genre=horror"), -0.2, 1e-12);
  EXPECT_THROW(gw.CloseSession(sid), Error);
}

TEST(Persistence, ConcurrentClosesForDifferentUsers) {
  Stack stack;
  auto& gw = *stack.gateway;
  const std::vector<std::string> users = {"u01", "u02", "u03", "u04", "u05", "u06"};
  std::vector<std::string> sids;
  for (const auto& u : users) {
    sids.push_back(gw.OpenSession(u));
    gw.HandleMessage(sids.back(), "i love westerns");
  }
  std::vector<std::thread> threads;
  std::atomic<bool> go{false};
  for (const auto& sid : sids) {
    threads.emplace_back([&, sid] {
      while (!go) std::this_thread::yield();
      gw.CloseSession(sid);
    });
  }
  go = true;
  for (auto& t : threads) t.join();
  for (const auto& u : users) {
    EXPECT_NEAR(gw.repository().Load(u, kTestNow).weights.at("genre=western"), 0.2, 1e-12) << u;
  }
}

TEST(Persistence, ConcurrentSessionsOfOneUserBothLand) {
  Stack stack;
  auto& gw = *stack.gateway;
  std::string a = gw.OpenSession("u08");
  std::string b = gw.OpenSession("u08");
  gw.HandleMessage(a, "i love comedy");
  gw.HandleMessage(b, "i love drama");
  std::thread ta([&] { gw.CloseSession(a); });
  std::thread tb([&] { gw.CloseSession(b); });
  ta.join();
  tb.join();
  PreferenceStore stored = gw.repository().Load("u08", kTestNow);
  EXPECT_NEAR(stored.weights.at("genre=comedy"), 0.2, 1e-12);
  EXPECT_NEAR(stored.weights.at("genre=drama"), 0.2, 1e-12);
}

TEST(Persistence, CorruptStoreIsReportedNotOverwritten) {
  Stack stack;
  auto path = stack.gateway->repository().PathFor("u09");
  WriteFile(path, R"({"user_id": "u09", "weights": {"genre=comedy": 0.)");
  try {
    stack.gateway->OpenSession("u09");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPersistenceFailure);
  }
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(content, R"({"user_id": "u09", "weights": {"genre=comedy": 0.)");
}

TEST(PreferenceRepository, SaveLoadRoundTripLeavesNoTempFiles) {
  TempDir dir;
  PreferenceRepository repo(dir.path() / "prefs");
  PreferenceStore store{"../odd user/ü", {{"genre=comedy", 0.25}}, 42};
  repo.Save(store);
  EXPECT_EQ(repo.Load(store.user_id, 100), store);
  EXPECT_EQ(repo.PathFor(store.user_id).parent_path(), dir.path() / "prefs");
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir.path() / "prefs")) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".json") << e.path();
  }
  EXPECT_EQ(files, 1);
  EXPECT_EQ(repo.Load("absent", 7), (PreferenceStore{"absent", {}, 7}));
}

// ------------------------------------------------------------------- http

class HttpServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    service_ = std::make_unique<HttpService>(*stack_.gateway);
    int port = service_->Start("127.0.0.1", 0);
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port);
  }

  Stack stack_;
  std::unique_ptr<HttpService> service_;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(HttpServiceTest, SessionLifecycle) {
  auto health = client_->Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(ParseJson(health->body).at("status"), "ok");

  auto open = client_->Post("/session", R"({"user_id": "u01"})", "application/json");
  ASSERT_TRUE(open);
  ASSERT_EQ(open->status, 201);
  std::string sid = ParseJson(open->body).at("session_id");
  EXPECT_EQ(sid.size(), 32u);

  auto msg = client_->Post("/session/" + sid + "/message",
                           R"({"text": "recommend me something"})", "application/json");
  ASSERT_TRUE(msg);
  ASSERT_EQ(msg->status, 200);
  Json body = ParseJson(msg->body);
  EXPECT_EQ(body.at("payload_type"), "rec_list");
  EXPECT_FALSE(body.at("reply").get<std::string>().empty());

  msg = client_->Post("/session/" + sid + "/message", R"({"text": "i love comedy"})",
                      "application/json");
  ASSERT_TRUE(msg);

  auto close = client_->Delete("/session/" + sid);
  ASSERT_TRUE(close);
  EXPECT_EQ(close->status, 200);
  EXPECT_EQ(ParseJson(close->body).at("merged_features"), 1);

  auto gone = client_->Delete("/session/" + sid);
  ASSERT_TRUE(gone);
  EXPECT_EQ(gone->status, 404);
}

TEST_F(HttpServiceTest, ErrorStatuses) {
  auto r = client_->Post("/session", R"({"user_id": "nobody"})", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 404);
  r = client_->Post("/session", R"({"uid": "u01"})", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);
  r = client_->Post("/session", "not json", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);
  r = client_->Post("/session/deadbeef/message", R"({"text": "hi"})", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 404);
  EXPECT_EQ(ParseJson(r->body).at("error"), "SessionNotFound");

  stack_.backend->set_unavailable(true);
  r = client_->Post("/session", R"({"user_id": "u01"})", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 502);
}

TEST(HttpStatus, MapsErrorCodes) {
  EXPECT_EQ(HttpStatusFor(ErrorCode::kMissingField), 400);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kNotFound), 404);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kUpstreamUnavailable), 502);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kPersistenceFailure), 500);
}

}  // namespace
}  // namespace irf::gateway
