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

#ifndef IRF_MOCK_MOCK_BACKEND_H_
#define IRF_MOCK_MOCK_BACKEND_H_

#include <atomic>
#include <optional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>

#include "irf/domain.h"
#include "irf/mock/corpus.h"
#include "irf/vectorizer.h"

namespace httplib {
class Server;
}

namespace irf::mock {

/// Scale of the scores the mock recommender reports.
enum class ScoreScale { kUnit, kHundred };

ScoreScale ParseScoreScale(std::string_view name);

/// Content-based stand-in recommender: every corpus item not in the user's
/// history, scored by max(0, cosine(history vector, item vector)), sorted by
/// score descending then item id. kHundred multiplies scores by 100.
RecommendationList MockRecommend(const UserProfile& profile,
                                 const TfIdfModel& model,
                                 const ItemCatalog& items,
                                 const std::map<std::string, FeatureVector>& item_vecs,
                                 ScoreScale scale = ScoreScale::kUnit);

/// Recommender, user data and item data services in one HTTP server:
///
///   POST recommend/get    GET user/get/{uid}    POST user/update
///   GET  item/get/{iid}   GET item/desc/{iid}   GET  item/all
class MockBackend {
 public:
  MockBackend(Corpus corpus, ScoreScale scale);
  ~MockBackend();

  MockBackend(const MockBackend&) = delete;
  MockBackend& operator=(const MockBackend&) = delete;

  /// Serves on a background thread; port 0 picks a free port. Returns the
  /// bound port.
  int Start(const std::string& host, int port);
  void Run(const std::string& host, int port);
  void Stop();

  /// When set, every endpoint answers 503.
  void set_unavailable(bool v) { unavailable_ = v; }
  int user_update_count() const { return user_updates_; }
  int recommend_count() const { return recommends_; }
  std::optional<UserProfile> FindUser(const std::string& user_id) const;

 private:
  void Routes();

  TfIdfModel model_;
  ItemCatalog items_;
  std::map<std::string, FeatureVector> item_vecs_;
  ScoreScale scale_;

  mutable std::mutex users_mu_;
  std::map<std::string, UserProfile> users_;

  std::atomic<bool> unavailable_{false};
  std::atomic<int> user_updates_{0};
  std::atomic<int> recommends_{0};

  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace irf::mock

#endif  // IRF_MOCK_MOCK_BACKEND_H_
