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

#ifndef IRF_GATEWAY_GATEWAY_H_
#define IRF_GATEWAY_GATEWAY_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "irf/dialogue/message_catalog.h"
#include "irf/dialogue/policy.h"
#include "irf/dialogue/workspace.h"
#include "irf/domain.h"
#include "irf/gateway/config.h"
#include "irf/gateway/preference_repository.h"
#include "irf/gateway/upstream_client.h"
#include "irf/vectorizer.h"

namespace irf::gateway {

using Clock = std::function<Timestamp()>;

/// Wall clock in whole seconds.
Timestamp SystemNow();

struct Reply {
  std::string text;
  /// "none", "rec_list", "explanation", "profile", "item_details",
  /// "preference" or "session_closed".
  std::string payload_type = "none";
  Json payload;
};

struct CloseSummary {
  int merged_features = 0;
};

/// The interactive layer in front of a plain recommender. Owns sessions,
/// runs each utterance through NLU and the dialogue policy, calls the
/// external services, re-ranks and explains, and persists learnt
/// preferences when a session closes.
///
/// Thread-safe. Turns of one session are serialized; different sessions run
/// concurrently.
class Gateway {
 public:
  struct Options {
    Clock clock = SystemNow;
    FaultPoint fault = FaultPoint::kNone;
  };

  Gateway(GatewayConfig config, dialogue::Workspace workspace,
          dialogue::MessageCatalog messages, Options options);
  Gateway(GatewayConfig config, Options options);

  Gateway(const Gateway&) = delete;
  Gateway& operator=(const Gateway&) = delete;

  /// Loads the item corpus and builds the TF-IDF model. Must be called once
  /// before any session is opened.
  void Initialize();

  /// Throws kNotFound for unknown users, kUpstreamUnavailable when the user
  /// service cannot be reached.
  std::string OpenSession(const std::string& user_id);

  /// Throws kSessionNotFound. Every other failure is turned into a rendered
  /// error reply.
  Reply HandleMessage(const std::string& session_id, const std::string& text);

  /// Merges and persists the session's preferences (unless the dialogue
  /// already did) and forgets the session. Throws kSessionNotFound or
  /// kPersistenceFailure (after one retry).
  CloseSummary CloseSession(const std::string& session_id);

  const GatewayConfig& config() const { return config_; }
  const TfIdfModel& model() const { return model_; }
  PreferenceRepository& repository() { return repository_; }
  std::size_t session_count() const;

  /// The cached profile and vector of an item, fetching it on a miss.
  ItemProfile GetItem(const std::string& item_id);
  FeatureVector GetItemVector(const std::string& item_id);

 private:
  struct Session;
  class Turn;

  std::shared_ptr<Session> FindSession(const std::string& session_id) const;
  int MergeAndPersist(Session& session);
  RecommendationList RecommendFlow(const Session& session);
  RecommendationList RerankCandidates(const Session& session,
                                      RecommendationList list);
  std::vector<ItemProfile> ProfilesOf(const RecommendationList& list);

  GatewayConfig config_;
  dialogue::Workspace workspace_;
  dialogue::MessageCatalog messages_;
  Clock clock_;
  UpstreamClient upstream_;
  PreferenceRepository repository_;
  TfIdfModel model_;

  mutable std::shared_mutex items_mu_;
  ItemCatalog items_;
  std::map<std::string, FeatureVector> item_vecs_;

  mutable std::mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace irf::gateway

#endif  // IRF_GATEWAY_GATEWAY_H_
