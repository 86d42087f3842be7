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

#ifndef IRF_GATEWAY_UPSTREAM_CLIENT_H_
#define IRF_GATEWAY_UPSTREAM_CLIENT_H_

#include <string>
#include <vector>

#include "irf/domain.h"
#include "irf/gateway/config.h"

namespace irf::gateway {

/// Client for the external recommender, user and item services:
///
///   POST recommend/get      user_profile -> rec_list
///   GET  user/get/{uid}     -> user_profile
///   POST user/update        user_profile (optional)
///   GET  item/get/{iid}     -> item_profile
///   GET  item/desc/{iid}    -> description text (optional)
///   GET  item/all           -> {"items": [item_profile]} (corpus bootstrap)
///
/// Transport failures and timeouts raise kUpstreamUnavailable, unparseable
/// bodies kUpstreamMalformed and 404s kNotFound. GETs are retried once on
/// transport errors and 5xx responses.
class UpstreamClient {
 public:
  explicit UpstreamClient(const GatewayConfig& config);

  /// Sends the full profile, extras included; keeps at most
  /// n_recommendations items in upstream order.
  RecommendationList FetchRecommendations(const UserProfile& profile) const;
  UserProfile FetchUser(const std::string& user_id) const;
  ItemProfile FetchItem(const std::string& item_id) const;
  std::string FetchItemDescription(const std::string& item_id) const;
  std::vector<ItemProfile> FetchCorpus() const;

  /// Fire-and-forget: failures are logged and reported as false.
  bool PushUserUpdate(const UserProfile& profile) const;

 private:
  struct Response {
    int status = 0;
    std::string body;
  };

  Response Get(const BaseUrl& base, const std::string& path) const;
  Response Post(const BaseUrl& base, const std::string& path,
                const std::string& body) const;

  BaseUrl recommender_;
  BaseUrl users_;
  BaseUrl items_;
  int n_recommendations_;
  int timeout_ms_;
};

/// Percent-encodes everything outside the RFC 3986 unreserved set.
std::string EncodePathSegment(const std::string& segment);

}  // namespace irf::gateway

#endif  // IRF_GATEWAY_UPSTREAM_CLIENT_H_
