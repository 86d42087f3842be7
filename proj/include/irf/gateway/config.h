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

#ifndef IRF_GATEWAY_CONFIG_H_
#define IRF_GATEWAY_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>

#include "irf/dialogue/policy.h"
#include "irf/domain.h"
#include "irf/preference_manager.h"
#include "irf/reranker.h"

namespace irf::gateway {

struct GatewayConfig {
  std::string recommender_base_url;
  std::string user_service_base_url;
  std::string item_service_base_url;
  bool user_update_enabled = false;
  bool item_desc_enabled = false;
  int n_recommendations = 10;

  RerankConfig rerank;
  /// Weight of the history vector against stated preferences in
  /// explanations.
  double beta = 0.5;
  UpmConfig upm;
  int k_explain = 3;
  int k_profile = 10;
  dialogue::PolicyConfig policy;

  std::filesystem::path workspace_path;
  std::filesystem::path messages_path;
  std::filesystem::path persistence_path;
  /// When set, the item corpus is read from this file instead of the item
  /// service's item/all endpoint.
  std::optional<std::filesystem::path> corpus_snapshot_path;

  int request_timeout_ms = 2000;

  /// Throws Error(kInvalidArgument) naming the first bad field.
  void Validate() const;
};

/// Relative paths are resolved against `base_dir`.
GatewayConfig GatewayConfigFromJson(const Json& doc,
                                    const std::filesystem::path& base_dir);
GatewayConfig LoadGatewayConfig(const std::filesystem::path& path);

/// An absolute http URL split into "http://host:port" and a path prefix
/// without a trailing slash (possibly empty).
struct BaseUrl {
  std::string origin;
  std::string path_prefix;
};

BaseUrl ParseBaseUrl(const std::string& url);

}  // namespace irf::gateway

#endif  // IRF_GATEWAY_CONFIG_H_
