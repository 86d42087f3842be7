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

#include "irf/gateway/config.h"

#include <fstream>
#include <sstream>

namespace irf::gateway {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

template <typename T>
void Read(const Json& doc, const char* field, T& out) {
  auto it = doc.find(field);
  if (it == doc.end() || it->is_null()) return;
  try {
    out = it->get<T>();
  } catch (const Json::exception&) {
    throw Error(ErrorCode::kMalformedDocument, std::string("config field ") + field);
  }
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

}  // namespace

BaseUrl ParseBaseUrl(const std::string& url) {
  constexpr std::string_view kScheme = "http://";
  if (!url.starts_with(kScheme)) {
    Invalid("service URL must be an absolute http:// URL: " + url);
  }
  auto slash = url.find('/', kScheme.size());
  BaseUrl out;
  out.origin = url.substr(0, slash);
  if (out.origin.size() == kScheme.size()) Invalid("service URL has no host: " + url);
  if (slash != std::string::npos) {
    out.path_prefix = url.substr(slash);
    while (!out.path_prefix.empty() && out.path_prefix.back() == '/') {
      out.path_prefix.pop_back();
    }
  }
  return out;
}

void GatewayConfig::Validate() const {
  ParseBaseUrl(recommender_base_url);
  ParseBaseUrl(user_service_base_url);
  ParseBaseUrl(item_service_base_url);
  if (n_recommendations <= 0) Invalid("n_recommendations must be positive");
  rerank.Validate();
  if (!(beta >= 0.0 && beta <= 1.0)) Invalid("beta must be in [0,1]");
  upm.Validate();
  if (k_explain <= 0) Invalid("k_explain must be positive");
  if (k_profile <= 0) Invalid("k_profile must be positive");
  if (policy.ask_threshold < 0) Invalid("ask_threshold must be >= 0");
  if (request_timeout_ms <= 0) Invalid("request_timeout_ms must be positive");
  if (workspace_path.empty()) Invalid("workspace_path is required");
  if (messages_path.empty()) Invalid("messages_path is required");
  if (persistence_path.empty()) Invalid("persistence_path is required");
}

GatewayConfig GatewayConfigFromJson(const Json& doc,
                                    const std::filesystem::path& base_dir) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "config must be an object");
  }
  GatewayConfig c;
  Read(doc, "recommender_base_url", c.recommender_base_url);
  Read(doc, "user_service_base_url", c.user_service_base_url);
  Read(doc, "item_service_base_url", c.item_service_base_url);
  Read(doc, "user_update_enabled", c.user_update_enabled);
  Read(doc, "item_desc_enabled", c.item_desc_enabled);
  Read(doc, "n_recommendations", c.n_recommendations);
  Read(doc, "alpha", c.rerank.alpha);
  Read(doc, "beta", c.beta);
  Read(doc, "w_session", c.upm.w_session);
  Read(doc, "w_perm", c.upm.w_perm);
  Read(doc, "lambda", c.upm.lambda);
  Read(doc, "epsilon_prune", c.upm.epsilon_prune);
  Read(doc, "k_explain", c.k_explain);
  Read(doc, "k_profile", c.k_profile);
  Read(doc, "ask_threshold", c.policy.ask_threshold);
  Read(doc, "request_timeout_ms", c.request_timeout_ms);
  std::string path;
  if (Read(doc, "workspace_path", path); !path.empty()) {
    c.workspace_path = Resolve(base_dir, path);
  }
  path.clear();
  if (Read(doc, "messages_path", path); !path.empty()) {
    c.messages_path = Resolve(base_dir, path);
  }
  path.clear();
  if (Read(doc, "persistence_path", path); !path.empty()) {
    c.persistence_path = Resolve(base_dir, path);
  }
  path.clear();
  if (Read(doc, "corpus_snapshot_path", path); !path.empty()) {
    c.corpus_snapshot_path = Resolve(base_dir, path);
  }
  c.Validate();
  return c;
}

GatewayConfig LoadGatewayConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return GatewayConfigFromJson(ParseJson(ss.str()),
                               std::filesystem::absolute(path).parent_path());
}

}  // namespace irf::gateway
