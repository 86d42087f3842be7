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

#include "irf/gateway/upstream_client.h"

#include <cctype>
#include <cstdio>

#include "httplib.h"
#include "spdlog/spdlog.h"

namespace irf::gateway {
namespace {

constexpr int kGetAttempts = 2;

httplib::Client MakeClient(const BaseUrl& base, int timeout_ms) {
  httplib::Client client(base.origin);
  const auto sec = timeout_ms / 1000;
  const auto usec = (timeout_ms % 1000) * 1000;
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);
  client.set_keep_alive(false);
  return client;
}

[[noreturn]] void Unavailable(const std::string& what) {
  throw Error(ErrorCode::kUpstreamUnavailable, what);
}

void CheckStatus(int status, const std::string& what) {
  if (status == 404) throw Error(ErrorCode::kNotFound, what);
  if (status < 200 || status >= 300) {
    Unavailable(what + " returned HTTP " + std::to_string(status));
  }
}

template <typename Fn>
auto ParseUpstream(const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedDocument ||
        e.code() == ErrorCode::kMissingField) {
      throw Error(ErrorCode::kUpstreamMalformed, what + ": " + e.what());
    }
    throw;
  }
}

}  // namespace

std::string EncodePathSegment(const std::string& segment) {
  std::string out;
  for (unsigned char c : segment) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      char buf[4];
      std::snprintf(buf, sizeof(buf), "%%%02X", c);
      out += buf;
    }
  }
  return out;
}

UpstreamClient::UpstreamClient(const GatewayConfig& config)
    : recommender_(ParseBaseUrl(config.recommender_base_url)),
      users_(ParseBaseUrl(config.user_service_base_url)),
      items_(ParseBaseUrl(config.item_service_base_url)),
      n_recommendations_(config.n_recommendations),
      timeout_ms_(config.request_timeout_ms) {}

UpstreamClient::Response UpstreamClient::Get(const BaseUrl& base,
                                             const std::string& path) const {
  const std::string target = base.path_prefix + path;
  std::string last_error;
  for (int attempt = 0; attempt < kGetAttempts; ++attempt) {
    auto client = MakeClient(base, timeout_ms_);
    auto res = client.Get(target);
    if (!res) {
      last_error = httplib::to_string(res.error());
    } else if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
    } else {
      return {res->status, res->body};
    }
    spdlog::warn("GET {}{} failed ({}), attempt {}/{}", base.origin, target,
                 last_error, attempt + 1, kGetAttempts);
  }
  Unavailable("GET " + target + ": " + last_error);
}

UpstreamClient::Response UpstreamClient::Post(const BaseUrl& base,
                                              const std::string& path,
                                              const std::string& body) const {
  const std::string target = base.path_prefix + path;
  auto client = MakeClient(base, timeout_ms_);
  auto res = client.Post(target, body, "application/json");
  if (!res) Unavailable("POST " + target + ": " + httplib::to_string(res.error()));
  return {res->status, res->body};
}

RecommendationList UpstreamClient::FetchRecommendations(
    const UserProfile& profile) const {
  auto res = Post(recommender_, "/recommend/get", ToJson(profile).dump());
  CheckStatus(res.status, "recommend/get");
  auto list = ParseUpstream("recommend/get",
                            [&] { return ParseRecommendationList(res.body); });
  if (list.items.size() > static_cast<std::size_t>(n_recommendations_)) {
    list.items.resize(static_cast<std::size_t>(n_recommendations_));
  }
  return list;
}

UserProfile UpstreamClient::FetchUser(const std::string& user_id) const {
  auto res = Get(users_, "/user/get/" + EncodePathSegment(user_id));
  CheckStatus(res.status, "user/get/" + user_id);
  return ParseUpstream("user/get", [&] { return ParseUserProfile(res.body); });
}

ItemProfile UpstreamClient::FetchItem(const std::string& item_id) const {
  auto res = Get(items_, "/item/get/" + EncodePathSegment(item_id));
  CheckStatus(res.status, "item/get/" + item_id);
  return ParseUpstream("item/get", [&] { return ParseItemProfile(res.body); });
}

std::string UpstreamClient::FetchItemDescription(const std::string& item_id) const {
  auto res = Get(items_, "/item/desc/" + EncodePathSegment(item_id));
  CheckStatus(res.status, "item/desc/" + item_id);
  return res.body;
}

std::vector<ItemProfile> UpstreamClient::FetchCorpus() const {
  auto res = Get(items_, "/item/all");
  CheckStatus(res.status, "item/all");
  return ParseUpstream("item/all", [&] {
    Json doc = ParseJson(res.body);
    if (!doc.is_object() || !doc.contains("items") || !doc["items"].is_array()) {
      throw Error(ErrorCode::kMalformedDocument, "expected {\"items\": [...]}");
    }
    std::vector<ItemProfile> items;
    for (const auto& item : doc["items"]) items.push_back(ItemProfileFromJson(item));
    return items;
  });
}

bool UpstreamClient::PushUserUpdate(const UserProfile& profile) const {
  try {
    auto res = Post(users_, "/user/update", ToJson(profile).dump());
    if (res.status >= 200 && res.status < 300) return true;
    spdlog::warn("user/update for {} returned HTTP {}", profile.user_id, res.status);
  } catch (const Error& e) {
    spdlog::warn("user/update for {} failed: {}", profile.user_id, e.what());
  }
  return false;
}

}  // namespace irf::gateway
