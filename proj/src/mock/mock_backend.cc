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

#include "irf/mock/mock_backend.h"

#include <algorithm>
#include <set>

#include "httplib.h"
#include "spdlog/spdlog.h"

namespace irf::mock {

namespace {

void SendJson(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, int status, const std::string& detail) {
  SendJson(res, status, {{"error", detail}});
}

}  // namespace

ScoreScale ParseScoreScale(std::string_view name) {
  if (name == "unit") return ScoreScale::kUnit;
  if (name == "hundred") return ScoreScale::kHundred;
  throw Error(ErrorCode::kInvalidArgument, "score scale must be unit or hundred");
}

RecommendationList MockRecommend(const UserProfile& profile, const TfIdfModel& model,
                                 const ItemCatalog& items,
                                 const std::map<std::string, FeatureVector>& item_vecs,
                                 ScoreScale scale) {
  const double factor = scale == ScoreScale::kHundred ? 100.0 : 1.0;
  FeatureVector history = VectorizeHistory(model, profile, items);
  std::set<std::string> seen;
  for (const auto& entry : profile.history) seen.insert(entry.item_id);

  RecommendationList out;
  for (const auto& [id, vec] : item_vecs) {
    if (seen.contains(id)) continue;
    out.items.push_back({id, std::max(0.0, Cosine(history, vec)) * factor,
                         std::nullopt, std::nullopt});
  }
  std::stable_sort(out.items.begin(), out.items.end(),
                   [](const ScoredItem& a, const ScoredItem& b) {
                     if (a.rec_score != b.rec_score) return a.rec_score > b.rec_score;
                     return a.item_id < b.item_id;
                   });
  return out;
}

MockBackend::MockBackend(Corpus corpus, ScoreScale scale)
    : scale_(scale), server_(std::make_unique<httplib::Server>()) {
  model_ = BuildModel(corpus.items);
  for (auto& item : corpus.items) {
    item_vecs_[item.item_id] = VectorizeItem(model_, item);
    items_[item.item_id] = std::move(item);
  }
  for (auto& user : corpus.users) users_[user.user_id] = std::move(user);
  Routes();
}

MockBackend::~MockBackend() { Stop(); }

std::optional<UserProfile> MockBackend::FindUser(const std::string& user_id) const {
  std::lock_guard lock(users_mu_);
  auto it = users_.find(user_id);
  if (it == users_.end()) return std::nullopt;
  return it->second;
}

void MockBackend::Routes() {
  server_->set_pre_routing_handler(
      [this](const httplib::Request&, httplib::Response& res) {
        if (!unavailable_) return httplib::Server::HandlerResponse::Unhandled;
        SendError(res, 503, "unavailable");
        return httplib::Server::HandlerResponse::Handled;
      });

  server_->Post("/recommend/get", [this](const httplib::Request& req,
                                         httplib::Response& res) {
    ++recommends_;
    UserProfile profile;
    try {
      profile = UserProfileFromJson(ParseJson(req.body));
    } catch (const Error& e) {
      return SendError(res, 400, e.what());
    }
    SendJson(res, 200,
             irf::ToJson(MockRecommend(profile, model_, items_, item_vecs_, scale_)));
  });

  server_->Get(R"(/user/get/(.+))", [this](const httplib::Request& req,
                                            httplib::Response& res) {
    auto user = FindUser(req.matches[1]);
    if (!user) return SendError(res, 404, "unknown user");
    SendJson(res, 200, irf::ToJson(*user));
  });

  server_->Post("/user/update", [this](const httplib::Request& req,
                                       httplib::Response& res) {
    UserProfile profile;
    try {
      profile = UserProfileFromJson(ParseJson(req.body));
    } catch (const Error& e) {
      return SendError(res, 400, e.what());
    }
    for (const auto& entry : profile.history) {
      if (!items_.contains(entry.item_id)) {
        return SendError(res, 400, "unknown item " + entry.item_id);
      }
    }
    std::lock_guard lock(users_mu_);
    auto it = users_.find(profile.user_id);
    if (it == users_.end()) return SendError(res, 404, "unknown user");
    it->second = std::move(profile);
    ++user_updates_;
    res.status = 204;
  });

  server_->Get(R"(/item/get/(.+))", [this](const httplib::Request& req,
                                            httplib::Response& res) {
    auto it = items_.find(req.matches[1]);
    if (it == items_.end()) return SendError(res, 404, "unknown item");
    SendJson(res, 200, irf::ToJson(it->second));
  });

  server_->Get(R"(/item/desc/(.+))", [this](const httplib::Request& req,
                                             httplib::Response& res) {
    auto it = items_.find(req.matches[1]);
    if (it == items_.end() || !it->second.description) {
      return SendError(res, 404, "no description");
    }
    res.status = 200;
    res.set_content(*it->second.description, "text/plain; charset=utf-8");
  });

  server_->Get("/item/all", [this](const httplib::Request&, httplib::Response& res) {
    Json items = Json::array();
    for (const auto& [id, item] : items_) items.push_back(irf::ToJson(item));
    SendJson(res, 200, {{"items", std::move(items)}});
  });
}

int MockBackend::Start(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    throw Error(ErrorCode::kInvalidArgument, "cannot bind " + host + ":" + std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void MockBackend::Run(const std::string& host, int port) {
  if (!server_->listen(host, port)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot bind " + host + ":" + std::to_string(port));
  }
}

void MockBackend::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace irf::mock
