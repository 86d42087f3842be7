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

#include "irf/gateway/gateway.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "irf/explainer.h"
#include "irf/preference_manager.h"
#include "irf/question_generator.h"
#include "irf/reranker.h"
#include "spdlog/spdlog.h"

namespace irf::gateway {

using dialogue::Decision;
using dialogue::DialogueState;
using dialogue::Slots;

namespace {

std::string Fixed(double v, int digits = 3) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string FeatureLabel(const std::string& key) {
  auto pos = key.find('=');
  if (pos == std::string::npos) return key;
  return key.substr(pos + 1) + " (" + key.substr(0, pos) + ")";
}

std::string NewSessionId() {
  static thread_local std::random_device rd;
  std::string id;
  for (int i = 0; i < 16; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof(buf), "%02x", static_cast<unsigned>(rd() & 0xff));
    id += buf;
  }
  return id;
}

std::vector<ItemProfile> LoadSnapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  Json doc = ParseJson(ss.str());
  if (!doc.is_object() || !doc.contains("items") || !doc["items"].is_array()) {
    throw Error(ErrorCode::kMalformedDocument, "corpus snapshot needs an items list");
  }
  std::vector<ItemProfile> items;
  for (const auto& item : doc["items"]) items.push_back(ItemProfileFromJson(item));
  return items;
}

}  // namespace

Timestamp SystemNow() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

struct Gateway::Session {
  std::mutex mu;
  std::string id;
  std::string user_id;
  DialogueState state;
  SessionProfile profile;
  Timestamp created_at = 0;
  bool merged = false;
  int merged_features = 0;
};

// Executes the actions of one dialogue turn and accumulates the reply.
class Gateway::Turn {
 public:
  Turn(Gateway& gw, Session& session) : gw_(gw), s_(session) {}

  Reply Run(const std::string& text) {
    auto nlu = dialogue::Classify(text, gw_.workspace_);
    Decision decision;
    try {
      decision = dialogue::NextAction(s_.state, nlu, gw_.config_.policy);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnknownItemReference) throw;
      ++s_.state.turn_count;
      Line("item_unknown", {{"ref", e.detail()}});
      return Finish();
    }
    next_ = std::move(decision.state);
    try {
      for (const auto& action : decision.actions) {
        std::visit([this](const auto& a) { Do(a); }, action);
      }
    } catch (const Error& e) {
      std::string key;
      Slots slots;
      if (e.code() == ErrorCode::kUpstreamUnavailable ||
          e.code() == ErrorCode::kUpstreamMalformed) {
        key = "service_unavailable";
      } else if (e.code() == ErrorCode::kNotFound) {
        key = "item_unknown";
        slots["ref"] = e.detail();
      } else {
        throw;
      }
      spdlog::warn("session {}: {}", s_.id, e.what());
      ++s_.state.turn_count;
      lines_.clear();
      reply_ = Reply{};
      Line(key, slots);
      return Finish();
    }
    s_.state = std::move(next_);
    return Finish();
  }

 private:
  void Line(std::string_view key, const Slots& slots = {}) {
    lines_.push_back(gw_.messages_.Render(key, slots));
  }

  Reply Finish() {
    std::string text;
    for (const auto& l : lines_) {
      if (!text.empty()) text.push_back('\n');
      text += l;
    }
    reply_.text = std::move(text);
    return std::move(reply_);
  }

  std::string Title(const std::string& item_id) {
    return gw_.GetItem(item_id).title;
  }

  std::string ContributionList(const Explanation& e, bool with_scores) {
    std::string out;
    for (const auto& c : e.contributions) {
      if (!out.empty()) out += ", ";
      out += FeatureLabel(c.feature);
      if (with_scores) out += " " + Fixed(c.score);
    }
    return out;
  }

  // Renders a list's lines and sets it as the rec_list payload.
  void ShowList(const RecommendationList& list) {
    Json items = Json::array();
    int rank = 0;
    for (const auto& item : list.items) {
      ++rank;
      std::string reason;
      if (item.explanation && !item.explanation->contributions.empty()) {
        reason = gw_.messages_.Render(
            "rec_item_reason", {{"features", ContributionList(*item.explanation, false)}});
      }
      std::string title = Title(item.item_id);
      Line("rec_item_line", {{"rank", std::to_string(rank)},
                             {"title", title},
                             {"score", Fixed(item.final_score.value_or(0.0))},
                             {"reason", reason}});
      Json entry = {{"rank", rank},
                    {"item_id", item.item_id},
                    {"title", title},
                    {"rec_score", item.rec_score},
                    {"final_score", item.final_score.value_or(0.0)}};
      if (item.explanation) entry["explanation"] = ToJson(*item.explanation);
      items.push_back(std::move(entry));
    }
    reply_.payload_type = "rec_list";
    reply_.payload = Json{{"items", std::move(items)}};
  }

  void Do(const dialogue::RecommendAction&) {
    RecommendationList list = gw_.RecommendFlow(s_);
    next_.candidates = list;
    next_.last_list_shown = list;
    if (list.items.empty()) {
      next_.phase = dialogue::Phase::kRecommending;
      Line("no_recommendations");
      reply_.payload_type = "rec_list";
      reply_.payload = Json{{"items", Json::array()}};
      return;
    }
    Line("rec_header", {{"n", std::to_string(list.items.size())}});
    ShowList(list);
    auto profiles = gw_.ProfilesOf(list);
    Decision after = dialogue::AfterRecommend(std::move(next_), profiles,
                                              gw_.config_.policy);
    next_ = std::move(after.state);
    for (const auto& action : after.actions) {
      std::visit([this](const auto& a) { Do(a); }, action);
    }
  }

  void Do(const dialogue::AskQuestionAction& a) {
    auto f = Feature::FromKey(a.question.feature);
    Line("ask_question", {{"category", f.category()}, {"value", f.value()}});
    reply_.payload["question"] = {{"feature", a.question.feature},
                                  {"gain", a.question.gain},
                                  {"candidate_count", a.question.candidate_count}};
  }

  void Do(const dialogue::ExplainAction& a) {
    const ScoredItem* item =
        next_.last_list_shown ? next_.last_list_shown->Find(a.item_id) : nullptr;
    std::string title = Title(a.item_id);
    Explanation e = item && item->explanation ? *item->explanation
                                              : Explanation{a.item_id, {}, std::nullopt};
    if (!e.contributions.empty()) {
      Line("explain_line", {{"title", title}, {"features", ContributionList(e, true)}});
    } else if (e.rendered) {
      lines_.push_back(*e.rendered);
    } else {
      Line("explain_none", {{"title", title}});
    }
    reply_.payload_type = "explanation";
    reply_.payload = ToJson(e);
    reply_.payload["title"] = title;
  }

  void Do(const dialogue::ShowProfileAction&) {
    UserProfile user = gw_.upstream_.FetchUser(s_.user_id);
    FeatureVector history;
    {
      std::shared_lock lock(gw_.items_mu_);
      history = VectorizeHistory(gw_.model_, user, gw_.items_);
    }
    ProfileView view = MakeProfileView(history.entries(), s_.profile.temp_weights,
                                       gw_.config_.k_profile);
    Json entries = Json::array();
    if (view.entries.empty()) {
      Line("profile_empty");
    } else {
      Line("profile_header");
    }
    for (const auto& e : view.entries) {
      Line("profile_line", {{"feature", FeatureLabel(e.feature)},
                            {"weight", Fixed(e.weight)},
                            {"source", std::string(ToString(e.source))}});
      entries.push_back({{"feature", e.feature},
                         {"weight", e.weight},
                         {"source", std::string(ToString(e.source))}});
    }
    reply_.payload_type = "profile";
    reply_.payload = Json{{"entries", std::move(entries)}};
  }

  void Do(const dialogue::ItemDetailsAction& a) {
    ItemProfile item = gw_.GetItem(a.item_id);
    std::optional<std::string> description;
    if (gw_.config_.item_desc_enabled) {
      try {
        description = gw_.upstream_.FetchItemDescription(a.item_id);
      } catch (const Error& e) {
        spdlog::warn("item/desc/{}: {}", a.item_id, e.what());
      }
    }
    std::string details;
    if (description) {
      details = *description;
    } else {
      for (const auto& f : item.features) {
        if (!details.empty()) details += ", ";
        details += f.category() + ": " + f.value();
      }
    }
    Line("item_details", {{"title", item.title}, {"details", details}});
    reply_.payload_type = "item_details";
    reply_.payload = Json{{"item", ToJson(item)}};
    if (description) reply_.payload["description"] = *description;
  }

  void Ack(const std::string& what, Polarity p, Json payload) {
    Line("ack_preference",
         {{"polarity", gw_.messages_.Render(p == Polarity::kLike ? "polarity_like"
                                                                : "polarity_dislike")},
          {"feature", what}});
    reply_.payload_type = "preference";
    reply_.payload = std::move(payload);
  }

  void Do(const dialogue::RecordFeaturePrefAction& a) {
    s_.profile = ApplyFeaturePreference(std::move(s_.profile), a.feature, a.polarity,
                                        gw_.clock_(), gw_.config_.upm);
    Ack(FeatureLabel(a.feature.key()), a.polarity,
        {{"feature", a.feature.key()},
         {"polarity", static_cast<int>(a.polarity)},
         {"weight", s_.profile.temp_weights.contains(a.feature.key())
                        ? s_.profile.temp_weights.at(a.feature.key())
                        : 0.0}});
  }

  void Do(const dialogue::RecordItemPrefAction& a) {
    ItemProfile item = gw_.GetItem(a.item_id);
    const Timestamp now = gw_.clock_();
    auto result = ApplyItemPreference(std::move(s_.profile), item, a.polarity, now,
                                      gw_.config_.upm);
    s_.profile = std::move(result.value);
    if (result.warning) {
      spdlog::warn("session {}: item {} has no features", s_.id, item.item_id);
    }
    if (gw_.config_.user_update_enabled) {
      try {
        UserProfile user = gw_.upstream_.FetchUser(s_.user_id);
        user.history.push_back({item.item_id, Sign(a.polarity), now});
        gw_.upstream_.PushUserUpdate(user);
      } catch (const Error& e) {
        spdlog::warn("session {}: user update skipped: {}", s_.id, e.what());
      }
    }
    Ack(item.title, a.polarity,
        {{"item_id", item.item_id}, {"polarity", static_cast<int>(a.polarity)}});
  }

  void Do(const dialogue::ApplyAnswerAction& a) {
    auto profiles = gw_.ProfilesOf(s_.state.candidates);
    AnswerOutcome outcome = ApplyAnswer(profiles, a.feature, a.answer);
    if (outcome.polarity) {
      s_.profile = ApplyFeaturePreference(std::move(s_.profile),
                                          Feature::FromKey(a.feature),
                                          *outcome.polarity, gw_.clock_(),
                                          gw_.config_.upm);
    }
    std::set<std::string> kept;
    for (const auto& p : outcome.candidates) kept.insert(p.item_id);
    RecommendationList filtered;
    for (const auto& item : s_.state.candidates.items) {
      if (kept.contains(item.item_id)) filtered.items.push_back(item);
    }
    filtered = gw_.RerankCandidates(s_, std::move(filtered));
    next_.candidates = filtered;
    next_.last_list_shown = filtered;
    Line(outcome.warning ? "answer_kept" : "answer_applied",
         {{"n", std::to_string(filtered.items.size())}});
    ShowList(filtered);
  }

  void Do(const dialogue::CloseSessionAction&) {
    int merged = gw_.MergeAndPersist(s_);
    Line("goodbye", {{"merged", std::to_string(merged)}});
    reply_.payload_type = "session_closed";
    reply_.payload = Json{{"merged_features", merged}};
  }

  void Do(const dialogue::HelpAction& a) {
    using Reason = dialogue::HelpAction::Reason;
    switch (a.reason) {
      case Reason::kFallback: Line("fallback"); break;
      case Reason::kMissingFeature: Line("feature_missing"); break;
      case Reason::kRequested: Line("help"); break;
      case Reason::kOutOfContext: Line("no_question"); break;
    }
  }

  void Do(const dialogue::SessionEndedAction&) { Line("session_ended"); }

  Gateway& gw_;
  Session& s_;
  DialogueState next_;
  std::vector<std::string> lines_;
  Reply reply_;
};

Gateway::Gateway(GatewayConfig config, dialogue::Workspace workspace,
                 dialogue::MessageCatalog messages, Options options)
    : config_(std::move(config)),
      workspace_(std::move(workspace)),
      messages_(std::move(messages)),
      clock_(std::move(options.clock)),
      upstream_(config_),
      repository_(config_.persistence_path, options.fault) {
  config_.Validate();
}

Gateway::Gateway(GatewayConfig config, Options options)
    : Gateway(config, dialogue::Workspace::Load(config.workspace_path),
              dialogue::MessageCatalog::Load(config.messages_path),
              std::move(options)) {}

void Gateway::Initialize() {
  std::vector<ItemProfile> corpus = config_.corpus_snapshot_path
                                        ? LoadSnapshot(*config_.corpus_snapshot_path)
                                        : upstream_.FetchCorpus();
  model_ = BuildModel(corpus);
  std::vector<std::pair<std::string, std::vector<std::string>>> titles;
  std::unique_lock lock(items_mu_);
  for (auto& item : corpus) {
    if (!item.title.empty()) titles.push_back({item.item_id, {item.title}});
    item_vecs_[item.item_id] = VectorizeItem(model_, item);
    items_[item.item_id] = std::move(item);
  }
  workspace_ = workspace_.WithEntityValues(std::string(dialogue::kItemEntity), titles);
  spdlog::info("corpus loaded: {} items, {} distinct features", model_.n_docs,
               model_.df.size());
}

ItemProfile Gateway::GetItem(const std::string& item_id) {
  {
    std::shared_lock lock(items_mu_);
    auto it = items_.find(item_id);
    if (it != items_.end()) return it->second;
  }
  ItemProfile item = upstream_.FetchItem(item_id);
  std::unique_lock lock(items_mu_);
  item_vecs_[item_id] = VectorizeItem(model_, item);
  return items_.insert_or_assign(item_id, std::move(item)).first->second;
}

FeatureVector Gateway::GetItemVector(const std::string& item_id) {
  {
    std::shared_lock lock(items_mu_);
    auto it = item_vecs_.find(item_id);
    if (it != item_vecs_.end()) return it->second;
  }
  GetItem(item_id);
  std::shared_lock lock(items_mu_);
  return item_vecs_.at(item_id);
}

std::vector<ItemProfile> Gateway::ProfilesOf(const RecommendationList& list) {
  std::vector<ItemProfile> out;
  for (const auto& item : list.items) out.push_back(GetItem(item.item_id));
  return out;
}

RecommendationList Gateway::RerankCandidates(const Session& session,
                                             RecommendationList list) {
  std::map<std::string, FeatureVector> vecs;
  for (const auto& item : list.items) vecs[item.item_id] = GetItemVector(item.item_id);
  FeatureVector pref = VectorizePreferences(model_, session.profile.temp_weights);
  return Rerank(std::move(list), pref, vecs, config_.rerank);
}

RecommendationList Gateway::RecommendFlow(const Session& session) {
  UserProfile user = upstream_.FetchUser(session.user_id);
  RecommendationList upstream = upstream_.FetchRecommendations(user);

  // Items the item service does not know cannot be vectorized or shown.
  RecommendationList known;
  for (auto& item : upstream.items) {
    try {
      GetItem(item.item_id);
      known.items.push_back(std::move(item));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotFound) throw;
      spdlog::warn("recommended item {} unknown to item service", item.item_id);
    }
  }
  RecommendationList ranked = RerankCandidates(session, std::move(known));

  FeatureVector history;
  {
    std::shared_lock lock(items_mu_);
    history = VectorizeHistory(model_, user, items_);
  }
  FeatureVector pref = VectorizePreferences(model_, session.profile.temp_weights);
  for (auto& item : ranked.items) {
    if (!NeedsExplanation(item)) continue;
    item.explanation = Explain(item.item_id, GetItemVector(item.item_id), history,
                               pref, config_.beta, config_.k_explain);
    if (!item.explanation->contributions.empty()) {
      std::string features;
      for (const auto& c : item.explanation->contributions) {
        if (!features.empty()) features += ", ";
        features += FeatureLabel(c.feature) + " " + Fixed(c.score);
      }
      item.explanation->rendered = messages_.Render(
          "explain_line", {{"title", GetItem(item.item_id).title}, {"features", features}});
    }
  }
  return ranked;
}

std::string Gateway::OpenSession(const std::string& user_id) {
  upstream_.FetchUser(user_id);  // 404s for unknown users

  auto session = std::make_shared<Session>();
  session->id = NewSessionId();
  session->user_id = user_id;
  const Timestamp now = clock_();
  session->created_at = now;
  {
    std::lock_guard user_lock(repository_.UserLock(user_id));
    PreferenceStore permanent = repository_.Load(user_id, now);
    auto decayed = GetPermanent(permanent, now, config_.upm);
    if (decayed.warning) {
      spdlog::warn("user {}: stored preferences are newer than the clock", user_id);
    }
    session->profile = irf::OpenSession(session->id, permanent, now, config_.upm);
  }
  std::lock_guard lock(sessions_mu_);
  while (sessions_.contains(session->id)) session->id = NewSessionId();
  session->profile.session_id = session->id;
  sessions_[session->id] = session;
  return session->id;
}

std::shared_ptr<Gateway::Session> Gateway::FindSession(
    const std::string& session_id) const {
  std::lock_guard lock(sessions_mu_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw Error(ErrorCode::kSessionNotFound, session_id);
  return it->second;
}

std::size_t Gateway::session_count() const {
  std::lock_guard lock(sessions_mu_);
  return sessions_.size();
}

Reply Gateway::HandleMessage(const std::string& session_id, const std::string& text) {
  auto session = FindSession(session_id);
  std::lock_guard lock(session->mu);
  try {
    return Turn(*this, *session).Run(text);
  } catch (const std::exception& e) {
    spdlog::error("session {}: turn failed: {}", session_id, e.what());
    return Reply{messages_.Render("error_generic"), "none", nullptr};
  }
}

int Gateway::MergeAndPersist(Session& session) {
  if (session.merged) return session.merged_features;
  auto resolve = [this](const std::string& id) -> const ItemProfile* {
    std::shared_lock lock(items_mu_);
    auto it = items_.find(id);
    // Cached items are never erased, so the pointer outlives the lock.
    return it == items_.end() ? nullptr : &it->second;
  };
  std::lock_guard user_lock(repository_.UserLock(session.user_id));
  for (int attempt = 0;; ++attempt) {
    try {
      const Timestamp now = clock_();
      PreferenceStore permanent = repository_.Load(session.user_id, now);
      MergeResult merged = irf::CloseSession(session.profile, permanent, now,
                                             config_.upm, resolve);
      repository_.Save(merged.store);
      session.merged = true;
      session.merged_features = merged.merged_features;
      return merged.merged_features;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPersistenceFailure || attempt > 0) throw;
      spdlog::warn("session {}: merge failed, retrying: {}", session.id, e.what());
    }
  }
}

CloseSummary Gateway::CloseSession(const std::string& session_id) {
  auto session = FindSession(session_id);
  std::lock_guard lock(session->mu);
  CloseSummary summary{MergeAndPersist(*session)};
  std::lock_guard sessions_lock(sessions_mu_);
  sessions_.erase(session_id);
  return summary;
}

}  // namespace irf::gateway
