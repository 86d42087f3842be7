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

#include "irf/domain.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace irf {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyFeatureSet: return "EmptyFeatureSet";
    case ErrorCode::kClockSkew: return "ClockSkew";
    case ErrorCode::kEmptyCandidates: return "EmptyCandidates";
    case ErrorCode::kWouldEmptyCandidates: return "WouldEmptyCandidates";
    case ErrorCode::kUnknownItemReference: return "UnknownItemReference";
    case ErrorCode::kUnknownMessageKey: return "UnknownMessageKey";
    case ErrorCode::kMissingSlot: return "MissingSlot";
    case ErrorCode::kUpstreamUnavailable: return "UpstreamUnavailable";
    case ErrorCode::kUpstreamMalformed: return "UpstreamMalformed";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kSessionNotFound: return "SessionNotFound";
    case ErrorCode::kPersistenceFailure: return "PersistenceFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(ToString(code)) +
                         (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(std::move(detail)) {}

std::string Canonicalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(uc)));
  }
  return out;
}

Feature::Feature(std::string category, std::string value)
    : category_(std::move(category)),
      value_(std::move(value)),
      key_(category_ + "=" + value_) {}

Feature Feature::Make(std::string_view category, std::string_view value) {
  std::string c = Canonicalize(category);
  std::string v = Canonicalize(value);
  if (c.empty() || v.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature category and value must be non-empty");
  }
  if (c.find('=') != std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature category must not contain '=': " + c);
  }
  return Feature(std::move(c), std::move(v));
}

Feature Feature::FromKey(std::string_view key) {
  auto pos = key.find('=');
  if (pos == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature key must be category=value: " + std::string(key));
  }
  return Make(key.substr(0, pos), key.substr(pos + 1));
}

bool ItemProfile::HasFeature(std::string_view key) const {
  auto it = std::lower_bound(
      features.begin(), features.end(), key,
      [](const Feature& f, std::string_view k) { return f.key() < k; });
  return it != features.end() && it->key() == key;
}

const ScoredItem* RecommendationList::Find(std::string_view item_id) const {
  for (const auto& item : items) {
    if (item.item_id == item_id) return &item;
  }
  return nullptr;
}

Json ParseJson(std::string_view raw) {
  try {
    return Json::parse(raw.begin(), raw.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, e.what());
  }
}

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

void RequireObject(const Json& doc, std::string_view what) {
  if (!doc.is_object()) Malformed(std::string(what) + " must be an object");
}

const Json& Required(const Json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end() || it->is_null()) {
    throw Error(ErrorCode::kMissingField, field);
  }
  return *it;
}

std::string RequiredString(const Json& doc, const char* field) {
  const Json& v = Required(doc, field);
  if (!v.is_string()) Malformed(std::string(field) + " must be a string");
  auto s = v.get<std::string>();
  if (s.empty()) Malformed(std::string(field) + " must be non-empty");
  return s;
}

std::optional<double> OptionalNumber(const Json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) Malformed(std::string(field) + " must be a number");
  return it->get<double>();
}

HistoryEntry HistoryEntryFromJson(const Json& doc) {
  RequireObject(doc, "history entry");
  HistoryEntry entry;
  entry.item_id = RequiredString(doc, "item");
  entry.score = OptionalNumber(doc, "score");
  if (auto ts = OptionalNumber(doc, "timestamp")) {
    if (*ts < 0) Malformed("timestamp must be >= 0");
    entry.timestamp = static_cast<Timestamp>(*ts);
  }
  return entry;
}

Json ToJson(const HistoryEntry& entry) {
  Json doc = {{"item", entry.item_id}};
  if (entry.score) doc["score"] = *entry.score;
  if (entry.timestamp) doc["timestamp"] = *entry.timestamp;
  return doc;
}

Explanation ExplanationFromJson(const Json& doc, const std::string& item_id) {
  Explanation e;
  e.item_id = item_id;
  if (doc.is_string()) {
    e.rendered = doc.get<std::string>();
    return e;
  }
  RequireObject(doc, "explanation");
  if (auto it = doc.find("contributions"); it != doc.end()) {
    if (!it->is_array()) Malformed("contributions must be an array");
    for (const auto& c : *it) {
      RequireObject(c, "contribution");
      auto score = OptionalNumber(c, "score");
      e.contributions.push_back({RequiredString(c, "feature"), score.value_or(0)});
    }
  }
  if (auto it = doc.find("rendered"); it != doc.end() && it->is_string()) {
    e.rendered = it->get<std::string>();
  }
  return e;
}

}  // namespace

UserProfile UserProfileFromJson(const Json& doc) {
  RequireObject(doc, "user_profile");
  UserProfile profile;
  profile.user_id = RequiredString(doc, "user_id");
  const Json& history = Required(doc, "history");
  if (!history.is_array()) Malformed("history must be an array");
  for (const auto& entry : history) {
    profile.history.push_back(HistoryEntryFromJson(entry));
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "user_id" || it.key() == "history") continue;
    profile.extra[it.key()] = it.value();
  }
  return profile;
}

UserProfile ParseUserProfile(std::string_view raw) {
  return UserProfileFromJson(ParseJson(raw));
}

Json ToJson(const UserProfile& profile) {
  Json doc = {{"user_id", profile.user_id}, {"history", Json::array()}};
  for (const auto& entry : profile.history) {
    doc["history"].push_back(ToJson(entry));
  }
  for (auto it = profile.extra.begin(); it != profile.extra.end(); ++it) {
    doc[it.key()] = it.value();
  }
  return doc;
}

ItemProfile ItemProfileFromJson(const Json& doc) {
  RequireObject(doc, "item_profile");
  ItemProfile item;
  item.item_id = RequiredString(doc, "item_id");
  if (auto it = doc.find("title"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) Malformed("title must be a string");
    item.title = it->get<std::string>();
  }
  if (auto it = doc.find("features"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) Malformed("features must be an array");
    std::set<Feature> unique;
    for (const auto& f : *it) {
      RequireObject(f, "feature");
      try {
        unique.insert(Feature::Make(RequiredString(f, "category"),
                                    RequiredString(f, "value")));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInvalidArgument) Malformed(e.detail());
        throw;
      }
    }
    item.features.assign(unique.begin(), unique.end());
  }
  if (auto it = doc.find("description"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) Malformed("description must be a string");
    item.description = it->get<std::string>();
  }
  return item;
}

ItemProfile ParseItemProfile(std::string_view raw) {
  return ItemProfileFromJson(ParseJson(raw));
}

Json ToJson(const ItemProfile& item) {
  Json features = Json::array();
  for (const auto& f : item.features) {
    features.push_back({{"category", f.category()}, {"value", f.value()}});
  }
  Json doc = {{"item_id", item.item_id},
              {"title", item.title},
              {"features", std::move(features)}};
  if (item.description) doc["description"] = *item.description;
  return doc;
}

Json ToJson(const Explanation& explanation) {
  Json contributions = Json::array();
  for (const auto& c : explanation.contributions) {
    contributions.push_back({{"feature", c.feature}, {"score", c.score}});
  }
  Json doc = {{"item_id", explanation.item_id},
              {"contributions", std::move(contributions)}};
  if (explanation.rendered) doc["rendered"] = *explanation.rendered;
  return doc;
}

RecommendationList RecommendationListFromJson(const Json& doc) {
  RequireObject(doc, "rec_list");
  const Json& items = Required(doc, "items");
  if (!items.is_array()) Malformed("items must be an array");
  RecommendationList list;
  std::set<std::string> seen;
  for (const auto& entry : items) {
    RequireObject(entry, "rec_list entry");
    ScoredItem item;
    item.item_id = RequiredString(entry, "item_id");
    if (!seen.insert(item.item_id).second) {
      Malformed("duplicate item_id in rec_list: " + item.item_id);
    }
    item.rec_score = OptionalNumber(entry, "score").value_or(0.0);
    if (auto it = entry.find("explanation"); it != entry.end() && !it->is_null()) {
      item.explanation = ExplanationFromJson(*it, item.item_id);
    }
    list.items.push_back(std::move(item));
  }
  return list;
}

RecommendationList ParseRecommendationList(std::string_view raw) {
  return RecommendationListFromJson(ParseJson(raw));
}

Json ToJson(const RecommendationList& list) {
  Json items = Json::array();
  for (const auto& item : list.items) {
    Json entry = {{"item_id", item.item_id}, {"score", item.rec_score}};
    if (item.final_score) entry["final_score"] = *item.final_score;
    if (item.explanation) entry["explanation"] = ToJson(*item.explanation);
    items.push_back(std::move(entry));
  }
  return Json{{"items", std::move(items)}};
}

PreferenceStore PreferenceStoreFromJson(const Json& doc) {
  RequireObject(doc, "preference store");
  PreferenceStore store;
  store.user_id = RequiredString(doc, "user_id");
  const Json& weights = Required(doc, "weights");
  RequireObject(weights, "weights");
  for (auto it = weights.begin(); it != weights.end(); ++it) {
    if (!it->is_number()) Malformed("weight must be a number: " + it.key());
    double w = it->get<double>();
    if (w < -1.0 || w > 1.0) Malformed("weight out of [-1,1]: " + it.key());
    if (w != 0.0) store.weights[Feature::FromKey(it.key()).key()] = w;
  }
  const Json& ts = Required(doc, "last_updated");
  if (!ts.is_number()) Malformed("last_updated must be a number");
  store.last_updated = ts.get<Timestamp>();
  return store;
}

PreferenceStore ParsePreferenceStore(std::string_view raw) {
  return PreferenceStoreFromJson(ParseJson(raw));
}

Json ToJson(const PreferenceStore& store) {
  Json weights = Json::object();
  for (const auto& [key, w] : store.weights) weights[key] = w;
  return Json{{"user_id", store.user_id},
              {"weights", std::move(weights)},
              {"last_updated", store.last_updated}};
}

}  // namespace irf
