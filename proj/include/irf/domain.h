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

#ifndef IRF_DOMAIN_H_
#define IRF_DOMAIN_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irf/error.h"
#include "json.hpp"

namespace irf {

using Json = nlohmann::ordered_json;

/// Seconds since the Unix epoch.
using Timestamp = std::int64_t;

inline constexpr double kSecondsPerDay = 86400.0;

/// Feature key -> weight. Ordered so that every iteration is deterministic.
using WeightMap = std::map<std::string, double>;

/// Trims surrounding whitespace, collapses inner whitespace runs to a single
/// space and lower-cases ASCII letters.
std::string Canonicalize(std::string_view text);

/// A categorical tag such as genre=comedy. Identity is the canonical key
/// "category=value".
class Feature {
 public:
  /// Throws Error(kInvalidArgument) when either part is empty after
  /// canonicalization or the category contains '='.
  static Feature Make(std::string_view category, std::string_view value);
  /// Parses "category=value"; splits at the first '='.
  static Feature FromKey(std::string_view key);

  const std::string& category() const { return category_; }
  const std::string& value() const { return value_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const Feature& a, const Feature& b) {
    return a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const Feature& a, const Feature& b) {
    return a.key_ <=> b.key_;
  }

 private:
  Feature(std::string category, std::string value);

  std::string category_;
  std::string value_;
  std::string key_;
};

struct HistoryEntry {
  std::string item_id;
  std::optional<double> score;
  std::optional<Timestamp> timestamp;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

struct UserProfile {
  std::string user_id;
  std::vector<HistoryEntry> history;
  /// Recommender-specific fields we do not model; always a JSON object.
  Json extra = Json::object();

  friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

struct ItemProfile {
  std::string item_id;
  std::string title;
  /// Sorted by key, no duplicates.
  std::vector<Feature> features;
  std::optional<std::string> description;

  bool HasFeature(std::string_view key) const;

  friend bool operator==(const ItemProfile&, const ItemProfile&) = default;
};

struct Contribution {
  std::string feature;
  double score = 0.0;

  friend bool operator==(const Contribution&, const Contribution&) = default;
};

/// Why an item was recommended: the shared features between the item and the
/// user, with their share of the similarity.
struct Explanation {
  std::string item_id;
  std::vector<Contribution> contributions;
  std::optional<std::string> rendered;

  friend bool operator==(const Explanation&, const Explanation&) = default;
};

struct ScoredItem {
  std::string item_id;
  double rec_score = 0.0;
  std::optional<double> final_score;
  std::optional<Explanation> explanation;

  friend bool operator==(const ScoredItem&, const ScoredItem&) = default;
};

struct RecommendationList {
  std::vector<ScoredItem> items;

  const ScoredItem* Find(std::string_view item_id) const;

  friend bool operator==(const RecommendationList&,
                         const RecommendationList&) = default;
};

struct PreferenceStore {
  std::string user_id;
  WeightMap weights;
  Timestamp last_updated = 0;

  friend bool operator==(const PreferenceStore&,
                         const PreferenceStore&) = default;
};

enum class Polarity : int { kLike = 1, kDislike = -1 };

inline double Sign(Polarity p) { return static_cast<double>(static_cast<int>(p)); }

struct PreferenceEvent {
  enum class Kind { kFeature, kItem };

  Kind kind = Kind::kFeature;
  /// Feature key for kFeature, item id for kItem.
  std::string target;
  Polarity polarity = Polarity::kLike;
  Timestamp timestamp = 0;

  friend bool operator==(const PreferenceEvent&,
                         const PreferenceEvent&) = default;
};

/// The in-session ("temporary") copy of a user's preferences.
struct SessionProfile {
  std::string session_id;
  std::string user_id;
  WeightMap temp_weights;
  std::vector<PreferenceEvent> events;
  Timestamp started_at = 0;

  friend bool operator==(const SessionProfile&,
                         const SessionProfile&) = default;
};

// Wire format. Parse functions throw Error(kMalformedDocument) on syntax or
// type errors and Error(kMissingField, name) when a required field is absent.

UserProfile ParseUserProfile(std::string_view raw);
UserProfile UserProfileFromJson(const Json& doc);
Json ToJson(const UserProfile& profile);

ItemProfile ParseItemProfile(std::string_view raw);
ItemProfile ItemProfileFromJson(const Json& doc);
Json ToJson(const ItemProfile& item);

/// rec_list: {"items": [{"item_id", "score", "explanation"?}]}. The
/// explanation may be a plain string or an Explanation object.
RecommendationList ParseRecommendationList(std::string_view raw);
RecommendationList RecommendationListFromJson(const Json& doc);
Json ToJson(const RecommendationList& list);
Json ToJson(const Explanation& explanation);

PreferenceStore ParsePreferenceStore(std::string_view raw);
PreferenceStore PreferenceStoreFromJson(const Json& doc);
Json ToJson(const PreferenceStore& store);

/// Parses raw bytes as JSON, mapping syntax errors to kMalformedDocument.
Json ParseJson(std::string_view raw);

}  // namespace irf

#endif  // IRF_DOMAIN_H_
