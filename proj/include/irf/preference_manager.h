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

#ifndef IRF_PREFERENCE_MANAGER_H_
#define IRF_PREFERENCE_MANAGER_H_

#include <functional>
#include <optional>
#include <string>

#include "irf/domain.h"

namespace irf {

/// Weights for the two profile tiers. A stated preference moves the session
/// (temporary) profile by w_session and, when replayed at session end, the
/// permanent profile by the smaller w_perm.
struct UpmConfig {
  double w_session = 0.6;
  double w_perm = 0.2;
  /// Exponential decay rate per day applied when a permanent store is read.
  double lambda = 0.01;
  /// Permanent weights with smaller magnitude are dropped.
  double epsilon_prune = 1e-3;

  void Validate() const;
};

/// A value plus a non-fatal condition the caller may want to report.
template <typename T>
struct WithWarning {
  T value;
  std::optional<ErrorCode> warning;
};

/// Returns `store` with every weight scaled by exp(-lambda * elapsed days).
/// last_updated is left as is. If `now` precedes last_updated the store is
/// returned undecayed with a kClockSkew warning.
WithWarning<PreferenceStore> GetPermanent(const PreferenceStore& store,
                                          Timestamp now, const UpmConfig& cfg);

SessionProfile OpenSession(std::string session_id, const PreferenceStore& permanent,
                           Timestamp now, const UpmConfig& cfg);

SessionProfile ApplyFeaturePreference(SessionProfile session,
                                      const Feature& feature, Polarity polarity,
                                      Timestamp now, const UpmConfig& cfg);

/// Logs one item event and spreads a w_session step evenly over the item's
/// features. An item without features yields a kEmptyFeatureSet warning and
/// leaves the weights untouched.
WithWarning<SessionProfile> ApplyItemPreference(SessionProfile session,
                                                const ItemProfile& item,
                                                Polarity polarity, Timestamp now,
                                                const UpmConfig& cfg);

/// Resolves item ids while replaying item events. Returning nullptr skips
/// the event.
using ItemResolver = std::function<const ItemProfile*(const std::string&)>;

struct MergeResult {
  PreferenceStore store;
  /// Distinct feature keys touched by the replay.
  int merged_features = 0;
};

/// Folds the session's events, in order, into the decayed permanent store
/// using step w_perm.
MergeResult CloseSession(const SessionProfile& session,
                         const PreferenceStore& permanent, Timestamp now,
                         const UpmConfig& cfg, const ItemResolver& items);

/// weights[key] <- clamp(weights[key] + step, -1, 1); zero results are erased.
void ApplyStep(WeightMap& weights, const std::string& key, double step);

}  // namespace irf

#endif  // IRF_PREFERENCE_MANAGER_H_
