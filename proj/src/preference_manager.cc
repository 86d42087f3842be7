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

#include "irf/preference_manager.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace irf {

void UpmConfig::Validate() const {
  if (!(w_session > 0.0 && w_session <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "w_session must be in (0,1]");
  }
  if (!(w_perm > 0.0 && w_perm <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "w_perm must be in (0,1]");
  }
  if (!(w_perm < w_session)) {
    throw Error(ErrorCode::kInvalidArgument, "w_perm must be < w_session");
  }
  if (!(lambda >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be >= 0");
  }
  if (!(epsilon_prune >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon_prune must be >= 0");
  }
}

void ApplyStep(WeightMap& weights, const std::string& key, double step) {
  double w = std::clamp(weights[key] + step, -1.0, 1.0);
  if (w == 0.0) {
    weights.erase(key);
  } else {
    weights[key] = w;
  }
}

namespace {

void Prune(WeightMap& weights, double epsilon) {
  std::erase_if(weights, [epsilon](const auto& kv) {
    return kv.second == 0.0 || std::abs(kv.second) < epsilon;
  });
}

// Applies one event with the given step size; returns the keys it touched.
std::vector<std::string> Replay(WeightMap& weights, const PreferenceEvent& event,
                                double step, const ItemResolver& items) {
  const double signed_step = step * Sign(event.polarity);
  if (event.kind == PreferenceEvent::Kind::kFeature) {
    ApplyStep(weights, event.target, signed_step);
    return {event.target};
  }
  const ItemProfile* item = items ? items(event.target) : nullptr;
  if (item == nullptr || item->features.empty()) return {};
  std::vector<std::string> touched;
  const double share = signed_step / static_cast<double>(item->features.size());
  for (const auto& f : item->features) {
    ApplyStep(weights, f.key(), share);
    touched.push_back(f.key());
  }
  return touched;
}

}  // namespace

WithWarning<PreferenceStore> GetPermanent(const PreferenceStore& store,
                                          Timestamp now, const UpmConfig& cfg) {
  if (now < store.last_updated) {
    return {store, ErrorCode::kClockSkew};
  }
  PreferenceStore out = store;
  const double days = static_cast<double>(now - store.last_updated) / kSecondsPerDay;
  const double factor = std::exp(-cfg.lambda * days);
  for (auto& [key, w] : out.weights) w *= factor;
  Prune(out.weights, cfg.epsilon_prune);
  return {std::move(out), std::nullopt};
}

SessionProfile OpenSession(std::string session_id,
                           const PreferenceStore& permanent, Timestamp now,
                           const UpmConfig& cfg) {
  SessionProfile session;
  session.session_id = std::move(session_id);
  session.user_id = permanent.user_id;
  session.temp_weights = GetPermanent(permanent, now, cfg).value.weights;
  session.started_at = now;
  return session;
}

SessionProfile ApplyFeaturePreference(SessionProfile session,
                                      const Feature& feature, Polarity polarity,
                                      Timestamp now, const UpmConfig& cfg) {
  PreferenceEvent event{PreferenceEvent::Kind::kFeature, feature.key(),
                        polarity, now};
  Replay(session.temp_weights, event, cfg.w_session, nullptr);
  session.events.push_back(std::move(event));
  return session;
}

WithWarning<SessionProfile> ApplyItemPreference(SessionProfile session,
                                                const ItemProfile& item,
                                                Polarity polarity, Timestamp now,
                                                const UpmConfig& cfg) {
  PreferenceEvent event{PreferenceEvent::Kind::kItem, item.item_id, polarity,
                        now};
  Replay(session.temp_weights, event, cfg.w_session,
         [&item](const std::string&) { return &item; });
  session.events.push_back(std::move(event));
  std::optional<ErrorCode> warning;
  if (item.features.empty()) warning = ErrorCode::kEmptyFeatureSet;
  return {std::move(session), warning};
}

MergeResult CloseSession(const SessionProfile& session,
                         const PreferenceStore& permanent, Timestamp now,
                         const UpmConfig& cfg, const ItemResolver& items) {
  MergeResult result;
  result.store = GetPermanent(permanent, now, cfg).value;
  std::set<std::string> touched;
  for (const auto& event : session.events) {
    for (auto& key : Replay(result.store.weights, event, cfg.w_perm, items)) {
      touched.insert(std::move(key));
    }
  }
  Prune(result.store.weights, cfg.epsilon_prune);
  result.store.last_updated = std::max(now, permanent.last_updated);
  result.merged_features = static_cast<int>(touched.size());
  return result;
}

}  // namespace irf
