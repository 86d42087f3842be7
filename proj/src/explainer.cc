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

#include "irf/explainer.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace irf {

FeatureVector CombineUserVectors(const FeatureVector& profile_vec,
                                 const FeatureVector& pref_vec, double beta) {
  return profile_vec.Scaled(beta).Plus(pref_vec, 1.0 - beta).Normalized();
}

Explanation Explain(std::string item_id, const FeatureVector& item_vec,
                    const FeatureVector& profile_vec,
                    const FeatureVector& pref_vec, double beta, int k_explain) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "beta must be in [0,1]");
  }
  if (k_explain <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "k_explain must be positive");
  }
  const FeatureVector combined = CombineUserVectors(profile_vec, pref_vec, beta);

  Explanation out;
  out.item_id = std::move(item_id);
  for (const auto& [key, weight] : item_vec) {
    double product = weight * combined.Get(key);
    if (product > 0.0) out.contributions.push_back({key, product});
  }
  std::sort(out.contributions.begin(), out.contributions.end(),
            [](const Contribution& a, const Contribution& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.feature < b.feature;
            });
  if (out.contributions.size() > static_cast<std::size_t>(k_explain)) {
    out.contributions.resize(static_cast<std::size_t>(k_explain));
  }
  return out;
}

std::string_view ToString(ProfileSource source) {
  switch (source) {
    case ProfileSource::kHistory: return "history";
    case ProfileSource::kStated: return "stated";
    case ProfileSource::kBoth: return "both";
  }
  return "history";
}

ProfileView MakeProfileView(const WeightMap& history, const WeightMap& stated,
                            int k) {
  if (k <= 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  std::map<std::string, ProfileEntry> merged;
  for (const auto& [key, w] : history) {
    merged[key] = {key, w, ProfileSource::kHistory};
  }
  for (const auto& [key, w] : stated) {
    auto [it, inserted] = merged.try_emplace(key, ProfileEntry{key, w, ProfileSource::kStated});
    if (inserted) continue;
    it->second.source = ProfileSource::kBoth;
    if (std::abs(w) > std::abs(it->second.weight)) it->second.weight = w;
  }
  ProfileView view;
  for (auto& [key, entry] : merged) view.entries.push_back(std::move(entry));
  std::stable_sort(view.entries.begin(), view.entries.end(),
                   [](const ProfileEntry& a, const ProfileEntry& b) {
                     return std::abs(a.weight) > std::abs(b.weight);
                   });
  if (view.entries.size() > static_cast<std::size_t>(k)) {
    view.entries.resize(static_cast<std::size_t>(k));
  }
  return view;
}

}  // namespace irf
