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

#ifndef IRF_EXPLAINER_H_
#define IRF_EXPLAINER_H_

#include <string>
#include <vector>

#include "irf/domain.h"
#include "irf/vectorizer.h"

namespace irf {

/// The user's combined taste vector:
/// normalize(beta * profile_vec + (1 - beta) * pref_vec).
FeatureVector CombineUserVectors(const FeatureVector& profile_vec,
                                 const FeatureVector& pref_vec, double beta);

/// Lists the features shared by the item and the combined user vector whose
/// per-axis product item[f] * combined[f] is positive, highest first, at
/// most k_explain of them. Ties are ordered by feature key.
Explanation Explain(std::string item_id, const FeatureVector& item_vec,
                    const FeatureVector& profile_vec,
                    const FeatureVector& pref_vec, double beta, int k_explain);

inline bool NeedsExplanation(const ScoredItem& item) {
  return !item.explanation.has_value();
}

enum class ProfileSource { kHistory, kStated, kBoth };

std::string_view ToString(ProfileSource source);

struct ProfileEntry {
  std::string feature;
  double weight = 0.0;
  ProfileSource source = ProfileSource::kHistory;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

struct ProfileView {
  std::vector<ProfileEntry> entries;
};

/// Union of history-derived and stated weights. A key present in both keeps
/// the larger-magnitude weight. Sorted by |weight| descending (ties by key)
/// and truncated to k.
ProfileView MakeProfileView(const WeightMap& history, const WeightMap& stated,
                            int k);

}  // namespace irf

#endif  // IRF_EXPLAINER_H_
