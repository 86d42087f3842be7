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

#include "irf/reranker.h"

#include <algorithm>

namespace irf {

void RerankConfig::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be in [0,1]");
  }
}

void SortByFinalScore(RecommendationList& list) {
  std::sort(list.items.begin(), list.items.end(),
            [](const ScoredItem& a, const ScoredItem& b) {
              double fa = a.final_score.value_or(0.0);
              double fb = b.final_score.value_or(0.0);
              if (fa != fb) return fa > fb;
              // Equal blends fall back to the upstream score so that a flat
              // preference signal never reorders the recommender's list.
              if (a.rec_score != b.rec_score) return a.rec_score > b.rec_score;
              return a.item_id < b.item_id;
            });
}

RecommendationList Rerank(RecommendationList list,
                          const FeatureVector& pref_vec,
                          const std::map<std::string, FeatureVector>& item_vecs,
                          const RerankConfig& cfg) {
  cfg.Validate();
  if (list.items.empty()) return list;

  auto [min_it, max_it] = std::minmax_element(
      list.items.begin(), list.items.end(),
      [](const ScoredItem& a, const ScoredItem& b) {
        return a.rec_score < b.rec_score;
      });
  const double lo = min_it->rec_score;
  const double range = max_it->rec_score - lo;

  static const FeatureVector kEmpty;
  for (auto& item : list.items) {
    double r = range > 0.0 ? (item.rec_score - lo) / range : 1.0;
    auto it = item_vecs.find(item.item_id);
    const FeatureVector& vec = it == item_vecs.end() ? kEmpty : it->second;
    double s = (Cosine(pref_vec, vec) + 1.0) / 2.0;
    double final_score = cfg.alpha * r + (1.0 - cfg.alpha) * s;
    item.final_score = std::clamp(final_score, 0.0, 1.0);
  }
  SortByFinalScore(list);
  return list;
}

}  // namespace irf
