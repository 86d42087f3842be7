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

#ifndef IRF_RERANKER_H_
#define IRF_RERANKER_H_

#include <map>
#include <string>

#include "irf/domain.h"
#include "irf/vectorizer.h"

namespace irf {

struct RerankConfig {
  /// Weight of the (min-max normalized) recommender score in the blend.
  double alpha = 0.5;

  void Validate() const;
};

/// Blends each item's normalized recommender score with its preference
/// similarity and re-sorts the list:
///
///   r(i)     = (rec(i) - min rec) / (max rec - min rec), or 1 if all equal
///   s(i)     = (cosine(pref, vec(i)) + 1) / 2
///   final(i) = alpha * r(i) + (1 - alpha) * s(i)
///
/// Output is sorted by final score descending, then by upstream score
/// descending, then by ascending item id.
/// Items without a vector in `item_vecs` are scored with an empty vector.
RecommendationList Rerank(RecommendationList list,
                          const FeatureVector& pref_vec,
                          const std::map<std::string, FeatureVector>& item_vecs,
                          const RerankConfig& cfg);

/// The ordering used for re-ranked lists: final score descending, then
/// ascending item id.
void SortByFinalScore(RecommendationList& list);

}  // namespace irf

#endif  // IRF_RERANKER_H_
