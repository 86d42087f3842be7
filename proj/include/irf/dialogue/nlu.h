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

#ifndef IRF_DIALOGUE_NLU_H_
#define IRF_DIALOGUE_NLU_H_

#include <string>
#include <string_view>
#include <vector>

#include "irf/dialogue/workspace.h"

namespace irf::dialogue {

inline constexpr std::string_view kFallbackIntent = "fallback";

struct EntityMatch {
  std::string type;
  std::string value;
  /// The utterance tokens that matched, space separated.
  std::string span;

  friend bool operator==(const EntityMatch&, const EntityMatch&) = default;
};

struct NluResult {
  std::string intent;
  /// 1 for a full pattern match, (0,1) for keyword overlap, 0 for fallback.
  double confidence = 0.0;
  std::vector<EntityMatch> entities;

  friend bool operator==(const NluResult&, const NluResult&) = default;
};

/// Assigns an intent and entities to an utterance. Never throws.
///
/// Entities are found left to right, taking the longest synonym at each
/// position. Their tokens are then replaced by slot markers and each intent's
/// patterns are tried, in workspace order, against every contiguous run of
/// tokens. With no full match the intent whose pattern shares the largest
/// fraction (at least half) of its literal words with the utterance wins,
/// with confidence 0.9 times that fraction.
NluResult Classify(std::string_view utterance, const Workspace& ws);

}  // namespace irf::dialogue

#endif  // IRF_DIALOGUE_NLU_H_
