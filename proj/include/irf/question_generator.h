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

#ifndef IRF_QUESTION_GENERATOR_H_
#define IRF_QUESTION_GENERATOR_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "irf/domain.h"

namespace irf {

struct ElicitationQuestion {
  std::string feature;
  /// Bits.
  double gain = 0.0;
  int candidate_count = 0;

  friend bool operator==(const ElicitationQuestion&,
                         const ElicitationQuestion&) = default;
};

/// Entropy reduction, in bits, from splitting `candidates` (uniformly
/// weighted) on whether they carry `feature`:
///
///   IG = log2(n) - (x/n) log2(x) - (y/n) log2(y),   0 log2 0 = 0
///
/// where x items carry the feature and y = n - x do not.
/// Throws Error(kEmptyCandidates) when candidates is empty.
double InformationGain(std::span<const ItemProfile> candidates,
                       const std::string& feature);

/// Gain for a split of n items into x and n - x.
double SplitInformationGain(int n, int x);

/// The feature with the highest gain among those present in the candidates
/// and not excluded; ties go to the smaller key. Empty when fewer than two
/// candidates or no feature has positive gain.
std::optional<ElicitationQuestion> SelectQuestionFeature(
    std::span<const ItemProfile> candidates,
    const std::set<std::string>& exclude);

enum class Answer { kYes, kNo, kIndifferent };

struct AnswerOutcome {
  std::vector<ItemProfile> candidates;
  /// Preference the answer expresses; empty for kIndifferent.
  std::optional<Polarity> polarity;
  /// Set to kWouldEmptyCandidates when the filter was skipped because it
  /// would have removed every candidate.
  std::optional<ErrorCode> warning;
};

/// yes keeps items with the feature, no keeps items without it, indifferent
/// keeps everything. Throws Error(kInvalidArgument) if no candidate carries
/// the feature.
AnswerOutcome ApplyAnswer(std::span<const ItemProfile> candidates,
                          const std::string& feature, Answer answer);

}  // namespace irf

#endif  // IRF_QUESTION_GENERATOR_H_
