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

#include "irf/question_generator.h"

#include <cmath>
#include <map>

namespace irf {
namespace {

double PlogP(int count) {
  return count > 0 ? count * std::log2(static_cast<double>(count)) : 0.0;
}

}  // namespace

double SplitInformationGain(int n, int x) {
  if (n <= 0) throw Error(ErrorCode::kEmptyCandidates, "");
  if (x <= 0 || x >= n) return 0.0;
  const double dn = static_cast<double>(n);
  const double gain = std::log2(dn) - (PlogP(x) + PlogP(n - x)) / dn;
  return gain > 0.0 ? gain : 0.0;
}

double InformationGain(std::span<const ItemProfile> candidates,
                       const std::string& feature) {
  if (candidates.empty()) throw Error(ErrorCode::kEmptyCandidates, "");
  int present = 0;
  for (const auto& item : candidates) present += item.HasFeature(feature);
  return SplitInformationGain(static_cast<int>(candidates.size()), present);
}

std::optional<ElicitationQuestion> SelectQuestionFeature(
    std::span<const ItemProfile> candidates,
    const std::set<std::string>& exclude) {
  const int n = static_cast<int>(candidates.size());
  if (n < 2) return std::nullopt;

  std::map<std::string, int> counts;
  for (const auto& item : candidates) {
    for (const auto& f : item.features) {
      if (!exclude.contains(f.key())) ++counts[f.key()];
    }
  }
  std::optional<ElicitationQuestion> best;
  // Ascending key order, so a strict comparison keeps the smallest key on ties.
  for (const auto& [key, present] : counts) {
    double gain = SplitInformationGain(n, present);
    if (gain <= 0.0) continue;
    if (!best || gain > best->gain) best = ElicitationQuestion{key, gain, n};
  }
  return best;
}

AnswerOutcome ApplyAnswer(std::span<const ItemProfile> candidates,
                          const std::string& feature, Answer answer) {
  std::vector<ItemProfile> with;
  std::vector<ItemProfile> without;
  for (const auto& item : candidates) {
    (item.HasFeature(feature) ? with : without).push_back(item);
  }
  if (with.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no candidate carries feature " + feature);
  }
  AnswerOutcome out;
  if (answer == Answer::kIndifferent) {
    out.candidates.assign(candidates.begin(), candidates.end());
    return out;
  }
  const bool yes = answer == Answer::kYes;
  out.polarity = yes ? Polarity::kLike : Polarity::kDislike;
  auto& kept = yes ? with : without;
  if (kept.empty()) {
    out.warning = ErrorCode::kWouldEmptyCandidates;
    out.candidates.assign(candidates.begin(), candidates.end());
  } else {
    out.candidates = std::move(kept);
  }
  return out;
}

}  // namespace irf
