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

// Independent reference computations used only by tests. Nothing here calls
// into the library's math; it works from raw item memberships and plain
// vectors.

#ifndef IRF_TESTS_ORACLES_H_
#define IRF_TESTS_ORACLES_H_

#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace irf::testing {

/// Items as plain sets of feature keys.
using TagSets = std::vector<std::set<std::string>>;

/// Shannon entropy (bits) of a class assignment where every item is its own
/// class with equal probability, computed by summing -p log2 p per item.
inline double UniformEntropyBruteForce(std::size_t n) {
  double h = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = 1.0 / static_cast<double>(n);
    h -= p * std::log2(p);
  }
  return h;
}

/// Information gain by explicit enumeration: parent entropy minus the
/// size-weighted entropies of the two branches.
inline double InformationGainBruteForce(const TagSets& items,
                                        const std::string& feature) {
  std::size_t left = 0;
  std::size_t right = 0;
  for (const auto& tags : items) {
    if (tags.count(feature)) {
      ++left;
    } else {
      ++right;
    }
  }
  const double n = static_cast<double>(items.size());
  double children = 0.0;
  if (left > 0) children += (left / n) * UniformEntropyBruteForce(left);
  if (right > 0) children += (right / n) * UniformEntropyBruteForce(right);
  return UniformEntropyBruteForce(items.size()) - children;
}

struct ArgmaxResult {
  std::string feature;
  double gain;
};

/// Exhaustive argmax over every feature of every item, ties by smallest key.
inline std::optional<ArgmaxResult> ArgmaxGainBruteForce(
    const TagSets& items, const std::set<std::string>& exclude) {
  if (items.size() < 2) return std::nullopt;
  std::set<std::string> universe;
  for (const auto& tags : items) universe.insert(tags.begin(), tags.end());
  std::optional<ArgmaxResult> best;
  for (const auto& f : universe) {
    if (exclude.count(f)) continue;
    double g = InformationGainBruteForce(items, f);
    if (g <= 1e-12) continue;
    if (!best || g > best->gain + 1e-12) best = ArgmaxResult{f, g};
  }
  return best;
}

using DenseMap = std::map<std::string, double>;

inline double DenseCosine(const DenseMap& a, const DenseMap& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [k, v] : a) {
    na += v * v;
    auto it = b.find(k);
    if (it != b.end()) dot += v * it->second;
  }
  for (const auto& [k, v] : b) nb += v * v;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace irf::testing

#endif  // IRF_TESTS_ORACLES_H_
