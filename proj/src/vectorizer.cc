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

#include "irf/vectorizer.h"

#include <cmath>
#include <utility>

namespace irf {

FeatureVector::FeatureVector(Entries entries) {
  for (auto& [key, value] : entries) {
    if (value != 0.0) entries_.emplace(key, value);
  }
}

void FeatureVector::Set(const std::string& key, double value) {
  if (value == 0.0) {
    entries_.erase(key);
  } else {
    entries_[key] = value;
  }
}

double FeatureVector::Get(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0.0 : it->second;
}

double FeatureVector::Norm() const {
  double sum = 0.0;
  for (const auto& [key, value] : entries_) sum += value * value;
  return std::sqrt(sum);
}

FeatureVector FeatureVector::Normalized() const {
  double norm = Norm();
  if (norm == 0.0) return {};
  return Scaled(1.0 / norm);
}

FeatureVector FeatureVector::Scaled(double factor) const {
  FeatureVector out;
  for (const auto& [key, value] : entries_) out.Set(key, value * factor);
  return out;
}

FeatureVector FeatureVector::Plus(const FeatureVector& other,
                                  double factor) const {
  FeatureVector out = *this;
  for (const auto& [key, value] : other) {
    out.Set(key, out.Get(key) + factor * value);
  }
  return out;
}

double Dot(const FeatureVector& a, const FeatureVector& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  double sum = 0.0;
  for (const auto& [key, value] : small) sum += value * large.Get(key);
  return sum;
}

double Cosine(const FeatureVector& a, const FeatureVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  double denom = a.Norm() * b.Norm();
  if (denom == 0.0) return 0.0;
  double c = Dot(a, b) / denom;
  // Rounding can push |c| a hair past 1 for parallel vectors.
  if (c > 1.0) return 1.0;
  if (c < -1.0) return -1.0;
  return c;
}

double TfIdfModel::Idf(const std::string& key) const {
  auto it = idf.find(key);
  if (it != idf.end()) return it->second;
  return std::log(static_cast<double>(n_docs));
}

TfIdfModel BuildModel(std::span<const ItemProfile> corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "");
  TfIdfModel model;
  model.n_docs = static_cast<int>(corpus.size());
  for (const auto& item : corpus) {
    // Features are already unique per item.
    for (const auto& f : item.features) ++model.df[f.key()];
  }
  for (const auto& [key, df] : model.df) {
    model.idf[key] = std::log(static_cast<double>(model.n_docs) / df);
  }
  return model;
}

FeatureVector VectorizeItem(const TfIdfModel& model, const ItemProfile& item) {
  FeatureVector v;
  for (const auto& f : item.features) v.Set(f.key(), model.Idf(f.key()));
  return v.Normalized();
}

FeatureVector VectorizeHistory(const TfIdfModel& model,
                               const UserProfile& profile,
                               const ItemCatalog& items) {
  FeatureVector sum;
  for (const auto& entry : profile.history) {
    auto it = items.find(entry.item_id);
    if (it == items.end()) continue;
    sum = sum.Plus(VectorizeItem(model, it->second), entry.score.value_or(1.0));
  }
  return sum.Normalized();
}

FeatureVector VectorizePreferences(const TfIdfModel& model,
                                   const WeightMap& prefs) {
  FeatureVector v;
  for (const auto& [key, weight] : prefs) v.Set(key, weight * model.Idf(key));
  return v.Normalized();
}

}  // namespace irf
