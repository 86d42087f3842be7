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

#ifndef IRF_VECTORIZER_H_
#define IRF_VECTORIZER_H_

#include <map>
#include <span>
#include <string>

#include "irf/domain.h"

namespace irf {

/// Sparse vector over feature keys. Zero entries are never stored.
class FeatureVector {
 public:
  using Entries = std::map<std::string, double>;

  FeatureVector() = default;
  explicit FeatureVector(Entries entries);

  /// Sets an entry; setting 0 erases it.
  void Set(const std::string& key, double value);
  double Get(const std::string& key) const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Entries& entries() const { return entries_; }
  Entries::const_iterator begin() const { return entries_.begin(); }
  Entries::const_iterator end() const { return entries_.end(); }

  double Norm() const;
  /// Unit-norm copy, or an empty vector when the norm is zero.
  FeatureVector Normalized() const;
  FeatureVector Scaled(double factor) const;
  /// this + factor * other.
  FeatureVector Plus(const FeatureVector& other, double factor = 1.0) const;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

 private:
  Entries entries_;
};

double Dot(const FeatureVector& a, const FeatureVector& b);

/// Cosine similarity; 0 when either vector is empty.
double Cosine(const FeatureVector& a, const FeatureVector& b);

/// Document frequencies over the item corpus. idf(f) = ln(n_docs / df(f)).
struct TfIdfModel {
  int n_docs = 0;
  std::map<std::string, int> df;
  std::map<std::string, double> idf;

  /// idf of a known feature, or ln(n_docs) (df treated as 1) for unseen ones.
  double Idf(const std::string& key) const;
};

/// Throws Error(kEmptyCorpus) for an empty corpus.
TfIdfModel BuildModel(std::span<const ItemProfile> corpus);

using ItemCatalog = std::map<std::string, ItemProfile>;

/// Binary tf times idf, L2-normalized.
FeatureVector VectorizeItem(const TfIdfModel& model, const ItemProfile& item);

/// Score-weighted (default weight 1) sum of the history items' vectors,
/// L2-normalized. History items missing from `items` are skipped.
FeatureVector VectorizeHistory(const TfIdfModel& model,
                               const UserProfile& profile,
                               const ItemCatalog& items);

/// weight(f) * idf(f) per stated preference, L2-normalized, signs kept.
FeatureVector VectorizePreferences(const TfIdfModel& model,
                                   const WeightMap& prefs);

}  // namespace irf

#endif  // IRF_VECTORIZER_H_
