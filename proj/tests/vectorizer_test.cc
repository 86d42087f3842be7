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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace irf {
namespace {

using ::irf::testing::DenseCosine;
using ::irf::testing::MakeItem;

std::vector<ItemProfile> FourItems() {
  return {MakeItem("a", {"genre=comedy", "actor=x"}),
          MakeItem("b", {"genre=comedy", "actor=y"}),
          MakeItem("c", {"genre=drama", "actor=y"}),
          MakeItem("d", {"genre=horror", "actor=y"})};
}

TEST(BuildModelTest, IdfSpotValues) {
  auto model = BuildModel(FourItems());
  EXPECT_EQ(model.n_docs, 4);
  EXPECT_EQ(model.df.at("genre=comedy"), 2);
  EXPECT_NEAR(model.idf.at("genre=comedy"), 0.693147, 1e-5);
  EXPECT_NEAR(model.idf.at("actor=x"), 1.386294, 1e-5);
}

TEST(BuildModelTest, FeatureInEveryDocHasZeroIdf) {
  std::vector<ItemProfile> items;
  for (auto id : {"a", "b", "c", "d"}) items.push_back(MakeItem(id, {"genre=comedy"}));
  EXPECT_EQ(BuildModel(items).idf.at("genre=comedy"), 0.0);
}

TEST(BuildModelTest, EmptyCorpus) {
  std::vector<ItemProfile> none;
  try {
    BuildModel(none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(BuildModelTest, DocumentFrequencyMatchesRecount) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ItemProfile> corpus;
    int n = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < n; ++i) {
      ItemProfile item;
      item.item_id = "i" + std::to_string(i);
      for (int f = 0; f < 6; ++f) {
        if (rng() % 2) item.features.push_back(Feature::Make("tag", std::to_string(f)));
      }
      corpus.push_back(item);
    }
    auto model = BuildModel(corpus);
    for (const auto& [key, df] : model.df) {
      int recount = 0;
      for (const auto& item : corpus) {
        for (const auto& f : item.features) recount += f.key() == key;
      }
      EXPECT_EQ(df, recount);
      EXPECT_DOUBLE_EQ(model.idf.at(key), std::log(double(n) / recount));
    }
  }
}

TEST(VectorizeItemTest, SingleFeatureNormalizesToOne) {
  auto model = BuildModel(FourItems());
  auto v = VectorizeItem(model, MakeItem("z", {"genre=comedy"}));
  EXPECT_EQ(v.size(), 1u);
  EXPECT_NEAR(v.Get("genre=comedy"), 1.0, 1e-12);
}

TEST(VectorizeItemTest, AllZeroIdfGivesEmptyVector) {
  std::vector<ItemProfile> items = {MakeItem("a", {"genre=comedy"}),
                                    MakeItem("b", {"genre=comedy"})};
  auto model = BuildModel(items);
  EXPECT_TRUE(VectorizeItem(model, items[0]).empty());
}

TEST(VectorizeItemTest, TwoFeatureOracle) {
  // idf(comedy) = ln 2 = a, idf(actor=x) = ln 4 = 2a; (a, 2a)/|.| = (1, 2)/sqrt 5.
  auto model = BuildModel(FourItems());
  auto v = VectorizeItem(model, FourItems()[0]);
  EXPECT_NEAR(v.Get("genre=comedy"), 0.4472136, 1e-6);
  EXPECT_NEAR(v.Get("actor=x"), 0.8944272, 1e-6);
}

TEST(VectorizeItemTest, UnseenFeatureUsesLnN) {
  auto model = BuildModel(FourItems());
  EXPECT_NEAR(model.Idf("genre=western"), std::log(4.0), 1e-12);
  auto v = VectorizeItem(model, MakeItem("z", {"genre=comedy", "genre=western"}));
  // (ln2, ln4) normalized again.
  EXPECT_NEAR(v.Get("genre=western"), 0.8944272, 1e-6);
}

TEST(VectorizeHistoryTest, EmptyAndSingle) {
  auto items = FourItems();
  auto model = BuildModel(items);
  ItemCatalog catalog;
  for (const auto& i : items) catalog.emplace(i.item_id, i);
  UserProfile empty{"u", {}, Json::object()};
  EXPECT_TRUE(VectorizeHistory(model, empty, catalog).empty());

  UserProfile one{"u", {{"a", 3.0, std::nullopt}}, Json::object()};
  auto hv = VectorizeHistory(model, one, catalog);
  auto iv = VectorizeItem(model, items[0]);
  for (const auto& [k, v] : iv) EXPECT_NEAR(hv.Get(k), v, 1e-12);

  UserProfile missing{"u", {{"nope", std::nullopt, std::nullopt}}, Json::object()};
  EXPECT_TRUE(VectorizeHistory(model, missing, catalog).empty());
}

TEST(VectorizeHistoryTest, DisjointItemsOracle) {
  std::vector<ItemProfile> items = {MakeItem("a", {"genre=comedy"}),
                                    MakeItem("b", {"genre=drama", "actor=q"}),
                                    MakeItem("c", {"genre=horror"})};
  auto model = BuildModel(items);
  ItemCatalog catalog;
  for (const auto& i : items) catalog.emplace(i.item_id, i);
  UserProfile p{"u", {{"a", 1.0, std::nullopt}, {"b", 1.0, std::nullopt}},
                Json::object()};
  // Oracle: explicit sum of the two unit vectors, then normalize. Each block
  // is a unit vector and they are orthogonal, so each scales by 1/sqrt 2.
  auto va = VectorizeItem(model, items[0]);
  auto vb = VectorizeItem(model, items[1]);
  auto hv = VectorizeHistory(model, p, catalog);
  const double s = 1.0 / std::sqrt(2.0);
  for (const auto& [k, v] : va) EXPECT_NEAR(hv.Get(k), v * s, 1e-12);
  for (const auto& [k, v] : vb) EXPECT_NEAR(hv.Get(k), v * s, 1e-12);
}

TEST(VectorizePreferencesTest, Examples) {
  auto model = BuildModel(FourItems());
  EXPECT_TRUE(VectorizePreferences(model, {}).empty());
  auto one = VectorizePreferences(model, {{"genre=comedy", 1.0}});
  EXPECT_NEAR(one.Get("genre=comedy"), 1.0, 1e-12);
  std::vector<ItemProfile> items = {MakeItem("a", {"genre=comedy"}),
                                    MakeItem("b", {"genre=comedy"}),
                                    MakeItem("c", {"genre=horror"}),
                                    MakeItem("d", {"genre=horror"})};
  auto m2 = BuildModel(items);
  auto two = VectorizePreferences(m2, {{"genre=comedy", 1.0}, {"genre=horror", -1.0}});
  EXPECT_NEAR(two.Get("genre=comedy"), 0.7071068, 1e-6);
  EXPECT_NEAR(two.Get("genre=horror"), -0.7071068, 1e-6);
}

TEST(CosineTest, Examples) {
  FeatureVector x({{"x", 1.0}});
  FeatureVector y({{"y", 1.0}});
  FeatureVector xy({{"x", 1.0}, {"y", 1.0}});
  EXPECT_DOUBLE_EQ(Cosine(x, x), 1.0);
  EXPECT_DOUBLE_EQ(Cosine(x, y), 0.0);
  EXPECT_NEAR(Cosine(xy, x), 0.70711, 1e-5);
  EXPECT_EQ(Cosine(FeatureVector{}, x), 0.0);
}

FeatureVector RandomVector(std::mt19937& rng, bool signed_values) {
  std::uniform_real_distribution<double> dist(signed_values ? -3.0 : 0.0, 3.0);
  FeatureVector v;
  for (int k = 0; k < 6; ++k) {
    if (rng() % 2) v.Set("f" + std::to_string(k), dist(rng));
  }
  return v;
}

TEST(CosineTest, Properties) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> scale(0.01, 50.0);
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = RandomVector(rng, true);
    auto b = RandomVector(rng, true);
    double c = Cosine(a, b);
    EXPECT_EQ(c, Cosine(b, a));
    EXPECT_LE(std::abs(c), 1.0 + 1e-9);
    EXPECT_NEAR(Cosine(a.Scaled(scale(rng)), b), c, 1e-12);
    EXPECT_NEAR(c, testing::DenseCosine(a.entries(), b.entries()), 1e-12);
    auto n = a.Normalized();
    if (!n.empty()) {
      EXPECT_NEAR(n.Norm(), 1.0, 1e-9);
    }
  }
}

TEST(FeatureVectorTest, NoExplicitZeros) {
  FeatureVector v;
  v.Set("a", 1.0);
  v.Set("a", 0.0);
  EXPECT_TRUE(v.empty());
  auto w = FeatureVector({{"a", 1.0}}).Plus(FeatureVector({{"a", 1.0}}), -1.0);
  EXPECT_TRUE(w.empty());
}

}  // namespace
}  // namespace irf
