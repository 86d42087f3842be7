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

#ifndef IRF_TESTS_TEST_UTIL_H_
#define IRF_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>

#include "irf/domain.h"

namespace irf::testing {

/// Builds an item from "category=value" keys.
inline ItemProfile MakeItem(std::string id,
                            std::initializer_list<std::string> keys) {
  ItemProfile item;
  item.item_id = std::move(id);
  item.title = "Title " + item.item_id;
  for (const auto& k : keys) item.features.push_back(Feature::FromKey(k));
  std::sort(item.features.begin(), item.features.end());
  item.features.erase(std::unique(item.features.begin(), item.features.end()),
                      item.features.end());
  return item;
}

}  // namespace irf::testing

#endif  // IRF_TESTS_TEST_UTIL_H_
