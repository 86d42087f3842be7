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

#ifndef IRF_MOCK_CORPUS_H_
#define IRF_MOCK_CORPUS_H_

#include <filesystem>
#include <vector>

#include "irf/domain.h"

namespace irf::mock {

/// Items and users served by the mock backends.
struct Corpus {
  std::vector<ItemProfile> items;
  std::vector<UserProfile> users;
};

/// Parses {"items": [...], "users": [...]}. Throws kMalformedDocument for
/// duplicate ids, featureless items or history entries naming unknown items.
Corpus CorpusFromJson(const Json& doc);
Corpus LoadCorpus(const std::filesystem::path& path);
Json ToJson(const Corpus& corpus);

}  // namespace irf::mock

#endif  // IRF_MOCK_CORPUS_H_
