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

#include "irf/mock/corpus.h"

#include <fstream>
#include <set>
#include <sstream>

namespace irf::mock {

namespace {

const Json& RequiredArray(const Json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end()) throw Error(ErrorCode::kMissingField, field);
  if (!it->is_array()) throw Error(ErrorCode::kMalformedDocument, std::string(field) + " must be a list");
  return *it;
}

}  // namespace

Corpus CorpusFromJson(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kMalformedDocument, "corpus must be an object");
  Corpus corpus;
  std::set<std::string> item_ids;
  for (const auto& raw : RequiredArray(doc, "items")) {
    ItemProfile item = ItemProfileFromJson(raw);
    if (item.features.empty()) {
      throw Error(ErrorCode::kMalformedDocument, "item " + item.item_id + " has no features");
    }
    if (!item_ids.insert(item.item_id).second) {
      throw Error(ErrorCode::kMalformedDocument, "duplicate item " + item.item_id);
    }
    corpus.items.push_back(std::move(item));
  }
  std::set<std::string> user_ids;
  for (const auto& raw : RequiredArray(doc, "users")) {
    UserProfile user = UserProfileFromJson(raw);
    if (!user_ids.insert(user.user_id).second) {
      throw Error(ErrorCode::kMalformedDocument, "duplicate user " + user.user_id);
    }
    for (const auto& entry : user.history) {
      if (!item_ids.contains(entry.item_id)) {
        throw Error(ErrorCode::kMalformedDocument,
                    "user " + user.user_id + " references unknown item " + entry.item_id);
      }
    }
    corpus.users.push_back(std::move(user));
  }
  return corpus;
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return CorpusFromJson(ParseJson(ss.str()));
}

Json ToJson(const Corpus& corpus) {
  Json items = Json::array();
  for (const auto& item : corpus.items) items.push_back(irf::ToJson(item));
  Json users = Json::array();
  for (const auto& user : corpus.users) users.push_back(irf::ToJson(user));
  return Json{{"items", std::move(items)}, {"users", std::move(users)}};
}

}  // namespace irf::mock
