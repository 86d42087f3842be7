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

#ifndef IRF_DIALOGUE_WORKSPACE_H_
#define IRF_DIALOGUE_WORKSPACE_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "irf/domain.h"

namespace irf::dialogue {

/// Case-folds and splits text into word tokens. A token is a maximal run of
/// letters, digits, apostrophes, hyphens or non-ASCII bytes.
std::vector<std::string> Tokenize(std::string_view text);

struct PatternToken {
  enum class Kind {
    kWord,      // exact token
    kPrefix,    // "recommend*": any token starting with text
    kSlot,      // "{genre}": one extracted entity of that type
    kWildcard,  // "*": zero or more tokens
  };
  Kind kind;
  std::string text;
};

struct Pattern {
  std::string source;
  std::vector<PatternToken> tokens;
};

struct Intent {
  std::string name;
  std::vector<Pattern> patterns;
};

struct EntityValue {
  std::string canonical;
  /// Tokenized synonyms, the canonical form included.
  std::vector<std::vector<std::string>> synonyms;
};

struct EntityType {
  std::string name;
  std::vector<EntityValue> values;
};

/// Entity types with a fixed meaning; every other entity type names a
/// feature category.
inline constexpr std::string_view kOrdinalEntity = "ordinal";
inline constexpr std::string_view kItemEntity = "item";

/// Intents with their trigger patterns and entity types with their
/// synonyms. Order is the file order and is significant: the first matching
/// intent wins.
class Workspace {
 public:
  /// {"intents": {name: [pattern]}, "entities": {type: {canonical: [synonym]}}}
  static Workspace FromJson(const Json& doc);
  static Workspace Load(const std::filesystem::path& path);

  const std::vector<Intent>& intents() const { return intents_; }
  const std::vector<EntityType>& entities() const { return entities_; }

  /// Copy with extra values (canonical -> synonyms) appended to an entity
  /// type, creating the type if needed.
  Workspace WithEntityValues(
      const std::string& type,
      const std::vector<std::pair<std::string, std::vector<std::string>>>& values) const;

  static bool IsFeatureEntity(std::string_view type) {
    return type != kOrdinalEntity && type != kItemEntity;
  }

 private:
  std::vector<Intent> intents_;
  std::vector<EntityType> entities_;
};

Pattern ParsePattern(std::string_view source);

}  // namespace irf::dialogue

#endif  // IRF_DIALOGUE_WORKSPACE_H_
