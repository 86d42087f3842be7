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

#ifndef IRF_DIALOGUE_MESSAGE_CATALOG_H_
#define IRF_DIALOGUE_MESSAGE_CATALOG_H_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "irf/domain.h"

namespace irf::dialogue {

using Slots = std::map<std::string, std::string>;

/// Keys the dialogue policy and the gateway render from.
std::span<const std::string_view> RequiredMessageKeys();

/// Response templates keyed by message id. A template may contain {name}
/// placeholders (name: lowercase letters, digits, '_').
class MessageCatalog {
 public:
  MessageCatalog() = default;
  explicit MessageCatalog(std::map<std::string, std::string> templates);

  /// Flat {key: template} object. Throws Error(kMissingField, key) when a
  /// required key is absent and `require_all` is set.
  static MessageCatalog FromJson(const Json& doc, bool require_all = true);
  static MessageCatalog Load(const std::filesystem::path& path);

  bool Has(std::string_view key) const;

  /// Throws Error(kUnknownMessageKey) or Error(kMissingSlot, name).
  std::string Render(std::string_view key, const Slots& slots = {}) const;

 private:
  std::map<std::string, std::string, std::less<>> templates_;
};

}  // namespace irf::dialogue

#endif  // IRF_DIALOGUE_MESSAGE_CATALOG_H_
