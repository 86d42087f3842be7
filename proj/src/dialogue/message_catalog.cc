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

#include "irf/dialogue/message_catalog.h"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace irf::dialogue {
namespace {

constexpr std::array<std::string_view, 25> kRequired = {
    "rec_header",      "rec_item_line",     "rec_item_reason",
    "explain_line",    "explain_none",      "profile_header",
    "profile_line",    "profile_empty",     "item_details",
    "ask_question",    "answer_applied",    "answer_kept",
    "ack_preference",  "polarity_like",     "polarity_dislike",
    "help",            "goodbye",           "fallback",
    "service_unavailable", "item_unknown",  "error_generic",
    "session_ended",   "no_recommendations", "no_question",
    "feature_missing"};

bool IsSlotChar(char c) {
  return std::islower(static_cast<unsigned char>(c)) ||
         std::isdigit(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::span<const std::string_view> RequiredMessageKeys() { return kRequired; }

MessageCatalog::MessageCatalog(std::map<std::string, std::string> templates)
    : templates_(templates.begin(), templates.end()) {}

MessageCatalog MessageCatalog::FromJson(const Json& doc, bool require_all) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "messages file must be an object");
  }
  std::map<std::string, std::string> templates;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!it->is_string()) {
      throw Error(ErrorCode::kMalformedDocument,
                  "message '" + it.key() + "' must be a string");
    }
    templates[it.key()] = it->get<std::string>();
  }
  if (require_all) {
    for (auto key : kRequired) {
      if (!templates.contains(std::string(key))) {
        throw Error(ErrorCode::kMissingField, std::string(key));
      }
    }
  }
  return MessageCatalog(std::move(templates));
}

MessageCatalog MessageCatalog::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return FromJson(ParseJson(ss.str()));
}

bool MessageCatalog::Has(std::string_view key) const {
  return templates_.find(key) != templates_.end();
}

std::string MessageCatalog::Render(std::string_view key, const Slots& slots) const {
  auto it = templates_.find(key);
  if (it == templates_.end()) {
    throw Error(ErrorCode::kUnknownMessageKey, std::string(key));
  }
  const std::string& tmpl = it->second;
  std::string out;
  out.reserve(tmpl.size());
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] == '{') {
      std::size_t end = i + 1;
      while (end < tmpl.size() && IsSlotChar(tmpl[end])) ++end;
      if (end < tmpl.size() && tmpl[end] == '}' && end > i + 1) {
        std::string name = tmpl.substr(i + 1, end - i - 1);
        auto slot = slots.find(name);
        if (slot == slots.end()) throw Error(ErrorCode::kMissingSlot, name);
        out += slot->second;
        i = end;
        continue;
      }
    }
    out.push_back(tmpl[i]);
  }
  return out;
}

}  // namespace irf::dialogue
