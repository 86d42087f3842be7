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

#include "irf/dialogue/workspace.h"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace irf::dialogue {
namespace {

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c == '\'' || c == '-' || c >= 0x80;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, "workspace: " + what);
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    auto uc = static_cast<unsigned char>(c);
    if (IsWordByte(uc)) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Pattern ParsePattern(std::string_view source) {
  Pattern pattern;
  pattern.source = std::string(source);
  std::istringstream words{std::string(source)};
  std::string word;
  while (words >> word) {
    if (word == "*") {
      pattern.tokens.push_back({PatternToken::Kind::kWildcard, ""});
    } else if (word.size() > 2 && word.front() == '{' && word.back() == '}') {
      pattern.tokens.push_back(
          {PatternToken::Kind::kSlot, Canonicalize(word.substr(1, word.size() - 2))});
    } else {
      bool prefix = word.back() == '*';
      if (prefix) word.pop_back();
      for (auto& t : Tokenize(word)) {
        pattern.tokens.push_back({PatternToken::Kind::kWord, std::move(t)});
      }
      if (prefix && !pattern.tokens.empty() &&
          pattern.tokens.back().kind == PatternToken::Kind::kWord) {
        pattern.tokens.back().kind = PatternToken::Kind::kPrefix;
      }
    }
  }
  if (pattern.tokens.empty()) Malformed("empty pattern '" + pattern.source + "'");
  return pattern;
}

Workspace Workspace::FromJson(const Json& doc) {
  if (!doc.is_object()) Malformed("document must be an object");
  Workspace ws;
  auto intents = doc.find("intents");
  if (intents == doc.end() || !intents->is_object()) {
    throw Error(ErrorCode::kMissingField, "intents");
  }
  for (auto it = intents->begin(); it != intents->end(); ++it) {
    if (!it->is_array() || it->empty()) {
      Malformed("intent '" + it.key() + "' needs a non-empty pattern list");
    }
    Intent intent{it.key(), {}};
    for (const auto& p : *it) {
      if (!p.is_string()) Malformed("patterns must be strings");
      intent.patterns.push_back(ParsePattern(p.get<std::string>()));
    }
    ws.intents_.push_back(std::move(intent));
  }
  if (auto entities = doc.find("entities"); entities != doc.end()) {
    if (!entities->is_object()) Malformed("entities must be an object");
    for (auto t = entities->begin(); t != entities->end(); ++t) {
      if (!t->is_object()) Malformed("entity type '" + t.key() + "' must be an object");
      std::vector<std::pair<std::string, std::vector<std::string>>> values;
      for (auto v = t->begin(); v != t->end(); ++v) {
        if (!v->is_array()) Malformed("synonyms must be a list");
        std::vector<std::string> synonyms;
        for (const auto& s : *v) {
          if (!s.is_string()) Malformed("synonyms must be strings");
          synonyms.push_back(s.get<std::string>());
        }
        values.emplace_back(v.key(), std::move(synonyms));
      }
      ws = ws.WithEntityValues(Canonicalize(t.key()), values);
    }
  }
  return ws;
}

Workspace Workspace::Load(const std::filesystem::path& path) {
  return FromJson(ParseJson(ReadFile(path)));
}

Workspace Workspace::WithEntityValues(
    const std::string& type,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& values) const {
  Workspace ws = *this;
  EntityType* target = nullptr;
  for (auto& e : ws.entities_) {
    if (e.name == type) target = &e;
  }
  if (target == nullptr) {
    ws.entities_.push_back({type, {}});
    target = &ws.entities_.back();
  }
  std::set<std::string> seen;
  for (const auto& v : target->values) seen.insert(v.canonical);
  for (const auto& [canonical, synonyms] : values) {
    std::string key = canonical;
    if (!seen.insert(key).second) {
      Malformed("duplicate value '" + key + "' in entity type '" + type + "'");
    }
    EntityValue value{key, {}};
    std::set<std::vector<std::string>> unique;
    auto add = [&](std::string_view text) {
      auto tokens = Tokenize(text);
      if (!tokens.empty() && unique.insert(tokens).second) {
        value.synonyms.push_back(std::move(tokens));
      }
    };
    add(key);
    for (const auto& s : synonyms) add(s);
    target->values.push_back(std::move(value));
  }
  return ws;
}

}  // namespace irf::dialogue
