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

#include "irf/dialogue/nlu.h"

#include <algorithm>
#include <set>

namespace irf::dialogue {
namespace {

constexpr double kMinOverlap = 0.5;
constexpr double kOverlapScale = 0.9;

struct Token {
  std::string text;
  bool slot = false;  // text holds the entity type when set
};

bool TokenMatches(const PatternToken& p, const Token& t) {
  switch (p.kind) {
    case PatternToken::Kind::kWord:
      return !t.slot && t.text == p.text;
    case PatternToken::Kind::kPrefix:
      return !t.slot && t.text.starts_with(p.text);
    case PatternToken::Kind::kSlot:
      return t.slot && t.text == p.text;
    case PatternToken::Kind::kWildcard:
      return true;
  }
  return false;
}

bool MatchFrom(const std::vector<PatternToken>& pattern, std::size_t pi,
               const std::vector<Token>& tokens, std::size_t ti) {
  if (pi == pattern.size()) return true;
  if (pattern[pi].kind == PatternToken::Kind::kWildcard) {
    for (std::size_t skip = ti; skip <= tokens.size(); ++skip) {
      if (MatchFrom(pattern, pi + 1, tokens, skip)) return true;
    }
    return false;
  }
  if (ti >= tokens.size() || !TokenMatches(pattern[pi], tokens[ti])) {
    return false;
  }
  return MatchFrom(pattern, pi + 1, tokens, ti + 1);
}

bool MatchesAnywhere(const Pattern& pattern, const std::vector<Token>& tokens) {
  for (std::size_t start = 0; start <= tokens.size(); ++start) {
    if (MatchFrom(pattern.tokens, 0, tokens, start)) return true;
  }
  return false;
}

double Overlap(const Pattern& pattern, const std::vector<Token>& tokens,
               const std::set<std::string>& entity_types) {
  int literals = 0;
  int hits = 0;
  for (const auto& p : pattern.tokens) {
    if (p.kind == PatternToken::Kind::kSlot && !entity_types.contains(p.text)) {
      return 0.0;
    }
    if (p.kind != PatternToken::Kind::kWord && p.kind != PatternToken::Kind::kPrefix) {
      continue;
    }
    ++literals;
    hits += std::any_of(tokens.begin(), tokens.end(),
                        [&](const Token& t) { return TokenMatches(p, t); });
  }
  return literals == 0 ? 0.0 : static_cast<double>(hits) / literals;
}

}  // namespace

NluResult Classify(std::string_view utterance, const Workspace& ws) {
  const std::vector<std::string> words = Tokenize(utterance);
  NluResult result{std::string(kFallbackIntent), 0.0, {}};

  std::vector<Token> tokens;
  std::set<std::string> entity_types;
  for (std::size_t i = 0; i < words.size();) {
    std::size_t best_len = 0;
    const EntityType* best_type = nullptr;
    const EntityValue* best_value = nullptr;
    for (const auto& type : ws.entities()) {
      for (const auto& value : type.values) {
        for (const auto& syn : value.synonyms) {
          if (syn.size() <= best_len || i + syn.size() > words.size()) continue;
          if (std::equal(syn.begin(), syn.end(), words.begin() + static_cast<long>(i))) {
            best_len = syn.size();
            best_type = &type;
            best_value = &value;
          }
        }
      }
    }
    if (best_len == 0) {
      tokens.push_back({words[i], false});
      ++i;
      continue;
    }
    std::string span;
    for (std::size_t k = i; k < i + best_len; ++k) {
      if (!span.empty()) span.push_back(' ');
      span += words[k];
    }
    result.entities.push_back({best_type->name, best_value->canonical, std::move(span)});
    entity_types.insert(best_type->name);
    tokens.push_back({best_type->name, true});
    i += best_len;
  }

  for (const auto& intent : ws.intents()) {
    for (const auto& pattern : intent.patterns) {
      if (MatchesAnywhere(pattern, tokens)) {
        result.intent = intent.name;
        result.confidence = 1.0;
        return result;
      }
    }
  }

  double best = 0.0;
  for (const auto& intent : ws.intents()) {
    for (const auto& pattern : intent.patterns) {
      double overlap = Overlap(pattern, tokens, entity_types);
      if (overlap >= kMinOverlap && overlap > best) {
        best = overlap;
        result.intent = intent.name;
      }
    }
  }
  result.confidence = kOverlapScale * best;
  return result;
}

}  // namespace irf::dialogue
