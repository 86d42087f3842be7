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

#include "irf/dialogue/policy.h"

#include <charconv>

namespace irf::dialogue {
namespace {

std::optional<std::string> ResolveItem(const DialogueState& state,
                                       const NluResult& nlu) {
  for (const auto& e : nlu.entities) {
    if (e.type != kOrdinalEntity && e.type != kItemEntity) continue;
    if (!state.last_list_shown) break;
    const auto& items = state.last_list_shown->items;
    if (e.type == kItemEntity) {
      if (state.last_list_shown->Find(e.value) != nullptr) return e.value;
      break;
    }
    int ordinal = 0;
    auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), ordinal);
    if (ec == std::errc() && ordinal >= 1 && ordinal <= static_cast<int>(items.size())) {
      return items[static_cast<std::size_t>(ordinal - 1)].item_id;
    }
    break;
  }
  return std::nullopt;
}

std::string RequireItem(const DialogueState& state, const NluResult& nlu) {
  auto id = ResolveItem(state, nlu);
  if (!id) {
    std::string ref;
    for (const auto& e : nlu.entities) {
      if (e.type == kOrdinalEntity || e.type == kItemEntity) ref = e.span;
    }
    throw Error(ErrorCode::kUnknownItemReference, ref);
  }
  return *id;
}

std::vector<Feature> FeatureEntities(const NluResult& nlu) {
  std::vector<Feature> out;
  for (const auto& e : nlu.entities) {
    if (Workspace::IsFeatureEntity(e.type)) out.push_back(Feature::Make(e.type, e.value));
  }
  return out;
}

}  // namespace

std::string_view ToString(Phase phase) {
  switch (phase) {
    case Phase::kIdle: return "Idle";
    case Phase::kRecommending: return "Recommending";
    case Phase::kAwaitingAnswer: return "AwaitingAnswer";
    case Phase::kEnded: return "Ended";
  }
  return "Idle";
}

Decision NextAction(const DialogueState& state, const NluResult& nlu,
                    const PolicyConfig& /*cfg*/) {
  Decision d{{}, state};
  d.state.turn_count = state.turn_count + 1;
  if (state.phase == Phase::kEnded) {
    d.actions.push_back(SessionEndedAction{});
    return d;
  }

  // Leaving a pending question unanswered abandons it.
  auto move_on = [&d] {
    if (d.state.phase == Phase::kAwaitingAnswer) {
      d.state.phase = Phase::kRecommending;
      d.state.pending.reset();
    }
  };
  auto help = [&d](HelpAction::Reason reason) {
    d.actions.push_back(HelpAction{reason});
  };

  const std::string_view name = nlu.intent;
  if (name == intent::kGetRecommendations) {
    d.actions.push_back(RecommendAction{});
    d.state.phase = Phase::kRecommending;
    d.state.pending.reset();
  } else if (name == intent::kExplainItem) {
    d.actions.push_back(ExplainAction{RequireItem(state, nlu)});
    move_on();
  } else if (name == intent::kItemDetails) {
    d.actions.push_back(ItemDetailsAction{RequireItem(state, nlu)});
    move_on();
  } else if (name == intent::kShowProfile) {
    d.actions.push_back(ShowProfileAction{});
    move_on();
  } else if (name == intent::kLikeFeature || name == intent::kDislikeFeature) {
    auto features = FeatureEntities(nlu);
    if (features.empty()) {
      help(HelpAction::Reason::kMissingFeature);
      return d;
    }
    Polarity p = name == intent::kLikeFeature ? Polarity::kLike : Polarity::kDislike;
    for (auto& f : features) d.actions.push_back(RecordFeaturePrefAction{std::move(f), p});
    move_on();
  } else if (name == intent::kLikeItem || name == intent::kDislikeItem) {
    Polarity p = name == intent::kLikeItem ? Polarity::kLike : Polarity::kDislike;
    d.actions.push_back(RecordItemPrefAction{RequireItem(state, nlu), p});
    move_on();
  } else if (name == intent::kAnswerYes || name == intent::kAnswerNo ||
             name == intent::kAnswerIndifferent) {
    if (state.phase != Phase::kAwaitingAnswer || !state.pending) {
      help(HelpAction::Reason::kOutOfContext);
      return d;
    }
    Answer answer = name == intent::kAnswerYes  ? Answer::kYes
                    : name == intent::kAnswerNo ? Answer::kNo
                                                : Answer::kIndifferent;
    d.actions.push_back(ApplyAnswerAction{state.pending->feature, answer});
    d.state.asked.insert(state.pending->feature);
    d.state.pending.reset();
    d.state.phase = Phase::kRecommending;
  } else if (name == intent::kEndSession) {
    d.actions.push_back(CloseSessionAction{});
    d.state.phase = Phase::kEnded;
    d.state.pending.reset();
  } else if (name == intent::kHelp) {
    help(HelpAction::Reason::kRequested);
  } else {
    help(HelpAction::Reason::kFallback);
  }
  return d;
}

Decision AfterRecommend(DialogueState state,
                        std::span<const ItemProfile> candidates,
                        const PolicyConfig& cfg) {
  Decision d{{}, std::move(state)};
  d.state.phase = Phase::kRecommending;
  d.state.pending.reset();
  if (static_cast<int>(candidates.size()) < cfg.ask_threshold) return d;
  auto question = SelectQuestionFeature(candidates, d.state.asked);
  if (!question) return d;
  d.state.phase = Phase::kAwaitingAnswer;
  d.state.pending = *question;
  d.actions.push_back(AskQuestionAction{*question});
  return d;
}

}  // namespace irf::dialogue
