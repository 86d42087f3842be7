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

#ifndef IRF_DIALOGUE_POLICY_H_
#define IRF_DIALOGUE_POLICY_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "irf/dialogue/nlu.h"
#include "irf/domain.h"
#include "irf/question_generator.h"

namespace irf::dialogue {

// Intent names the policy understands. Anything else is treated as help.
namespace intent {
inline constexpr std::string_view kGetRecommendations = "get_recommendations";
inline constexpr std::string_view kExplainItem = "explain_item";
inline constexpr std::string_view kShowProfile = "show_profile";
inline constexpr std::string_view kItemDetails = "item_details";
inline constexpr std::string_view kLikeFeature = "like_feature";
inline constexpr std::string_view kDislikeFeature = "dislike_feature";
inline constexpr std::string_view kLikeItem = "like_item";
inline constexpr std::string_view kDislikeItem = "dislike_item";
inline constexpr std::string_view kAnswerYes = "answer_yes";
inline constexpr std::string_view kAnswerNo = "answer_no";
inline constexpr std::string_view kAnswerIndifferent = "answer_indifferent";
inline constexpr std::string_view kEndSession = "end_session";
inline constexpr std::string_view kHelp = "help";
}  // namespace intent

enum class Phase { kIdle, kRecommending, kAwaitingAnswer, kEnded };

std::string_view ToString(Phase phase);

struct DialogueState {
  Phase phase = Phase::kIdle;
  /// Set exactly when phase is kAwaitingAnswer.
  std::optional<ElicitationQuestion> pending;
  RecommendationList candidates;
  /// Features already asked about (and answered) in this session.
  std::set<std::string> asked;
  int turn_count = 0;
  std::optional<RecommendationList> last_list_shown;
};

struct RecommendAction {};
struct AskQuestionAction {
  ElicitationQuestion question;
};
struct ExplainAction {
  std::string item_id;
};
struct ShowProfileAction {};
struct ItemDetailsAction {
  std::string item_id;
};
struct RecordFeaturePrefAction {
  Feature feature;
  Polarity polarity;
};
struct RecordItemPrefAction {
  std::string item_id;
  Polarity polarity;
};
struct ApplyAnswerAction {
  std::string feature;
  Answer answer;
};
struct CloseSessionAction {};
struct HelpAction {
  enum class Reason { kFallback, kRequested, kOutOfContext, kMissingFeature };
  Reason reason;
};
struct SessionEndedAction {};

using Action =
    std::variant<RecommendAction, AskQuestionAction, ExplainAction,
                 ShowProfileAction, ItemDetailsAction, RecordFeaturePrefAction,
                 RecordItemPrefAction, ApplyAnswerAction, CloseSessionAction,
                 HelpAction, SessionEndedAction>;

struct PolicyConfig {
  /// Minimum number of candidates before a question is asked unprompted.
  int ask_threshold = 5;
};

struct Decision {
  std::vector<Action> actions;
  DialogueState state;
};

/// Maps a classified utterance to the actions to run and the next state.
/// Item references (ordinal or title) resolve against last_list_shown;
/// throws Error(kUnknownItemReference) when they do not.
Decision NextAction(const DialogueState& state, const NluResult& nlu,
                    const PolicyConfig& cfg);

/// Proactive elicitation, run once a Recommend action has produced
/// `candidates`: with at least ask_threshold of them and an unasked feature
/// of positive information gain, appends an AskQuestion and moves to
/// kAwaitingAnswer. Otherwise the phase is kRecommending.
Decision AfterRecommend(DialogueState state,
                        std::span<const ItemProfile> candidates,
                        const PolicyConfig& cfg);

}  // namespace irf::dialogue

#endif  // IRF_DIALOGUE_POLICY_H_
