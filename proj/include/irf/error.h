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

#ifndef IRF_ERROR_H_
#define IRF_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace irf {

enum class ErrorCode {
  kInvalidArgument,
  kMalformedDocument,
  kMissingField,
  kEmptyCorpus,
  kEmptyFeatureSet,
  kClockSkew,
  kEmptyCandidates,
  kWouldEmptyCandidates,
  kUnknownItemReference,
  kUnknownMessageKey,
  kMissingSlot,
  kUpstreamUnavailable,
  kUpstreamMalformed,
  kNotFound,
  kSessionNotFound,
  kPersistenceFailure,
};

std::string_view ToString(ErrorCode code);

/// All failures raised by this library. `detail()` carries the offending
/// field, key or id where there is one (e.g. the missing field name).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace irf

#endif  // IRF_ERROR_H_
