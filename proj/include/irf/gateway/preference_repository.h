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

#ifndef IRF_GATEWAY_PREFERENCE_REPOSITORY_H_
#define IRF_GATEWAY_PREFERENCE_REPOSITORY_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "irf/domain.h"

namespace irf::gateway {

/// Test hook: terminate the process at a point inside Save().
enum class FaultPoint { kNone, kBeforeRename, kAfterRename };

/// Exit status used when a fault point fires.
inline constexpr int kFaultExitCode = 86;

/// Reads IRF_FAULT_INJECT ("before_rename" | "after_rename").
FaultPoint FaultPointFromEnv();

/// One JSON document per user under a directory. Writes go to a temporary
/// file that is fsync'ed and renamed over the target, so a reader only ever
/// sees a complete old or complete new document.
class PreferenceRepository {
 public:
  explicit PreferenceRepository(std::filesystem::path dir,
                                FaultPoint fault = FaultPoint::kNone);

  /// A user without a stored document gets an empty store stamped `now`.
  /// Throws Error(kPersistenceFailure) if the document cannot be read.
  PreferenceStore Load(const std::string& user_id, Timestamp now) const;

  /// Throws Error(kPersistenceFailure) on I/O errors.
  void Save(const PreferenceStore& store) const;

  /// Exclusive per-user lock for read-modify-write sequences.
  std::mutex& UserLock(const std::string& user_id);

  std::filesystem::path PathFor(const std::string& user_id) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  FaultPoint fault_;
  std::mutex locks_mu_;
  std::map<std::string, std::unique_ptr<std::mutex>> locks_;
};

}  // namespace irf::gateway

#endif  // IRF_GATEWAY_PREFERENCE_REPOSITORY_H_
