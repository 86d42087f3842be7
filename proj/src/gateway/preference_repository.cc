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

#include "irf/gateway/preference_repository.h"

#include <fcntl.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace irf::gateway {
namespace {

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kPersistenceFailure, what + ": " + std::strerror(errno));
}

void WriteAll(int fd, const std::string& data, const std::string& path) {
  std::size_t done = 0;
  while (done < data.size()) {
    ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      Fail("write " + path);
    }
    done += static_cast<std::size_t>(n);
  }
}

void SyncDirectory(const std::filesystem::path& dir) {
  int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd < 0) return;
  ::fsync(fd);
  ::close(fd);
}

}  // namespace

FaultPoint FaultPointFromEnv() {
  const char* v = std::getenv("IRF_FAULT_INJECT");
  if (v == nullptr) return FaultPoint::kNone;
  std::string s(v);
  if (s == "before_rename") return FaultPoint::kBeforeRename;
  if (s == "after_rename") return FaultPoint::kAfterRename;
  return FaultPoint::kNone;
}

PreferenceRepository::PreferenceRepository(std::filesystem::path dir,
                                           FaultPoint fault)
    : dir_(std::move(dir)), fault_(fault) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    throw Error(ErrorCode::kPersistenceFailure,
                "cannot create " + dir_.string() + ": " + ec.message());
  }
}

std::filesystem::path PreferenceRepository::PathFor(const std::string& user_id) const {
  std::string name;
  for (unsigned char c : user_id) {
    if (std::isalnum(c) || c == '-' || c == '_') {
      name.push_back(static_cast<char>(c));
    } else {
      char buf[4];
      std::snprintf(buf, sizeof(buf), "%%%02X", c);
      name += buf;
    }
  }
  return dir_ / (name + ".json");
}

PreferenceStore PreferenceRepository::Load(const std::string& user_id,
                                           Timestamp now) const {
  const auto path = PathFor(user_id);
  std::ifstream in(path, std::ios::binary);
  if (!in) return PreferenceStore{user_id, {}, now};
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    auto store = ParsePreferenceStore(ss.str());
    if (store.user_id != user_id) {
      throw Error(ErrorCode::kMalformedDocument, "user_id mismatch");
    }
    return store;
  } catch (const Error& e) {
    throw Error(ErrorCode::kPersistenceFailure, path.string() + ": " + e.what());
  }
}

void PreferenceRepository::Save(const PreferenceStore& store) const {
  const auto path = PathFor(store.user_id);
  const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
  const std::string data = ToJson(store).dump(2) + "\n";

  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) Fail("open " + tmp);
  try {
    WriteAll(fd, data, tmp);
    if (::fsync(fd) != 0) Fail("fsync " + tmp);
  } catch (...) {
    ::close(fd);
    ::unlink(tmp.c_str());
    throw;
  }
  ::close(fd);

  if (fault_ == FaultPoint::kBeforeRename) std::_Exit(kFaultExitCode);
  if (::rename(tmp.c_str(), path.c_str()) != 0) {
    ::unlink(tmp.c_str());
    Fail("rename " + tmp);
  }
  SyncDirectory(dir_);
  if (fault_ == FaultPoint::kAfterRename) std::_Exit(kFaultExitCode);
}

std::mutex& PreferenceRepository::UserLock(const std::string& user_id) {
  std::lock_guard lock(locks_mu_);
  auto& slot = locks_[user_id];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

}  // namespace irf::gateway
