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

// A mock backend plus a gateway wired to it, for end-to-end tests.

#ifndef IRF_TESTS_STACK_H_
#define IRF_TESTS_STACK_H_

#include <atomic>
#include <filesystem>
#include <memory>
#include <random>
#include <string>

#include "irf/gateway/gateway.h"
#include "irf/mock/corpus.h"
#include "irf/mock/mock_backend.h"

namespace irf::testing {

/// Fixed instant used as "now" by test gateways.
inline constexpr Timestamp kTestNow = 1'800'000'000;

inline std::filesystem::path DataDir() { return IRF_DATA_DIR; }

/// A fresh, empty directory under the system temp dir. Removed on scope
/// exit.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("irf-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

struct StackOptions {
  mock::ScoreScale scale = mock::ScoreScale::kUnit;
  bool user_update_enabled = true;
  bool item_desc_enabled = true;
  int n_recommendations = 10;
};

inline gateway::GatewayConfig ConfigFor(int port, const std::filesystem::path& prefs,
                                        const StackOptions& opts = {}) {
  gateway::GatewayConfig c;
  const std::string url = "http://127.0.0.1:" + std::to_string(port);
  c.recommender_base_url = url;
  c.user_service_base_url = url;
  c.item_service_base_url = url;
  c.user_update_enabled = opts.user_update_enabled;
  c.item_desc_enabled = opts.item_desc_enabled;
  c.n_recommendations = opts.n_recommendations;
  c.workspace_path = DataDir() / "workspace.json";
  c.messages_path = DataDir() / "messages.json";
  c.persistence_path = prefs;
  return c;
}

class Stack {
 public:
  explicit Stack(StackOptions opts = {}) {
    backend = std::make_unique<mock::MockBackend>(
        mock::LoadCorpus(DataDir() / "corpus.json"), opts.scale);
    port = backend->Start("127.0.0.1", 0);
    config = ConfigFor(port, dir.path() / "prefs", opts);
    gateway::Gateway::Options gw_opts;
    gw_opts.clock = [this] { return now.load(); };
    gateway = std::make_unique<gateway::Gateway>(config, gw_opts);
    gateway->Initialize();
  }

  TempDir dir;
  std::atomic<Timestamp> now{kTestNow};
  std::unique_ptr<mock::MockBackend> backend;
  int port = 0;
  gateway::GatewayConfig config;
  std::unique_ptr<gateway::Gateway> gateway;
};

}  // namespace irf::testing

#endif  // IRF_TESTS_STACK_H_
