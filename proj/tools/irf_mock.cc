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

// Mock recommender, user and item services over a bundled corpus.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "irf/mock/corpus.h"
#include "irf/mock/mock_backend.h"
#include "spdlog/spdlog.h"

int main(int argc, char** argv) {
  CLI::App app{"Mock recommender, user and item services"};
  std::string corpus_path = "data/corpus.json";
  std::string host = "127.0.0.1";
  std::string scale = "unit";
  int port = 8090;
  app.add_option("--corpus", corpus_path, "Corpus file");
  app.add_option("--host", host, "Address to listen on");
  app.add_option("--port", port, "Port to listen on")->check(CLI::Range(0, 65535));
  app.add_option("--score-scale", scale, "Recommender score scale")
      ->check(CLI::IsMember({"unit", "hundred"}));
  CLI11_PARSE(app, argc, argv);

  try {
    irf::mock::MockBackend backend(irf::mock::LoadCorpus(corpus_path),
                                   irf::mock::ParseScoreScale(scale));
    spdlog::info("mock services listening on {}:{} (score scale {})", host, port, scale);
    backend.Run(host, port);
  } catch (const std::exception& e) {
    std::cerr << "irf_mock: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
