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

// Gateway server: serves the session API in front of the configured
// recommender, user and item services.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "irf/gateway/gateway.h"
#include "irf/gateway/http_service.h"
#include "spdlog/spdlog.h"

int main(int argc, char** argv) {
  CLI::App app{"Interactive recommender gateway"};
  std::string config_path;
  std::string host = "127.0.0.1";
  int port = 8080;
  app.add_option("--config", config_path, "Gateway configuration file (overrides IRF_CONFIG)");
  app.add_option("--host", host, "Address to listen on");
  app.add_option("--port", port, "Port to listen on")->check(CLI::Range(0, 65535));
  CLI11_PARSE(app, argc, argv);

  if (config_path.empty()) {
    if (const char* env = std::getenv("IRF_CONFIG"); env != nullptr && *env != '\0') {
      config_path = env;
    } else {
      config_path = "config.json";
    }
  }

  try {
    irf::gateway::GatewayConfig config = irf::gateway::LoadGatewayConfig(config_path);
    irf::gateway::Gateway::Options options;
    options.fault = irf::gateway::FaultPointFromEnv();
    irf::gateway::Gateway gateway(config, options);
    gateway.Initialize();
    irf::gateway::HttpService service(gateway);
    spdlog::info("gateway listening on {}:{}", host, port);
    service.Run(host, port);
  } catch (const std::exception& e) {
    std::cerr << "irf_gateway: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
