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

#ifndef IRF_GATEWAY_HTTP_SERVICE_H_
#define IRF_GATEWAY_HTTP_SERVICE_H_

#include <memory>
#include <string>
#include <thread>

#include "irf/gateway/gateway.h"

namespace httplib {
class Server;
}

namespace irf::gateway {

/// HTTP front end of a Gateway.
///
///   POST   /session                 {"user_id"}  -> 201 {"session_id"}
///   POST   /session/{sid}/message   {"text"}     -> 200 {"reply", "payload_type", "payload"}
///   DELETE /session/{sid}                        -> 200 {"merged_features"}
///   GET    /health                               -> 200 {"status": "ok"}
///
/// Errors are {"error": code, "detail": text} with 400, 404, 500 or 502.
class HttpService {
 public:
  explicit HttpService(Gateway& gateway);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds and serves on a background thread. Port 0 picks a free port.
  /// Returns the bound port.
  int Start(const std::string& host, int port);
  /// Binds and serves on the calling thread until Stop().
  void Run(const std::string& host, int port);
  void Stop();

 private:
  void Routes();

  Gateway& gateway_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

/// HTTP status for an error code.
int HttpStatusFor(ErrorCode code);

}  // namespace irf::gateway

#endif  // IRF_GATEWAY_HTTP_SERVICE_H_
