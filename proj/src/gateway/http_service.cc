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

#include "irf/gateway/http_service.h"

#include "httplib.h"
#include "spdlog/spdlog.h"

namespace irf::gateway {

namespace {

void SendJson(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, ErrorCode code, const std::string& detail) {
  SendJson(res, HttpStatusFor(code),
           {{"error", std::string(ToString(code))}, {"detail", detail}});
}

Json BodyObject(const httplib::Request& req) {
  Json body = ParseJson(req.body);
  if (!body.is_object()) throw Error(ErrorCode::kMalformedDocument, "body must be an object");
  return body;
}

std::string RequiredString(const Json& body, const char* field) {
  auto it = body.find(field);
  if (it == body.end()) throw Error(ErrorCode::kMissingField, field);
  if (!it->is_string()) throw Error(ErrorCode::kMalformedDocument, field);
  return it->get<std::string>();
}

template <typename F>
void Guarded(httplib::Response& res, F&& handler) {
  try {
    handler();
  } catch (const Error& e) {
    SendError(res, e.code(), e.detail());
  } catch (const std::exception& e) {
    spdlog::error("request failed: {}", e.what());
    SendError(res, ErrorCode::kInvalidArgument, e.what());
    res.status = 500;
  }
}

}  // namespace

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kMalformedDocument:
    case ErrorCode::kMissingField:
      return 400;
    case ErrorCode::kNotFound:
    case ErrorCode::kSessionNotFound:
      return 404;
    case ErrorCode::kUpstreamUnavailable:
    case ErrorCode::kUpstreamMalformed:
      return 502;
    default:
      return 500;
  }
}

HttpService::HttpService(Gateway& gateway)
    : gateway_(gateway), server_(std::make_unique<httplib::Server>()) {
  Routes();
}

HttpService::~HttpService() { Stop(); }

void HttpService::Routes() {
  server_->Get("/health", [](const httplib::Request&, httplib::Response& res) {
    SendJson(res, 200, {{"status", "ok"}});
  });

  server_->Post("/session", [this](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] {
      std::string user_id = RequiredString(BodyObject(req), "user_id");
      SendJson(res, 201, {{"session_id", gateway_.OpenSession(user_id)}});
    });
  });

  server_->Post(R"(/session/([^/]+)/message)",
                [this](const httplib::Request& req, httplib::Response& res) {
                  Guarded(res, [&] {
                    std::string text = RequiredString(BodyObject(req), "text");
                    Reply reply = gateway_.HandleMessage(req.matches[1], text);
                    SendJson(res, 200,
                             {{"reply", reply.text},
                              {"payload_type", reply.payload_type},
                              {"payload", reply.payload}});
                  });
                });

  server_->Delete(R"(/session/([^/]+))",
                  [this](const httplib::Request& req, httplib::Response& res) {
                    Guarded(res, [&] {
                      CloseSummary summary = gateway_.CloseSession(req.matches[1]);
                      SendJson(res, 200, {{"merged_features", summary.merged_features}});
                    });
                  });
}

int HttpService::Start(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    throw Error(ErrorCode::kInvalidArgument, "cannot bind " + host + ":" + std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void HttpService::Run(const std::string& host, int port) {
  if (!server_->listen(host, port)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot bind " + host + ":" + std::to_string(port));
  }
}

void HttpService::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace irf::gateway
