/*
 * Copyright (c) 2026 The FIT Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "fit/transport/endpoint.h"

namespace fit {

// Exit code reported for a command killed at its timeout.
inline constexpr int kTimeoutExitCode = 124;

// Upper bound on how long Exec may run past its timeout.
inline constexpr std::chrono::milliseconds kExecGrace{2000};

struct ExecResult {
  int exit_code = 0;
  std::string stdout_text;
  std::string stderr_text;
  std::chrono::milliseconds duration{0};
  bool timed_out = false;
};

// A connection to one endpoint. Confined to a single thread at a time.
//
// Exec/Upload on a closed session throw FitError(kSessionClosed). Derived
// classes must call Close() from their destructor.
class Session {
 public:
  explicit Session(Endpoint endpoint) : endpoint_(std::move(endpoint)) {}
  virtual ~Session() = default;

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const Endpoint& endpoint() const { return endpoint_; }
  bool is_open() const { return open_; }

  // Runs `command` under a non-interactive shell. Throws
  // FitError(kTransportBroken) when the connection drops mid-command.
  ExecResult Exec(std::string_view command, std::chrono::milliseconds timeout);

  // Writes `content` to the absolute `remote_path`, replacing any file there.
  void Upload(std::string_view content, const std::string& remote_path);

  void Close();

 protected:
  virtual ExecResult DoExec(std::string_view command,
                            std::chrono::milliseconds timeout) = 0;
  virtual void DoUpload(std::string_view content,
                        const std::string& remote_path) = 0;
  virtual void DoClose() {}

 private:
  Endpoint endpoint_;
  bool open_ = true;
};

class Transport {
 public:
  virtual ~Transport() = default;

  // Returns an open session or throws FitError with kUnreachable,
  // kAuthFailed or kTimeout. Safe to call from several threads.
  virtual std::unique_ptr<Session> Connect(
      const Endpoint& endpoint, std::chrono::milliseconds timeout) = 0;
};

// Chooses the backend for an endpoint; invoked by each campaign worker.
using TransportFactory =
    std::function<std::shared_ptr<Transport>(const Endpoint&)>;

}  // namespace fit
