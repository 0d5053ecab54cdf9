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

#include "fit/transport/local_transport.h"

#include <cerrno>
#include <cstring>
#include <fstream>

#include "fit/error.h"
#include "fit/transport/subprocess.h"

namespace fit {

namespace {

class LocalSession : public Session {
 public:
  using Session::Session;
  ~LocalSession() override { Close(); }

 protected:
  ExecResult DoExec(std::string_view command,
                    std::chrono::milliseconds timeout) override {
    return RunProcess({"/bin/sh", "-c", std::string(command)}, {}, timeout);
  }

  void DoUpload(std::string_view content,
                const std::string& remote_path) override {
    std::ofstream f(remote_path, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw FitError(ErrorCode::kPermissionDenied,
                     remote_path + ": " + std::strerror(errno));
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.close();
    if (!f) {
      throw FitError(ErrorCode::kPermissionDenied, remote_path + ": write failed");
    }
  }
};

}  // namespace

std::unique_ptr<Session> LocalTransport::Connect(
    const Endpoint& endpoint, std::chrono::milliseconds /*timeout*/) {
  return std::make_unique<LocalSession>(endpoint);
}

}  // namespace fit
