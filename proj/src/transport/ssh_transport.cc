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

#include "fit/transport/ssh_transport.h"

#include <algorithm>

#include "fit/error.h"
#include "fit/transport/subprocess.h"

namespace fit {

namespace {

constexpr int kSshFailure = 255;

bool Contains(const std::string& haystack, std::string_view needle) {
  return haystack.find(needle) != std::string::npos;
}

class SshSession : public Session {
 public:
  SshSession(Endpoint endpoint, std::vector<std::string> base_args)
      : Session(std::move(endpoint)), base_args_(std::move(base_args)) {}
  ~SshSession() override { Close(); }

 protected:
  ExecResult DoExec(std::string_view command,
                    std::chrono::milliseconds timeout) override {
    auto argv = base_args_;
    argv.emplace_back(command);
    ExecResult r = RunProcess(argv, {}, timeout);
    if (!r.timed_out && r.exit_code == kSshFailure) {
      throw FitError(ErrorCode::kTransportBroken,
                     endpoint().DisplayName() + ": " + r.stderr_text);
    }
    return r;
  }

  void DoUpload(std::string_view content,
                const std::string& remote_path) override {
    auto argv = base_args_;
    argv.push_back("cat > " + ShellQuote(remote_path));
    ExecResult r = RunProcess(argv, content, std::chrono::minutes(5));
    if (r.timed_out || r.exit_code == kSshFailure) {
      throw FitError(ErrorCode::kTransportBroken,
                     endpoint().DisplayName() + ": upload of " + remote_path +
                         " failed: " + r.stderr_text);
    }
    if (r.exit_code != 0) {
      throw FitError(ErrorCode::kPermissionDenied,
                     remote_path + ": " + r.stderr_text);
    }
  }

 private:
  std::vector<std::string> base_args_;
};

}  // namespace

SshTransport::SshTransport(SshOptions options) : options_(std::move(options)) {}

std::vector<std::string> SshTransport::BaseArgs(
    const Endpoint& endpoint, std::chrono::milliseconds connect_timeout) const {
  auto secs = std::max<long long>(
      1, std::chrono::duration_cast<std::chrono::seconds>(connect_timeout).count());
  std::vector<std::string> argv = {
      options_.ssh_binary,
      "-o", "BatchMode=yes",
      "-o", "ConnectTimeout=" + std::to_string(secs),
      "-o", "StrictHostKeyChecking=" + options_.strict_host_key_checking,
      "-p", std::to_string(endpoint.port),
  };
  if (const auto* key = std::get_if<KeyFileAuth>(&endpoint.auth)) {
    argv.insert(argv.end(), {"-i", key->path, "-o", "IdentitiesOnly=yes"});
  }
  argv.insert(argv.end(), options_.extra_args.begin(), options_.extra_args.end());
  argv.push_back("--");
  argv.push_back(endpoint.username + "@" + endpoint.host);
  return argv;
}

std::unique_ptr<Session> SshTransport::Connect(
    const Endpoint& endpoint, std::chrono::milliseconds timeout) {
  endpoint.Validate();
  if (std::holds_alternative<PasswordAuth>(endpoint.auth)) {
    throw FitError(ErrorCode::kAuthFailed,
                   endpoint.DisplayName() +
                       ": password auth is not supported by the ssh backend");
  }
  auto base = BaseArgs(endpoint, timeout);
  auto argv = base;
  argv.push_back("true");
  ExecResult r = RunProcess(argv, {}, timeout + kExecGrace);
  if (r.timed_out) {
    throw FitError(ErrorCode::kTimeout, endpoint.DisplayName());
  }
  if (r.exit_code == kSshFailure) {
    if (Contains(r.stderr_text, "Permission denied") ||
        Contains(r.stderr_text, "Too many authentication failures")) {
      throw FitError(ErrorCode::kAuthFailed,
                     endpoint.DisplayName() + ": " + r.stderr_text);
    }
    if (Contains(r.stderr_text, "timed out")) {
      throw FitError(ErrorCode::kTimeout,
                     endpoint.DisplayName() + ": " + r.stderr_text);
    }
    throw FitError(ErrorCode::kUnreachable,
                   endpoint.DisplayName() + ": " + r.stderr_text);
  }
  if (r.exit_code != 0) {
    throw FitError(ErrorCode::kUnreachable,
                   endpoint.DisplayName() + ": ssh exited " +
                       std::to_string(r.exit_code) + ": " + r.stderr_text);
  }
  return std::make_unique<SshSession>(endpoint, std::move(base));
}

}  // namespace fit
