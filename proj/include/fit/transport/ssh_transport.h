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

#include <string>
#include <vector>

#include "fit/transport/transport.h"

namespace fit {

struct SshOptions {
  std::string ssh_binary = "ssh";
  std::string strict_host_key_checking = "accept-new";
  // Appended as-is after the built-in options, e.g. {"-o", "LogLevel=ERROR"}.
  std::vector<std::string> extra_args;
};

// Remote-shell backend driving the OpenSSH client in batch mode. Key-file
// and agent auth only; PasswordAuth endpoints fail with kAuthFailed.
//
// Exit status 255 is ssh's own failure code and is reported as
// kTransportBroken rather than as a command result.
class SshTransport : public Transport {
 public:
  explicit SshTransport(SshOptions options = {});

  std::unique_ptr<Session> Connect(const Endpoint& endpoint,
                                   std::chrono::milliseconds timeout) override;

  // The ssh argv for an endpoint, ending with "--" and the destination.
  std::vector<std::string> BaseArgs(const Endpoint& endpoint,
                                    std::chrono::milliseconds connect_timeout) const;

 private:
  SshOptions options_;
};

}  // namespace fit
