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

#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "fit/osprobe/os_profile.h"
#include "fit/transport/transport.h"

namespace fit {

// Records commands and executes nothing. Answers the OS probe as `assumed`,
// reports package-installable tools missing until an install command for
// them has been recorded, and succeeds everything else. Lets a dry run walk
// the full probe/provision/inject sequence without touching a network.
class DryRunTransport : public Transport {
 public:
  explicit DryRunTransport(OsFamily assumed = OsFamily::kUbuntu);

  std::unique_ptr<Session> Connect(const Endpoint& endpoint,
                                   std::chrono::milliseconds timeout) override;

  std::vector<std::string> commands() const;

 private:
  class DryRunSession;

  ExecResult Answer(const std::string& host, std::string_view command);

  OsFamily assumed_;
  mutable std::mutex mu_;
  std::vector<std::string> commands_;
  std::set<std::string> installed_;  // "host\0tool"
};

}  // namespace fit
