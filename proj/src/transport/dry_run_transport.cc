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

#include "fit/transport/dry_run_transport.h"

#include "fit/osprobe/osprobe.h"
#include "fit/osprobe/tools.h"

namespace fit {

namespace {

constexpr std::string_view kPresence = "command -v ";

// Tools a package manager can install; only these start out missing.
bool Installable(std::string_view name) {
  return name == "memtester" || name == "stress" || name == "iperf" ||
         name == "iptables";
}

}  // namespace

class DryRunTransport::DryRunSession : public Session {
 public:
  DryRunSession(Endpoint endpoint, DryRunTransport* owner)
      : Session(std::move(endpoint)), owner_(owner) {}
  ~DryRunSession() override { Close(); }

 protected:
  ExecResult DoExec(std::string_view command,
                    std::chrono::milliseconds /*timeout*/) override {
    return owner_->Answer(endpoint().host, command);
  }
  void DoUpload(std::string_view /*content*/,
                const std::string& remote_path) override {
    std::lock_guard lock(owner_->mu_);
    owner_->commands_.push_back("upload " + remote_path);
  }

 private:
  DryRunTransport* owner_;
};

DryRunTransport::DryRunTransport(OsFamily assumed) : assumed_(assumed) {}

std::unique_ptr<Session> DryRunTransport::Connect(
    const Endpoint& endpoint, std::chrono::milliseconds /*timeout*/) {
  return std::make_unique<DryRunSession>(endpoint, this);
}

std::vector<std::string> DryRunTransport::commands() const {
  std::lock_guard lock(mu_);
  return commands_;
}

ExecResult DryRunTransport::Answer(const std::string& host,
                                   std::string_view command) {
  std::lock_guard lock(mu_);
  commands_.emplace_back(command);
  ExecResult r;
  if (command == kOsReleaseProbe) {
    r.stdout_text = SynthesizeOsRelease(OsProfile::For(assumed_, ""));
    return r;
  }
  if (command.substr(0, kPresence.size()) == kPresence) {
    std::string tool(command.substr(kPresence.size()));
    if (Installable(tool) && !installed_.count(host + '\0' + tool)) {
      r.exit_code = 1;
    } else {
      r.stdout_text = "/usr/bin/" + tool + "\n";
    }
    return r;
  }
  if (command.find(" install ") != std::string_view::npos) {
    auto last_space = command.rfind(' ');
    std::string pkg(command.substr(last_space + 1));
    installed_.insert(host + '\0' + pkg);
  }
  return r;
}

}  // namespace fit
