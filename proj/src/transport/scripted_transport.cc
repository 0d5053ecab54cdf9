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

#include "fit/transport/scripted_transport.h"

#include <algorithm>
#include <thread>

#include "fit/error.h"

namespace fit {

class ScriptedTransport::ScriptedSession : public Session {
 public:
  ScriptedSession(Endpoint endpoint, ScriptedTransport* owner, int id)
      : Session(std::move(endpoint)), owner_(owner), id_(id) {}
  ~ScriptedSession() override { Close(); }

 protected:
  ExecResult DoExec(std::string_view command,
                    std::chrono::milliseconds /*timeout*/) override {
    return owner_->Run(endpoint().host, id_, command);
  }
  void DoUpload(std::string_view content,
                const std::string& remote_path) override {
    owner_->Store(endpoint().host, id_, content, remote_path);
  }
  void DoClose() override { owner_->SessionClosed(); }

 private:
  ScriptedTransport* owner_;
  int id_;
};

ScriptedTransport& ScriptedTransport::AddHost(const std::string& host,
                                              HostBehavior behavior) {
  std::lock_guard lock(mu_);
  hosts_[host] = behavior;
  return *this;
}

ScriptedTransport& ScriptedTransport::Script(ScriptRule rule) {
  std::lock_guard lock(mu_);
  if (rule.replies.empty()) rule.replies.emplace_back();
  rules_.push_back(std::move(rule));
  return *this;
}

ScriptedTransport& ScriptedTransport::On(const std::string& command,
                                         ScriptedReply reply) {
  return Script({command, ScriptRule::Match::kExact, "", {std::move(reply)}});
}

ScriptedTransport& ScriptedTransport::OnPrefix(const std::string& prefix,
                                               ScriptedReply reply) {
  return Script({prefix, ScriptRule::Match::kPrefix, "", {std::move(reply)}});
}

ScriptedTransport& ScriptedTransport::OnSequence(
    const std::string& command, std::vector<ScriptedReply> replies) {
  return Script({command, ScriptRule::Match::kExact, "", std::move(replies)});
}

void ScriptedTransport::set_unmatched_policy(UnmatchedPolicy policy) {
  std::lock_guard lock(mu_);
  unmatched_policy_ = policy;
}

void ScriptedTransport::set_latency(std::chrono::milliseconds latency) {
  std::lock_guard lock(mu_);
  latency_ = latency;
}

void ScriptedTransport::set_exec_hook(ExecHook hook) {
  std::lock_guard lock(mu_);
  hook_ = std::move(hook);
}

void ScriptedTransport::set_unwritable_prefix(std::string prefix) {
  std::lock_guard lock(mu_);
  unwritable_prefix_ = std::move(prefix);
}

std::unique_ptr<Session> ScriptedTransport::Connect(
    const Endpoint& endpoint, std::chrono::milliseconds /*timeout*/) {
  std::lock_guard lock(mu_);
  auto it = hosts_.find(endpoint.host);
  if (it == hosts_.end()) {
    throw FitError(ErrorCode::kUnreachable,
                   endpoint.DisplayName() + ": host not in script");
  }
  if (it->second == HostBehavior::kAuthFails) {
    throw FitError(ErrorCode::kAuthFailed, endpoint.DisplayName());
  }
  if (it->second == HostBehavior::kTimesOut) {
    throw FitError(ErrorCode::kTimeout, endpoint.DisplayName());
  }
  ++open_;
  max_open_ = std::max(max_open_, open_);
  return std::make_unique<ScriptedSession>(endpoint, this, next_session_id_++);
}

ExecResult ScriptedTransport::Run(const std::string& host, int session_id,
                                  std::string_view command) {
  std::optional<ScriptedReply> reply;
  UnmatchedPolicy policy;
  std::chrono::milliseconds latency;
  ExecHook hook;
  TranscriptEntry entry{host, session_id, std::string(command), false, false};
  std::size_t seq;
  {
    std::lock_guard lock(mu_);
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const ScriptRule& rule = rules_[i];
      if (!rule.host.empty() && rule.host != host) continue;
      bool hit = rule.match == ScriptRule::Match::kExact
                     ? command == rule.pattern
                     : command.substr(0, rule.pattern.size()) == rule.pattern;
      if (!hit) continue;
      std::size_t& used = served_[i];
      reply = rule.replies[std::min(used, rule.replies.size() - 1)];
      ++used;
      break;
    }
    entry.matched = reply.has_value();
    if (!entry.matched) unmatched_.emplace_back(command);
    seq = transcript_.size();
    transcript_.push_back(entry);
    policy = unmatched_policy_;
    latency = latency_;
    hook = hook_;
  }
  if (latency.count() > 0) std::this_thread::sleep_for(latency);
  if (hook) hook(entry, seq);

  if (!reply) {
    switch (policy) {
      case UnmatchedPolicy::kThrow:
        throw FitError(ErrorCode::kUnscriptedCommand,
                       host + ": " + std::string(command));
      case UnmatchedPolicy::kFail:
        return {127, "", "unscripted command\n", latency, false};
      case UnmatchedPolicy::kSucceed:
        return {0, "", "", latency, false};
    }
  }
  if (reply->broken) {
    throw FitError(ErrorCode::kTransportBroken,
                   host + ": connection dropped during '" +
                       std::string(command) + "'");
  }
  ExecResult r;
  r.timed_out = reply->timed_out;
  r.exit_code = reply->timed_out ? kTimeoutExitCode : reply->exit_code;
  r.stdout_text = reply->stdout_text;
  r.stderr_text = reply->stderr_text;
  r.duration = latency;
  return r;
}

void ScriptedTransport::Store(const std::string& host, int session_id,
                              std::string_view content, const std::string& path) {
  ExecHook hook;
  TranscriptEntry entry{host, session_id, "upload " + path, true, true};
  std::size_t seq;
  {
    std::lock_guard lock(mu_);
    seq = transcript_.size();
    transcript_.push_back(entry);
    hook = hook_;
    if (!unwritable_prefix_.empty() &&
        path.compare(0, unwritable_prefix_.size(), unwritable_prefix_) == 0) {
      throw FitError(ErrorCode::kPermissionDenied, path);
    }
    uploads_[host + ":" + path] = std::string(content);
  }
  if (hook) hook(entry, seq);
}

void ScriptedTransport::SessionClosed() {
  std::lock_guard lock(mu_);
  --open_;
}

std::vector<TranscriptEntry> ScriptedTransport::transcript() const {
  std::lock_guard lock(mu_);
  return transcript_;
}

std::vector<std::string> ScriptedTransport::Commands(const std::string& host) const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& e : transcript_) {
    if (host.empty() || e.host == host) out.push_back(e.command);
  }
  return out;
}

std::vector<std::string> ScriptedTransport::unmatched() const {
  std::lock_guard lock(mu_);
  return unmatched_;
}

std::map<std::string, std::string> ScriptedTransport::uploads() const {
  std::lock_guard lock(mu_);
  return uploads_;
}

int ScriptedTransport::open_sessions() const {
  std::lock_guard lock(mu_);
  return open_;
}

int ScriptedTransport::max_open_sessions() const {
  std::lock_guard lock(mu_);
  return max_open_;
}

int ScriptedTransport::sessions_opened() const {
  std::lock_guard lock(mu_);
  return next_session_id_;
}

}  // namespace fit
