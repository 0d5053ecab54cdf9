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
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fit/transport/transport.h"

namespace fit {

// One canned response. `broken` makes Exec throw kTransportBroken instead.
struct ScriptedReply {
  int exit_code = 0;
  std::string stdout_text;
  std::string stderr_text;
  bool timed_out = false;
  bool broken = false;
};

struct ScriptRule {
  enum class Match { kExact, kPrefix };

  std::string pattern;
  Match match = Match::kExact;
  // Empty matches any host.
  std::string host;
  // Served in order; the last reply repeats once the list is exhausted.
  std::vector<ScriptedReply> replies;
};

// What Exec does with a command no rule matches. Unmatched commands are
// recorded either way.
enum class UnmatchedPolicy { kThrow, kFail, kSucceed };

struct TranscriptEntry {
  std::string host;
  int session_id = 0;
  std::string command;
  bool matched = false;
  bool upload = false;
};

// Test double: replays canned results for commands and records every call.
// Rules are tried in insertion order; the first match wins. Thread-safe, so
// one instance can back a whole campaign.
class ScriptedTransport : public Transport {
 public:
  enum class HostBehavior { kAccept, kAuthFails, kTimesOut };

  // Hook run after each command is recorded, with its global sequence number.
  using ExecHook = std::function<void(const TranscriptEntry&, std::size_t)>;

  ScriptedTransport& AddHost(const std::string& host,
                             HostBehavior behavior = HostBehavior::kAccept);
  ScriptedTransport& Script(ScriptRule rule);
  ScriptedTransport& On(const std::string& command, ScriptedReply reply);
  ScriptedTransport& OnPrefix(const std::string& prefix, ScriptedReply reply);
  ScriptedTransport& OnSequence(const std::string& command,
                                std::vector<ScriptedReply> replies);

  void set_unmatched_policy(UnmatchedPolicy policy);
  void set_latency(std::chrono::milliseconds latency);
  void set_exec_hook(ExecHook hook);
  // Uploads under this directory fail with kPermissionDenied.
  void set_unwritable_prefix(std::string prefix);

  std::unique_ptr<Session> Connect(const Endpoint& endpoint,
                                   std::chrono::milliseconds timeout) override;

  std::vector<TranscriptEntry> transcript() const;
  // Commands issued against `host`, or all commands when host is empty.
  std::vector<std::string> Commands(const std::string& host = "") const;
  std::vector<std::string> unmatched() const;
  // Keyed by "host:path".
  std::map<std::string, std::string> uploads() const;

  int open_sessions() const;
  int max_open_sessions() const;
  int sessions_opened() const;

 private:
  class ScriptedSession;

  ExecResult Run(const std::string& host, int session_id,
                 std::string_view command);
  void Store(const std::string& host, int session_id, std::string_view content,
             const std::string& path);
  void SessionClosed();

  mutable std::mutex mu_;
  std::map<std::string, HostBehavior> hosts_;
  std::vector<ScriptRule> rules_;
  std::map<std::size_t, std::size_t> served_;  // rule index -> replies used
  UnmatchedPolicy unmatched_policy_ = UnmatchedPolicy::kThrow;
  std::chrono::milliseconds latency_{0};
  ExecHook hook_;
  std::string unwritable_prefix_;

  std::vector<TranscriptEntry> transcript_;
  std::vector<std::string> unmatched_;
  std::map<std::string, std::string> uploads_;
  int open_ = 0;
  int max_open_ = 0;
  int next_session_id_ = 0;
};

}  // namespace fit
