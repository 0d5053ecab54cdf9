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

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <string>

#include "fit/faults/fault_spec.h"
#include "fit/report/run_report.h"
#include "fit/transport/transport.h"

namespace fit {

// Operator abort. The first request stops new work and triggers reverts;
// the second one also suppresses reverts.
class AbortSignal {
 public:
  void Request();
  int level() const { return level_.load(); }
  bool requested() const { return level() > 0; }
  bool forced() const { return level() > 1; }

  // Sleeps for `duration` unless an abort arrives first. Returns true when
  // woken by an abort.
  bool WaitFor(std::chrono::milliseconds duration) const;

 private:
  std::atomic<int> level_{0};
  mutable std::mutex mu_;
  mutable std::condition_variable cv_;
};

struct InjectOptions {
  std::string escalation = "sudo -n";
  // Time the fault stays in place before its revert phase runs.
  std::optional<std::chrono::milliseconds> hold;
  // Revert even without a hold (campaign cleanup).
  bool always_revert = false;
  std::chrono::milliseconds connect_timeout{30'000};
  const AbortSignal* abort = nullptr;
  int index = 0;
};

// Connect, detect the OS, install missing tools, inject, then revert when
// a hold is set, the inject failed, or an abort arrived. For KillRandom*
// faults `endpoint` is the already-chosen victim.
//
// Throws only for argument validation (kInvalidParameter, kScopeMismatch);
// every later failure is recorded in the returned report.
StepReport InjectSingle(const Endpoint& endpoint, const FaultSpec& fault,
                        Transport& transport, const InjectOptions& options = {});

}  // namespace fit
