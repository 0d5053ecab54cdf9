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

#include "fit/campaign/executor.h"

#include <fstream>
#include <sstream>
#include <thread>

#include "fit/error.h"
#include "fit/faults/fault_params.h"
#include "fit/osprobe/osprobe.h"
#include "fit/report/report.h"

namespace fit {

void AbortSignal::Request() {
  {
    std::lock_guard lock(mu_);
    level_.fetch_add(1);
  }
  cv_.notify_all();
}

bool AbortSignal::WaitFor(std::chrono::milliseconds duration) const {
  std::unique_lock lock(mu_);
  return cv_.wait_for(lock, duration, [&] { return level_.load() > 0; });
}

namespace {

using SteadyClock = std::chrono::steady_clock;

std::chrono::milliseconds Since(SteadyClock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(SteadyClock::now() - t);
}

bool IsTransportFailure(const FitError& e) {
  return e.code() == ErrorCode::kTransportBroken ||
         e.code() == ErrorCode::kSessionClosed ||
         e.code() == ErrorCode::kUnscriptedCommand;
}

// Owns the session for one step and records every command into the report.
class StepContext {
 public:
  StepContext(const Endpoint& endpoint, Transport& transport,
              const InjectOptions& options, StepReport& report)
      : endpoint_(endpoint), transport_(transport), options_(options), report_(report) {}

  void Connect() {
    session_.reset();
    session_ = transport_.Connect(endpoint_, options_.connect_timeout);
  }

  bool connected() const { return session_ && session_->is_open(); }

  StepRunner runner() {
    return [this](const CommandStep& step) { return Run(step, false); };
  }

  // True when the step's result is within its ok codes. Transport errors are
  // recorded, then rethrown.
  bool Ok(const CommandStep& step, bool use_fallback) {
    if (step.kind == CommandStep::Kind::kUpload) return Upload(step);
    ExecResult r = Run(step, use_fallback);
    return !r.timed_out && step.ok_exit_codes.count(r.exit_code) > 0;
  }

  ExecResult Run(const CommandStep& step, bool use_fallback) {
    std::string command =
        use_fallback && !step.fallback.empty() ? step.fallback : step.command;
    if (step.privileged && !options_.escalation.empty()) {
      command = options_.escalation + " " + command;
    }
    CommandOutcome out;
    out.phase = step.phase;
    out.command = command;
    const auto start = SteadyClock::now();
    try {
      if (!session_) {
        throw FitError(ErrorCode::kSessionClosed, "no open session");
      }
      ExecResult r = session_->Exec(command, std::chrono::seconds(step.timeout_seconds));
      out.exit_code = r.exit_code;
      out.duration = Since(start);
      out.stdout_text = CapOutput(r.stdout_text);
      out.stderr_text = CapOutput(r.stderr_text);
      if (r.timed_out) {
        out.status = CommandOutcome::Status::kTimedOut;
      } else if (step.ok_exit_codes.count(r.exit_code)) {
        out.status = CommandOutcome::Status::kOk;
      } else {
        out.status = CommandOutcome::Status::kFailed;
      }
      report_.transcript.push_back(std::move(out));
      return r;
    } catch (const FitError& e) {
      Record(std::move(out), start, e);
      if (e.code() == ErrorCode::kTransportBroken) session_.reset();
      throw;
    }
  }

 private:
  bool Upload(const CommandStep& step) {
    CommandOutcome out;
    out.phase = step.phase;
    out.command = "upload " + step.upload_from + " -> " + step.command;
    const auto start = SteadyClock::now();
    try {
      std::ifstream in(step.upload_from, std::ios::binary);
      if (!in) {
        throw FitError(ErrorCode::kInvalidParameter,
                       "cannot read local file " + step.upload_from);
      }
      std::ostringstream content;
      content << in.rdbuf();
      if (!session_) throw FitError(ErrorCode::kSessionClosed, "no open session");
      session_->Upload(content.str(), step.command);
    } catch (const FitError& e) {
      Record(std::move(out), start, e);
      if (e.code() == ErrorCode::kTransportBroken) {
        session_.reset();
        throw;
      }
      return false;
    }
    out.duration = Since(start);
    report_.transcript.push_back(std::move(out));
    return true;
  }

  void Record(CommandOutcome out, SteadyClock::time_point start, const FitError& e) {
    out.exit_code = -1;
    out.status = CommandOutcome::Status::kError;
    out.duration = Since(start);
    out.stderr_text = e.what();
    report_.transcript.push_back(std::move(out));
  }

  const Endpoint& endpoint_;
  Transport& transport_;
  const InjectOptions& options_;
  StepReport& report_;
  std::unique_ptr<Session> session_;
};

}  // namespace

StepReport InjectSingle(const Endpoint& endpoint, const FaultSpec& fault,
                        Transport& transport, const InjectOptions& options) {
  FaultSpec effective = fault;
  if (auto* block = std::get_if<BlockExternalAccess>(&effective);
      block && !block->control_port) {
    block->control_port = endpoint.port;
  }
  Validate(effective, endpoint);
  const bool kill = std::holds_alternative<KillRandomVM>(fault) ||
                    std::holds_alternative<KillRandomFromWhitelist>(fault);

  StepReport report;
  report.index = options.index;
  report.endpoint_label = endpoint.DisplayName();
  report.endpoint_address = endpoint.Address();
  report.fault_name = std::string(FaultName(fault));
  report.params = FaultToParams(fault);
  report.started_at = std::chrono::system_clock::now();
  const auto t0 = SteadyClock::now();

  auto finish = [&](StepStatus status, std::string note) {
    report.status = status;
    if (!note.empty()) {
      report.note = report.note.empty() ? std::move(note) : report.note + "; " + note;
    }
    report.duration = Since(t0);
    return report;
  };
  auto aborted = [&] { return options.abort && options.abort->requested(); };

  if (aborted()) return finish(StepStatus::kSkipped, "aborted before start");

  StepContext ctx(endpoint, transport, options, report);
  try {
    ctx.Connect();
  } catch (const FitError& e) {
    return finish(StepStatus::kFailed, e.what());
  }

  CommandPlan plan;
  try {
    OsProfile os = DetectOs(ctx.runner());
    report.os = os;
    if (os.family == OsFamily::kUnknown) {
      return finish(StepStatus::kFailed, "UnsupportedOS: target OS not recognized");
    }
    for (const ToolId& tool : RequiredTools(fault)) {
      if (aborted()) return finish(StepStatus::kSkipped, "aborted during provisioning");
      try {
        report.provisioning.push_back(EnsureTool(ctx.runner(), os, tool));
      } catch (const FitError& e) {
        if (IsTransportFailure(e)) throw;
        report.provisioning.push_back({tool, ProvisionOutcome::Action::kFailed, e.what()});
        return finish(StepStatus::kFailed, e.what());
      }
    }
    plan = kill ? KillPlan() : BuildCommandPlan(effective, os);
  } catch (const FitError& e) {
    return finish(StepStatus::kFailed, e.what());
  }

  bool use_fallback = false;
  for (const CommandStep& step : plan.StepsIn(Phase::kProbe)) {
    try {
      if (!ctx.Ok(step, false)) {
        if (!step.selects_fallback) {
          return finish(StepStatus::kFailed, "probe failed: " + step.command);
        }
        use_fallback = true;
      }
    } catch (const FitError& e) {
      return finish(StepStatus::kFailed, e.what());
    }
  }

  bool inject_began = false;
  bool inject_ok = true;
  bool was_aborted = false;
  SteadyClock::time_point inject_start;
  for (const CommandStep& step : plan.StepsIn(Phase::kInject)) {
    if (aborted()) {
      was_aborted = true;
      break;
    }
    if (!inject_began) inject_start = SteadyClock::now();
    inject_began = true;
    try {
      if (!ctx.Ok(step, use_fallback)) {
        inject_ok = false;
        report.note = "inject failed: " + step.command;
        break;
      }
    } catch (const FitError& e) {
      if (e.code() == ErrorCode::kTransportBroken && step.tolerate_disconnect) continue;
      inject_ok = false;
      report.note = e.what();
      break;
    }
  }

  const bool want_revert =
      plan.HasPhase(Phase::kRevert) && inject_began &&
      (!inject_ok || was_aborted || options.hold || options.always_revert);

  if (want_revert && inject_ok && !was_aborted && options.hold) {
    if (options.abort) {
      was_aborted = options.abort->WaitFor(*options.hold);
    } else {
      std::this_thread::sleep_for(*options.hold);
    }
  }

  bool reverted = false;
  bool revert_failed = false;
  bool revert_suppressed = false;
  if (want_revert) {
    if (options.abort && options.abort->forced()) {
      revert_suppressed = true;
      report.note += report.note.empty() ? "" : "; ";
      report.note += "forced abort: revert not issued";
    } else if (plan.revert_window_seconds &&
               Since(inject_start) >= std::chrono::seconds(*plan.revert_window_seconds)) {
      report.note += report.note.empty() ? "" : "; ";
      report.note += "deadline passed: revert skipped";
    } else {
      try {
        if (!ctx.connected()) ctx.Connect();
        for (const CommandStep& step : plan.StepsIn(Phase::kRevert)) {
          try {
            if (!ctx.Ok(step, use_fallback)) revert_failed = true;
          } catch (const FitError& e) {
            revert_failed = true;
            if (e.code() == ErrorCode::kTransportBroken) break;
          }
        }
      } catch (const FitError& e) {
        revert_failed = true;
        report.note += report.note.empty() ? "" : "; ";
        report.note += std::string("revert reconnect: ") + e.what();
      }
      reverted = !revert_failed;
    }
  }
  if (was_aborted) {
    report.note += report.note.empty() ? "" : "; ";
    report.note += "aborted";
  }

  if (revert_failed) return finish(StepStatus::kRevertFailed, "");
  if (!inject_ok || revert_suppressed) return finish(StepStatus::kFailed, "");
  if (was_aborted && !inject_began) return finish(StepStatus::kSkipped, "");
  if (reverted) return finish(StepStatus::kReverted, "");
  return finish(StepStatus::kSuccess, "");
}

}  // namespace fit
