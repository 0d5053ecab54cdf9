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

#include "fit/report/report.h"

#include <cstdio>
#include <ctime>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace fit {

namespace {

using Json = nlohmann::ordered_json;

const StepStatus kAllStatuses[] = {StepStatus::kSuccess, StepStatus::kFailed,
                                   StepStatus::kSkipped, StepStatus::kReverted,
                                   StepStatus::kRevertFailed};

std::string_view TextPrefix(StepStatus s) {
  switch (s) {
    case StepStatus::kSuccess: return "OK";
    case StepStatus::kFailed: return "FAILED";
    case StepStatus::kSkipped: return "SKIPPED";
    case StepStatus::kReverted: return "REVERTED";
    case StepStatus::kRevertFailed: return "REVERT-FAILED";
  }
  return "?";
}

Json StepJson(const StepReport& step) {
  Json params = Json::object();
  for (const auto& [k, v] : step.params) params[k] = v;

  Json os = nullptr;
  if (step.os) {
    os = Json{{"family", OsFamilyName(step.os->family)},
              {"version", step.os->version},
              {"package_manager", PackageManagerName(step.os->package_manager)}};
  }
  Json provisioning = Json::array();
  for (const auto& p : step.provisioning) {
    provisioning.push_back({{"tool", p.tool.name()},
                            {"action", ProvisionActionName(p.action)},
                            {"detail", p.detail}});
  }
  Json transcript = Json::array();
  for (const auto& c : step.transcript) {
    transcript.push_back({{"phase", PhaseName(c.phase)},
                          {"command", c.command},
                          {"exit_code", c.exit_code},
                          {"status", CommandStatusName(c.status)},
                          {"duration_ms", c.duration.count()},
                          {"stdout", c.stdout_text},
                          {"stderr", c.stderr_text}});
  }
  Json started = nullptr;
  if (step.started_at.time_since_epoch().count() != 0) {
    started = FormatTimestamp(step.started_at);
  }
  return Json{{"index", step.index},
              {"endpoint", step.endpoint_label},
              {"address", step.endpoint_address},
              {"fault", step.fault_name},
              {"params", params},
              {"status", StepStatusName(step.status)},
              {"note", step.note},
              {"started_at", started},
              {"duration_ms", step.duration.count()},
              {"os", os},
              {"provisioning", provisioning},
              {"transcript", transcript}};
}

std::string LastStderr(const StepReport& step) {
  for (auto it = step.transcript.rbegin(); it != step.transcript.rend(); ++it) {
    if (!it->stderr_text.empty()) return it->stderr_text;
  }
  return step.note.empty() ? "(no stderr captured)" : step.note;
}

std::string Seconds(std::chrono::milliseconds ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms.count() / 1000.0 << "s";
  return out.str();
}

}  // namespace

std::string_view StepStatusName(StepStatus status) {
  switch (status) {
    case StepStatus::kSuccess: return "success";
    case StepStatus::kFailed: return "failed";
    case StepStatus::kSkipped: return "skipped";
    case StepStatus::kReverted: return "reverted";
    case StepStatus::kRevertFailed: return "revert-failed";
  }
  return "?";
}

std::string_view CommandStatusName(CommandOutcome::Status status) {
  switch (status) {
    case CommandOutcome::Status::kOk: return "ok";
    case CommandOutcome::Status::kFailed: return "failed";
    case CommandOutcome::Status::kTimedOut: return "timed-out";
    case CommandOutcome::Status::kError: return "error";
  }
  return "?";
}

std::map<StepStatus, int> RunReport::Summary() const {
  std::map<StepStatus, int> counts;
  for (StepStatus s : kAllStatuses) counts[s] = 0;
  for (const auto& step : steps) ++counts[step.status];
  return counts;
}

std::string CapOutput(std::string_view text, std::size_t cap) {
  if (text.size() <= cap) return std::string(text);
  return std::string(text.substr(0, cap)) + "\n[truncated " +
         std::to_string(text.size() - cap) + " bytes]";
}

std::string FormatTimestamp(std::chrono::system_clock::time_point t) {
  using namespace std::chrono;
  const auto ms = duration_cast<milliseconds>(t.time_since_epoch()).count();
  std::time_t secs = static_cast<std::time_t>(ms / 1000);
  long frac = static_cast<long>(ms % 1000);
  if (frac < 0) {
    frac += 1000;
    --secs;
  }
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof(out), "%s.%03ldZ", buf, frac);
  return out;
}

std::string RenderJson(const RunReport& report) {
  Json summary = Json::object();
  const auto counts = report.Summary();
  for (StepStatus s : kAllStatuses) summary[std::string(StepStatusName(s))] = counts.at(s);

  Json steps = Json::array();
  for (const auto& step : report.steps) steps.push_back(StepJson(step));

  Json doc = {{"schema_version", "1"},
              {"scenario", report.scenario_name},
              {"started_at", FormatTimestamp(report.started_at)},
              {"wall_clock_seconds", report.wall_clock.count() / 1000.0},
              {"seed", report.seed ? Json(*report.seed) : Json(nullptr)},
              {"summary", summary},
              {"steps", steps}};
  return doc.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::string RenderText(const RunReport& report) {
  std::ostringstream out;
  for (const auto& step : report.steps) {
    out << TextPrefix(step.status) << " step " << step.index << " "
        << step.endpoint_label;
    if (step.endpoint_address != step.endpoint_label) {
      out << " (" << step.endpoint_address << ")";
    }
    out << " " << step.fault_name << " " << Seconds(step.duration) << "\n";
    if (step.status == StepStatus::kFailed || step.status == StepStatus::kRevertFailed) {
      if (!step.note.empty()) out << "  note: " << step.note << "\n";
      std::string excerpt = LastStderr(step);
      if (excerpt.size() > kTextExcerptCap) excerpt.resize(kTextExcerptCap);
      while (!excerpt.empty() && excerpt.back() == '\n') excerpt.pop_back();
      out << "  stderr: " << excerpt << "\n";
    }
  }
  const auto counts = report.Summary();
  out << report.steps.size() << " steps: "
      << counts.at(StepStatus::kSuccess) << " ok, "
      << counts.at(StepStatus::kReverted) << " reverted, "
      << counts.at(StepStatus::kFailed) << " failed, "
      << counts.at(StepStatus::kRevertFailed) << " revert-failed, "
      << counts.at(StepStatus::kSkipped) << " skipped"
      << " (" << Seconds(report.wall_clock) << ")\n";
  return out.str();
}

int ExitCode(const RunReport& report) {
  int code = 0;
  for (const auto& step : report.steps) {
    switch (step.status) {
      case StepStatus::kSuccess:
      case StepStatus::kReverted:
        break;
      case StepStatus::kRevertFailed:
        return 2;
      case StepStatus::kFailed:
      case StepStatus::kSkipped:
        code = 1;
        break;
    }
  }
  return code;
}

}  // namespace fit
