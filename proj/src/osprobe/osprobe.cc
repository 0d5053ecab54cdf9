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

#include "fit/osprobe/osprobe.h"

#include "fit/error.h"

namespace fit {

namespace {

constexpr int kProbeTimeout = 30;
constexpr int kIndexUpdateTimeout = 300;
constexpr int kInstallTimeout = 600;

CommandStep ProbeStep(std::string command) {
  CommandStep s;
  s.command = std::move(command);
  s.phase = Phase::kProbe;
  s.timeout_seconds = kProbeTimeout;
  return s;
}

CommandStep ProvisionStep(std::string command, int timeout, bool privileged) {
  CommandStep s;
  s.command = std::move(command);
  s.phase = Phase::kProvision;
  s.timeout_seconds = timeout;
  s.privileged = privileged;
  return s;
}

bool Ok(const CommandStep& step, const ExecResult& r) {
  return !r.timed_out && step.ok_exit_codes.count(r.exit_code) > 0;
}

}  // namespace

std::string_view ProvisionActionName(ProvisionOutcome::Action action) {
  switch (action) {
    case ProvisionOutcome::Action::kAlreadyPresent: return "already-present";
    case ProvisionOutcome::Action::kInstalled: return "installed";
    case ProvisionOutcome::Action::kFailed: return "failed";
  }
  return "?";
}

StepRunner DirectRunner(Session& session, std::string escalation) {
  return [&session, escalation = std::move(escalation)](const CommandStep& step) {
    std::string command = step.command;
    if (step.privileged && !escalation.empty()) command = escalation + " " + command;
    return session.Exec(command, std::chrono::seconds(step.timeout_seconds));
  };
}

OsProfile DetectOs(const StepRunner& run) {
  CommandStep primary = ProbeStep(std::string(kOsReleaseProbe));
  ExecResult r = run(primary);
  if (Ok(primary, r)) {
    OsProfile p = ParseOsRelease(r.stdout_text);
    if (p.family != OsFamily::kUnknown) return p;
  }
  CommandStep fallback = ProbeStep(std::string(kRedhatReleaseProbe));
  r = run(fallback);
  if (Ok(fallback, r)) return ParseRedhatRelease(r.stdout_text);
  return OsProfile::For(OsFamily::kUnknown);
}

OsProfile DetectOs(Session& session) { return DetectOs(DirectRunner(session)); }

bool ToolInstalled(const StepRunner& run, const ToolId& tool) {
  CommandStep step = ProbeStep(PresenceProbe(tool));
  return Ok(step, run(step));
}

bool ToolInstalled(Session& session, const ToolId& tool) {
  return ToolInstalled(DirectRunner(session), tool);
}

CommandPlan InstallPlan(const OsProfile& profile, const ToolId& tool) {
  if (profile.family == OsFamily::kUnknown) {
    throw FitError(ErrorCode::kUnsupportedOS,
                   "cannot install " + std::string(tool.name()) +
                       " on an unrecognized OS");
  }
  auto package = PackageName(tool.tool, profile.family);
  if (!package) {
    throw FitError(ErrorCode::kNotInstallable,
                   std::string(tool.name()) + " has no " +
                       std::string(OsFamilyName(profile.family)) +
                       " package; stage it on the target");
  }
  CommandPlan plan;
  switch (profile.package_manager) {
    case PackageManager::kApt:
      plan.steps.push_back(ProvisionStep("apt-get update", kIndexUpdateTimeout, true));
      plan.steps.push_back(ProvisionStep(
          "env DEBIAN_FRONTEND=noninteractive apt-get install -y " + *package,
          kInstallTimeout, true));
      break;
    case PackageManager::kYum:
      plan.steps.push_back(
          ProvisionStep("yum install -y " + *package, kInstallTimeout, true));
      break;
    case PackageManager::kNone:
      throw FitError(ErrorCode::kUnsupportedOS, "no package manager");
  }
  plan.steps.push_back(ProvisionStep(PresenceProbe(tool), kProbeTimeout, false));
  return plan;
}

ProvisionOutcome EnsureTool(const StepRunner& run, const OsProfile& profile,
                            const ToolId& tool) {
  if (ToolInstalled(run, tool)) {
    return {tool, ProvisionOutcome::Action::kAlreadyPresent, ""};
  }
  CommandPlan plan = InstallPlan(profile, tool);
  std::string detail;
  for (std::size_t i = 0; i + 1 < plan.steps.size(); ++i) {
    const CommandStep& step = plan.steps[i];
    ExecResult r = run(step);
    if (!Ok(step, r)) {
      std::string first = r.stderr_text.substr(0, r.stderr_text.find('\n'));
      if (!detail.empty()) detail += "; ";
      detail += step.command + " exited " + std::to_string(r.exit_code) + ": " + first;
    }
  }
  const CommandStep& recheck = plan.steps.back();
  if (!Ok(recheck, run(recheck))) {
    throw FitError(ErrorCode::kInstallFailed,
                   std::string(tool.name()) + " still missing after install" +
                       (detail.empty() ? "" : "; " + detail));
  }
  return {tool, ProvisionOutcome::Action::kInstalled, detail};
}

ProvisionOutcome EnsureTool(Session& session, const OsProfile& profile,
                            const ToolId& tool) {
  return EnsureTool(DirectRunner(session), profile, tool);
}

}  // namespace fit
