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

#include "fit/faults/fault_spec.h"

#include <algorithm>
#include <cctype>

#include "fit/error.h"
#include "fit/transport/subprocess.h"

namespace fit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::string_view kBlockChain = "FIT-BLOCK";
constexpr int kShortTimeout = 30;
constexpr int kWorkloadTimeout = 3600;
// Slack on top of a self-terminating stressor's own duration.
constexpr int kStressSlack = 60;

void Require(bool cond, std::string_view fault, const std::string& why) {
  if (!cond) {
    throw FitError(ErrorCode::kInvalidParameter,
                   std::string(fault) + ": " + why);
  }
}

bool AllOf(std::string_view s, std::string_view extra) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [&](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) ||
           extra.find(c) != std::string_view::npos;
  });
}

CommandStep Step(Phase phase, std::string command, int timeout,
                 bool privileged = false) {
  CommandStep s;
  s.command = std::move(command);
  s.phase = phase;
  s.timeout_seconds = timeout;
  s.privileged = privileged;
  return s;
}

// Reaps leftovers of a self-terminating stressor. Exit 1 means nothing
// matched, which is the expected case.
CommandStep SafetyNetKill(std::string_view process) {
  CommandStep s = Step(Phase::kRevert, "pkill -x " + std::string(process), kShortTimeout);
  s.ok_exit_codes = {0, 1};
  return s;
}

std::string Iptables(std::string_view args) {
  return "iptables -w " + std::string(args);
}

std::string Basename(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  for (char& c : base) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' && c != '_') {
      c = '_';
    }
  }
  return base.empty() ? "plan.jmx" : base;
}

CommandPlan StopServicePlan(const StopService& f) {
  CommandPlan plan;
  CommandStep probe = Step(Phase::kProbe, "command -v systemctl", kShortTimeout);
  probe.selects_fallback = true;
  plan.steps.push_back(probe);

  CommandStep stop = Step(Phase::kInject, "systemctl stop " + f.service_name,
                          kShortTimeout * 2, true);
  stop.fallback = "service " + f.service_name + " stop";
  plan.steps.push_back(stop);

  CommandStep start = Step(Phase::kRevert, "systemctl start " + f.service_name,
                           kShortTimeout * 2, true);
  start.fallback = "service " + f.service_name + " start";
  plan.steps.push_back(start);
  return plan;
}

CommandPlan BlockPlan(const BlockExternalAccess& f) {
  const std::string port = std::to_string(f.control_port.value_or(22));
  const std::string chain(kBlockChain);
  CommandPlan plan;
  auto inject = [&](std::string args) {
    plan.steps.push_back(Step(Phase::kInject, Iptables(args), kShortTimeout, true));
  };
  inject("-N " + chain);
  inject("-A " + chain + " -i lo -j ACCEPT");
  inject("-A " + chain + " -o lo -j ACCEPT");
  inject("-A " + chain + " -m conntrack --ctstate ESTABLISHED,RELATED -j ACCEPT");
  inject("-A " + chain + " -p tcp --dport " + port + " -j ACCEPT");
  inject("-A " + chain + " -p tcp --sport " + port + " -j ACCEPT");
  inject("-A " + chain + " -j DROP");
  inject("-I INPUT 1 -j " + chain);
  inject("-I OUTPUT 1 -j " + chain);
  // Exit 1 (missing rule or chain) is tolerated so revert also cleans up
  // after a partially applied inject.
  auto revert = [&](std::string args) {
    CommandStep s = Step(Phase::kRevert, Iptables(args), kShortTimeout, true);
    s.ok_exit_codes = {0, 1};
    plan.steps.push_back(s);
  };
  revert("-D INPUT -j " + chain);
  revert("-D OUTPUT -j " + chain);
  revert("-F " + chain);
  revert("-X " + chain);
  return plan;
}

}  // namespace

std::string_view FaultName(const FaultSpec& spec) {
  return std::visit(
      Overloaded{
          [](const StressMem&) { return std::string_view("stress-mem"); },
          [](const StressCpu&) { return std::string_view("stress-cpu"); },
          [](const StressDiskIO&) { return std::string_view("stress-disk"); },
          [](const StressNet&) { return std::string_view("stress-net"); },
          [](const Shutdown&) { return std::string_view("shutdown"); },
          [](const StopService&) { return std::string_view("stop-service"); },
          [](const BlockExternalAccess&) { return std::string_view("block-external"); },
          [](const KillRandomVM&) { return std::string_view("kill-random-vm"); },
          [](const KillRandomFromWhitelist&) {
            return std::string_view("kill-random-whitelist");
          },
          [](const WorkloadYCSB&) { return std::string_view("ycsb"); },
          [](const WorkloadJMeter&) { return std::string_view("jmeter"); },
      },
      spec);
}

std::vector<std::string_view> FaultNames() {
  return {"stress-mem",     "stress-cpu",     "stress-disk",
          "stress-net",     "shutdown",       "stop-service",
          "block-external", "kill-random-vm", "kill-random-whitelist",
          "ycsb",           "jmeter"};
}

void ValidateParameters(const FaultSpec& spec) {
  const std::string_view name = FaultName(spec);
  std::visit(
      Overloaded{
          [&](const StressMem& f) {
            Require(f.size_bytes > 0, name, "size must be positive");
            Require(f.size_bytes % kMiB == 0, name, "size must be whole MiB");
            Require(f.loops > 0, name, "loops must be positive");
          },
          [&](const StressCpu& f) {
            Require(f.workers > 0, name, "workers must be positive");
            Require(f.duration_seconds > 0, name, "duration must be positive");
          },
          [&](const StressDiskIO& f) {
            Require(f.workers > 0, name, "workers must be positive");
            Require(f.bytes_per_worker > 0, name, "bytes must be positive");
            Require(f.duration_seconds > 0, name, "duration must be positive");
          },
          [&](const StressNet& f) {
            Require(AllOf(f.peer, ".-:_"), name, "peer must be a hostname or IP");
            Require(f.rate_bps > 0, name, "rate must be positive");
            Require(f.duration_seconds > 0, name, "duration must be positive");
          },
          [&](const Shutdown& f) {
            Require(f.delay_seconds > 0, name, "delay must be positive");
          },
          [&](const StopService& f) {
            Require(AllOf(f.service_name, "@._:-"), name,
                    "service name must match [A-Za-z0-9@._:-]+");
          },
          [&](const BlockExternalAccess& f) {
            if (f.control_port) {
              Require(*f.control_port >= 1 && *f.control_port <= 65535, name,
                      "port outside [1, 65535]");
            }
          },
          [&](const KillRandomVM& f) {
            Require(!f.pool.empty(), name, "pool is empty");
            for (const auto& e : f.pool) {
              Require(!e.empty(), name, "pool has an empty entry");
            }
          },
          [&](const KillRandomFromWhitelist& f) {
            Require(!f.whitelist_path.empty(), name, "whitelist path is empty");
          },
          [&](const WorkloadYCSB& f) {
            Require(!f.install_root.empty() && f.install_root.front() == '/', name,
                    "install root must be an absolute path");
            Require(AllOf(f.workload_name, "._-"), name,
                    "workload must match [A-Za-z0-9._-]+");
            Require(f.record_count > 0, name, "records must be positive");
            Require(f.operation_count > 0, name, "operations must be positive");
          },
          [&](const WorkloadJMeter& f) {
            Require(!f.install_root.empty() && f.install_root.front() == '/', name,
                    "install root must be an absolute path");
            Require(!f.plan_path.empty(), name, "plan path is empty");
          },
      },
      spec);
}

bool InScope(const FaultSpec& spec, TargetClass target_class) {
  if (target_class == TargetClass::kVm) return true;
  return std::holds_alternative<StressMem>(spec) ||
         std::holds_alternative<StressCpu>(spec) ||
         std::holds_alternative<StressNet>(spec) ||
         std::holds_alternative<Shutdown>(spec);
}

void Validate(const FaultSpec& spec, const Endpoint& target) {
  ValidateParameters(spec);
  target.Validate();
  if (!InScope(spec, target.target_class)) {
    throw FitError(ErrorCode::kScopeMismatch,
                   std::string(FaultName(spec)) + " is not available on " +
                       std::string(TargetClassName(target.target_class)) +
                       " target " + target.DisplayName());
  }
}

std::vector<ToolId> RequiredTools(const FaultSpec& spec) {
  return std::visit(
      Overloaded{
          [](const StressMem&) { return std::vector<ToolId>{{Tool::kMemtester, ""}}; },
          [](const StressCpu&) { return std::vector<ToolId>{{Tool::kStress, ""}}; },
          [](const StressDiskIO&) { return std::vector<ToolId>{{Tool::kStress, ""}}; },
          [](const StressNet&) { return std::vector<ToolId>{{Tool::kIperf, ""}}; },
          [](const Shutdown&) { return std::vector<ToolId>{}; },
          [](const StopService&) {
            return std::vector<ToolId>{{Tool::kServiceManager, ""}};
          },
          [](const BlockExternalAccess&) {
            return std::vector<ToolId>{{Tool::kIptables, ""}};
          },
          [](const KillRandomVM&) { return std::vector<ToolId>{}; },
          [](const KillRandomFromWhitelist&) { return std::vector<ToolId>{}; },
          [](const WorkloadYCSB& f) {
            return std::vector<ToolId>{{Tool::kYcsb, f.install_root}};
          },
          [](const WorkloadJMeter& f) {
            return std::vector<ToolId>{{Tool::kJmeter, f.install_root}};
          },
      },
      spec);
}

bool HasRevertPhase(const FaultSpec& spec) {
  return std::holds_alternative<StressCpu>(spec) ||
         std::holds_alternative<StressDiskIO>(spec) ||
         std::holds_alternative<StressNet>(spec) ||
         std::holds_alternative<Shutdown>(spec) ||
         std::holds_alternative<StopService>(spec) ||
         std::holds_alternative<BlockExternalAccess>(spec);
}

CommandPlan BuildCommandPlan(const FaultSpec& spec, const OsProfile& profile) {
  if (profile.family == OsFamily::kUnknown) {
    throw FitError(ErrorCode::kUnsupportedOS,
                   std::string(FaultName(spec)) + " needs a recognized OS");
  }
  ValidateParameters(spec);
  return std::visit(
      Overloaded{
          [](const StressMem& f) {
            CommandPlan plan;
            plan.steps.push_back(Step(
                Phase::kInject,
                "memtester " + std::to_string(f.size_bytes / kMiB) + "M " +
                    std::to_string(f.loops),
                kWorkloadTimeout * f.loops));
            return plan;
          },
          [](const StressCpu& f) {
            CommandPlan plan;
            plan.steps.push_back(Step(
                Phase::kInject,
                "stress --cpu " + std::to_string(f.workers) + " --timeout " +
                    std::to_string(f.duration_seconds) + "s",
                f.duration_seconds + kStressSlack));
            plan.steps.push_back(SafetyNetKill("stress"));
            return plan;
          },
          [](const StressDiskIO& f) {
            CommandPlan plan;
            plan.steps.push_back(Step(
                Phase::kInject,
                "stress --hdd " + std::to_string(f.workers) + " --hdd-bytes " +
                    std::to_string(f.bytes_per_worker) + " --timeout " +
                    std::to_string(f.duration_seconds) + "s",
                f.duration_seconds + kStressSlack));
            plan.steps.push_back(SafetyNetKill("stress"));
            return plan;
          },
          [](const StressNet& f) {
            CommandPlan plan;
            plan.steps.push_back(Step(
                Phase::kInject,
                "iperf -c " + f.peer + " -t " + std::to_string(f.duration_seconds) +
                    " -b " + std::to_string(f.rate_bps),
                f.duration_seconds + kStressSlack));
            plan.steps.push_back(SafetyNetKill("iperf"));
            return plan;
          },
          [](const Shutdown& f) {
            const int minutes = (f.delay_seconds + 59) / 60;
            CommandPlan plan;
            plan.steps.push_back(Step(Phase::kInject,
                                      "shutdown -h +" + std::to_string(minutes),
                                      kShortTimeout, true));
            plan.steps.push_back(Step(Phase::kRevert, "shutdown -c", kShortTimeout, true));
            plan.revert_window_seconds = minutes * 60;
            return plan;
          },
          [](const StopService& f) { return StopServicePlan(f); },
          [](const BlockExternalAccess& f) { return BlockPlan(f); },
          [](const KillRandomVM&) -> CommandPlan {
            throw FitError(ErrorCode::kScopeMismatch,
                           "kill-random-vm is planned per chosen endpoint");
          },
          [](const KillRandomFromWhitelist&) -> CommandPlan {
            throw FitError(ErrorCode::kScopeMismatch,
                           "kill-random-whitelist is planned per chosen endpoint");
          },
          [](const WorkloadYCSB& f) {
            const std::string ycsb = ShellQuote(f.install_root + "/bin/ycsb");
            const std::string args =
                " mongodb -s -P " +
                ShellQuote(f.install_root + "/workloads/" + f.workload_name) +
                " -p recordcount=" + std::to_string(f.record_count) +
                " -p operationcount=" + std::to_string(f.operation_count);
            CommandPlan plan;
            plan.steps.push_back(Step(Phase::kInject, ycsb + " load" + args, kWorkloadTimeout));
            plan.steps.push_back(Step(Phase::kInject, ycsb + " run" + args, kWorkloadTimeout));
            return plan;
          },
          [](const WorkloadJMeter& f) {
            const std::string remote = "/tmp/fit-jmeter-" + Basename(f.plan_path);
            CommandPlan plan;
            CommandStep upload = Step(Phase::kInject, remote, kShortTimeout);
            upload.kind = CommandStep::Kind::kUpload;
            upload.upload_from = f.plan_path;
            plan.steps.push_back(upload);
            plan.steps.push_back(Step(Phase::kInject,
                                      ShellQuote(f.install_root + "/bin/jmeter") +
                                          " -n -t " + ShellQuote(remote),
                                      kWorkloadTimeout));
            return plan;
          },
      },
      spec);
}

CommandPlan BuildRevertPlan(const FaultSpec& spec, const OsProfile& profile) {
  CommandPlan full = BuildCommandPlan(spec, profile);
  CommandPlan out;
  out.revert_window_seconds = full.revert_window_seconds;
  for (const auto& s : full.steps) {
    if (s.phase == Phase::kRevert || (s.phase == Phase::kProbe && s.selects_fallback)) {
      out.steps.push_back(s);
    }
  }
  if (!out.HasPhase(Phase::kRevert)) out.steps.clear();
  return out;
}

CommandPlan KillPlan() {
  CommandPlan plan;
  CommandStep s = Step(Phase::kInject, "shutdown -h now", kShortTimeout, true);
  s.tolerate_disconnect = true;
  plan.steps.push_back(s);
  return plan;
}

const std::vector<CatalogEntry>& OperationCatalog() {
  static const std::vector<CatalogEntry> kCatalog = {
      {"shutdown node", "cloud-admin", "shutdown", TargetClass::kNode},
      {"high CPU for node", "cloud-admin", "stress-cpu", TargetClass::kNode},
      {"high memory usage for node", "cloud-admin", "stress-mem", TargetClass::kNode},
      {"high bandwidth usage for node", "cloud-admin", "stress-net", TargetClass::kNode},
      {"shutdown random VM", "vm-admin", "kill-random-vm", TargetClass::kVm},
      {"high CPU for VM", "vm-admin", "stress-cpu", TargetClass::kVm},
      {"high memory usage for VM", "vm-admin", "stress-mem", TargetClass::kVm},
      {"block VM external access", "vm-admin", "block-external", TargetClass::kVm},
      {"high bandwidth usage for VM", "vm-admin", "stress-net", TargetClass::kVm},
      {"high disk I/O usage", "vm-admin", "stress-disk", TargetClass::kVm},
      {"stop service running on VM", "vm-admin", "stop-service", TargetClass::kVm},
      {"shutdown random VM from whitelist", "vm-admin", "kill-random-whitelist",
       TargetClass::kVm},
      {"YCSB workload on MongoDB VM", "vm-admin", "ycsb", TargetClass::kVm},
      {"run JMeter plan", "vm-admin", "jmeter", TargetClass::kVm},
  };
  return kCatalog;
}

}  // namespace fit
