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

#include "fit/cli/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "fit/campaign/campaign.h"
#include "fit/campaign/inventory.h"
#include "fit/campaign/scenario.h"
#include "fit/error.h"
#include "fit/faults/fault_params.h"
#include "fit/osprobe/osprobe.h"
#include "fit/report/report.h"
#include "fit/transport/dry_run_transport.h"
#include "fit/transport/local_transport.h"
#include "fit/transport/ssh_transport.h"

namespace fit {
namespace {

using namespace std::chrono_literals;

[[noreturn]] void Usage(const std::string& message) {
  throw FitError(ErrorCode::kUsageError, message);
}

// Options shared by every subcommand. Raw strings are converted after parse.
struct CommonFlags {
  std::string target;
  std::string key;
  std::string target_class = "vm";
  std::string hold;
  bool dry_run = false;
  std::string output;
  std::optional<std::string> escalation;
  std::string assume_os = "ubuntu";
  std::string transport = "ssh";
  std::string inventory;
  int connect_timeout = 30;
  std::string duration;
};

const std::set<std::string>& CommonNames() {
  static const std::set<std::string> names = {
      "target", "key", "class", "hold", "dry-run", "output", "escalation",
      "assume-os", "transport", "inventory", "connect-timeout", "help"};
  return names;
}

void AddCommon(CLI::App& app, CommonFlags& f) {
  app.add_option("--target", f.target, "user@host[:port]");
  app.add_option("--key", f.key, "private key file (default $FIT_KEY)");
  app.add_option("--class", f.target_class, "vm or node")
      ->check(CLI::IsMember({"vm", "node"}));
  app.add_option("--hold", f.hold, "keep the fault in place, then revert");
  app.add_flag("--dry-run", f.dry_run, "print commands, execute nothing");
  app.add_option("--output", f.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--escalation", f.escalation, "prefix for privileged commands");
  app.add_option("--assume-os", f.assume_os, "family used by dry runs and plan")
      ->check(CLI::IsMember({"ubuntu", "centos"}));
  app.add_option("--transport", f.transport, "ssh or local")
      ->check(CLI::IsMember({"ssh", "local"}));
  app.add_option("--inventory", f.inventory, "inventory file");
  app.add_option("--connect-timeout", f.connect_timeout, "seconds")
      ->check(CLI::PositiveNumber);
}

// Pulls --name=value tokens that are not common options out of `args`.
ParamList ExtractParams(std::vector<std::string>& args) {
  ParamList params;
  std::vector<std::string> rest;
  for (const auto& a : args) {
    auto eq = a.find('=');
    if (a.rfind("--", 0) == 0 && eq != std::string::npos && eq > 2) {
      std::string name = a.substr(2, eq - 2);
      if (!CommonNames().count(name)) {
        params.emplace_back(name, a.substr(eq + 1));
        continue;
      }
    }
    rest.push_back(a);
  }
  args = std::move(rest);
  return params;
}

void Parse(CLI::App& app, std::vector<std::string> args) {
  // "--opt=" with an empty value would otherwise swallow the next token.
  std::vector<std::string> split;
  for (const auto& a : args) {
    if (a.size() > 3 && a.rfind("--", 0) == 0 && a.back() == '=' &&
        a.find('=') == a.size() - 1) {
      split.push_back(a.substr(0, a.size() - 1));
      split.emplace_back();
    } else {
      split.push_back(a);
    }
  }
  args = std::move(split);
  std::reverse(args.begin(), args.end());
  app.parse(args);
}

Invocation Finish(Invocation inv, const CommonFlags& f, const EnvLookup& env) {
  if (f.escalation) {
    inv.escalation = *f.escalation;
  } else if (auto e = env("FIT_ESCALATION")) {
    inv.escalation = *e;
  }
  inv.dry_run = f.dry_run;
  if (f.output == "text") inv.output = OutputFormat::kText;
  if (f.output == "json") inv.output = OutputFormat::kJson;
  if (!f.hold.empty()) {
    try {
      inv.hold = ParseTimeSpan(f.hold);
    } catch (const FitError&) {
      Usage("--hold " + f.hold);
    }
  }
  inv.assume_os = f.assume_os == "centos" ? OsFamily::kCentos : OsFamily::kUbuntu;
  inv.transport = f.transport == "local" ? TransportKind::kLocal : TransportKind::kSsh;
  inv.connect_timeout_seconds = f.connect_timeout;
  inv.inventory_path = f.inventory;

  std::string key = f.key;
  if (key.empty()) key = env("FIT_KEY").value_or("");
  if (!f.target.empty()) {
    Endpoint ep;
    try {
      ep = ParseEndpoint(f.target);
      ep.Validate();
    } catch (const FitError&) {
      Usage(f.target);
    }
    if (!key.empty()) ep.auth = KeyFileAuth{key};
    ep.target_class = *ParseTargetClass(f.target_class);
    inv.target = ep;
  }
  if (!key.empty()) inv.default_auth = KeyFileAuth{key};
  return inv;
}

bool IsKillRandom(const FaultSpec& spec) {
  return std::holds_alternative<KillRandomVM>(spec) ||
         std::holds_alternative<KillRandomFromWhitelist>(spec);
}

FaultSpec BuildFault(const std::string& name, const ParamList& params) {
  try {
    return FaultFromParams(name, params);
  } catch (const FitError& e) {
    Usage(e.what());
  }
}

void CheckTarget(const Invocation& inv) {
  if (IsKillRandom(*inv.fault)) return;
  if (!inv.target) Usage("--target is required for " + std::string(FaultName(*inv.fault)));
  try {
    Validate(*inv.fault, *inv.target);
  } catch (const FitError& e) {
    Usage(e.what());
  }
}

Invocation ParseInject(std::vector<std::string> args, const EnvLookup& env) {
  ParamList params = ExtractParams(args);
  CLI::App app{"Inject one fault into one endpoint", "fit inject"};
  CommonFlags f;
  std::string fault;
  app.add_option("fault", fault, "fault name")->required();
  AddCommon(app, f);
  Parse(app, args);
  Invocation inv;
  inv.mode = Mode::kSingleFault;
  inv.fault = BuildFault(fault, params);
  inv = Finish(std::move(inv), f, env);
  CheckTarget(inv);
  return inv;
}

Invocation ParseCompat(std::vector<std::string> args, const EnvLookup& env) {
  CLI::App app{"Inject one fault into one endpoint", "fit"};
  CommonFlags f;
  auto flag = std::find(args.begin(), args.end(), "--stressmem");
  if (args.end() - flag < 3) Usage("--stressmem needs <loops> <size>");
  std::vector<std::string> stressmem(flag + 1, flag + 3);
  args.erase(flag, flag + 3);
  std::string target;
  app.add_option("destination", target, "user@host");
  AddCommon(app, f);
  Parse(app, args);
  if (!target.empty()) {
    if (!f.target.empty() && f.target != target) Usage(target);
    f.target = target;
  }
  Invocation inv;
  inv.mode = Mode::kSingleFault;
  inv.fault = BuildFault("stress-mem", {{"size", stressmem[1]}, {"loops", stressmem[0]}});
  inv = Finish(std::move(inv), f, env);
  CheckTarget(inv);
  return inv;
}

Invocation ParseScenarioRun(std::vector<std::string> args, const EnvLookup& env) {
  CLI::App app{"Run a scenario file", "fit scenario"};
  CommonFlags f;
  std::string verb, path;
  app.add_option("verb", verb, "run")->required()->check(CLI::IsMember({"run"}));
  app.add_option("file", path, "scenario file")->required();
  AddCommon(app, f);
  Parse(app, args);
  Invocation inv;
  inv.mode = Mode::kScenario;
  inv.scenario_path = path;
  return Finish(std::move(inv), f, env);
}

Invocation ParseServe(std::vector<std::string> args, const EnvLookup& env) {
  CLI::App app{"Run an iperf server on a traffic peer", "fit serve-iperf-peer"};
  CommonFlags f;
  app.add_option("--duration", f.duration, "how long to serve (default 1h)");
  AddCommon(app, f);
  Parse(app, args);
  Invocation inv;
  inv.mode = Mode::kServeIperfPeer;
  if (!f.duration.empty()) {
    try {
      inv.serve_seconds = ParseDurationSeconds(f.duration);
    } catch (const FitError&) {
      Usage("--duration " + f.duration);
    }
  }
  inv = Finish(std::move(inv), f, env);
  if (!inv.target) Usage("--target is required");
  return inv;
}

Invocation ParsePlan(std::vector<std::string> args, const EnvLookup& env) {
  ParamList params = ExtractParams(args);
  CLI::App app{"Print the command plan of a fault", "fit plan"};
  CommonFlags f;
  std::string fault;
  app.add_option("fault", fault, "fault name")->required();
  AddCommon(app, f);
  Parse(app, args);
  Invocation inv;
  inv.mode = Mode::kPrintPlan;
  inv.fault = BuildFault(fault, params);
  return Finish(std::move(inv), f, env);
}

const char kUsage[] =
    "usage:\n"
    "  fit inject <fault> --<param>=<value>... --target user@host [--key path]\n"
    "  fit --stressmem <loops> <size> user@host -no <keypath>\n"
    "  fit scenario run <file> [--inventory file]\n"
    "  fit serve-iperf-peer --target user@host [--key path] [--duration 1h]\n"
    "  fit plan <fault> --<param>=<value>... [--assume-os ubuntu|centos]\n"
    "  fit list\n"
    "common options: --dry-run --output text|json --hold <span> --class vm|node\n"
    "  --escalation <prefix> --transport ssh|local --connect-timeout <s>\n";

}  // namespace

EnvLookup ProcessEnv() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (!v) return std::nullopt;
    return std::string(v);
  };
}

Invocation ParseArgs(const std::vector<std::string>& argv, const EnvLookup& env) {
  std::vector<std::string> args = argv;
  for (auto& a : args) {
    if (a == "-no") a = "--key";
  }
  Invocation help;
  help.mode = Mode::kHelp;
  help.help_text = kUsage;
  if (args.empty()) Usage("missing command\n" + std::string(kUsage));
  const std::string head = args.front();
  std::vector<std::string> tail(args.begin() + 1, args.end());
  try {
    if (head == "help" || head == "--help" || head == "-h") return help;
    if (head == "list") {
      if (!tail.empty()) Usage(tail.front());
      Invocation inv;
      inv.mode = Mode::kList;
      return inv;
    }
    if (head == "inject") return ParseInject(tail, env);
    if (head == "scenario") return ParseScenarioRun(tail, env);
    if (head == "serve-iperf-peer") return ParseServe(tail, env);
    if (head == "plan") return ParsePlan(tail, env);
    if (std::find(args.begin(), args.end(), "--stressmem") != args.end()) {
      return ParseCompat(args, env);
    }
  } catch (const CLI::CallForHelp&) {
    return help;
  } catch (const CLI::ParseError& e) {
    Usage(e.what());
  }
  Usage(head);
}

std::vector<std::string> RenderFlags(const FaultSpec& spec) {
  std::vector<std::string> out = {"inject", std::string(FaultName(spec))};
  for (const auto& [k, v] : FaultToParams(spec)) out.push_back("--" + k + "=" + v);
  return out;
}

namespace {

int ExitFor(const FitError& e) {
  switch (e.code()) {
    case ErrorCode::kUsageError:
    case ErrorCode::kInvalidParameter:
    case ErrorCode::kScopeMismatch:
    case ErrorCode::kUnknownFault:
      return kExitUsage;
    case ErrorCode::kPreflightFailed:
    case ErrorCode::kSyntaxError:
    case ErrorCode::kInvalidField:
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kEmptyPool:
    case ErrorCode::kWhitelistUnreadable:
      return kExitPreflightFailed;
    default:
      return 1;
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FitError(ErrorCode::kPreflightFailed, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TransportFactory RealTransports(const Invocation& inv, const MainDeps& deps) {
  if (deps.transport) return deps.transport;
  std::shared_ptr<Transport> t;
  if (inv.transport == TransportKind::kLocal) {
    t = std::make_shared<LocalTransport>();
  } else {
    t = std::make_shared<SshTransport>();
  }
  return [t](const Endpoint&) { return t; };
}

void Render(const RunReport& report, const Invocation& inv, const MainDeps& deps,
            std::ostream& out) {
  bool json = inv.output ? *inv.output == OutputFormat::kJson : !deps.stdout_is_tty;
  out << (json ? RenderJson(report) : RenderText(report));
}

void RenderDryRun(const DryRunTransport& dry, const RunReport& report,
                  const Invocation& inv, const MainDeps& deps, std::ostream& out) {
  bool json = inv.output ? *inv.output == OutputFormat::kJson : !deps.stdout_is_tty;
  if (!json) {
    out << "dry run, assuming " << OsFamilyName(inv.assume_os) << "; nothing executed\n";
    for (const auto& c : dry.commands()) out << "$ " << c << "\n";
  }
  Render(report, inv, deps, out);
}

Scenario LoadScenario(const std::string& path) {
  return ParseScenario(ReadFile(path));
}

// KillRandom* faults pick their victim like a one-step scenario would.
Scenario KillScenario(const FaultSpec& fault) {
  Scenario s;
  s.name = "inject " + std::string(FaultName(fault));
  ScenarioStep step;
  step.fault = fault;
  if (const auto* k = std::get_if<KillRandomVM>(&fault)) {
    step.selector.kind = Selector::Kind::kRandom;
    step.selector.pool = k->pool;
    s.seed = k->seed;
  } else {
    const auto& w = std::get<KillRandomFromWhitelist>(fault);
    step.selector.kind = Selector::Kind::kWhitelist;
    step.selector.whitelist_path = w.whitelist_path;
    s.seed = w.seed;
  }
  s.steps.push_back(step);
  return s;
}

int RunScenario(const Scenario& scenario, const Invocation& inv, const MainDeps& deps,
                std::ostream& out) {
  const Auth& auth = inv.default_auth;
  Inventory inventory;
  if (!inv.inventory_path.empty()) inventory = LoadInventory(inv.inventory_path, auth);
  CampaignOptions opts;
  opts.escalation = inv.escalation;
  opts.connect_timeout = std::chrono::seconds(inv.connect_timeout_seconds);
  opts.abort = deps.abort;
  opts.default_auth = auth;
  if (inv.dry_run) {
    auto dry = std::make_shared<DryRunTransport>(inv.assume_os);
    opts.skip_waits = true;
    RunReport report = RunCampaign(scenario, inventory,
                                   [dry](const Endpoint&) { return dry; }, opts);
    RenderDryRun(*dry, report, inv, deps, out);
    return ExitCode(report);
  }
  RunReport report = RunCampaign(scenario, inventory, RealTransports(inv, deps), opts);
  Render(report, inv, deps, out);
  return ExitCode(report);
}

int RunSingle(const Invocation& inv, const MainDeps& deps, std::ostream& out) {
  if (IsKillRandom(*inv.fault)) return RunScenario(KillScenario(*inv.fault), inv, deps, out);

  InjectOptions opts;
  opts.escalation = inv.escalation;
  opts.hold = inv.hold;
  opts.connect_timeout = std::chrono::seconds(inv.connect_timeout_seconds);
  opts.abort = deps.abort;

  RunReport report;
  report.scenario_name = "inject " + std::string(FaultName(*inv.fault));
  report.started_at = std::chrono::system_clock::now();
  auto t0 = std::chrono::steady_clock::now();
  std::shared_ptr<DryRunTransport> dry;
  std::shared_ptr<Transport> transport;
  if (inv.dry_run) {
    dry = std::make_shared<DryRunTransport>(inv.assume_os);
    transport = dry;
    if (opts.hold) opts.hold = 0ms;
  } else {
    transport = RealTransports(inv, deps)(*inv.target);
  }
  report.steps.push_back(InjectSingle(*inv.target, *inv.fault, *transport, opts));
  report.wall_clock = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  if (dry) {
    RenderDryRun(*dry, report, inv, deps, out);
  } else {
    Render(report, inv, deps, out);
  }
  return ExitCode(report);
}

int ServePeer(const Invocation& inv, const MainDeps& deps, std::ostream& out,
              std::ostream& err) {
  const std::string cmd = "iperf -s";
  if (inv.dry_run) {
    out << "$ " << cmd << "\n";
    return 0;
  }
  auto transport = RealTransports(inv, deps)(*inv.target);
  auto session = transport->Connect(*inv.target, std::chrono::seconds(inv.connect_timeout_seconds));
  OsProfile os = DetectOs(*session);
  StepRunner run = DirectRunner(*session, inv.escalation);
  EnsureTool(run, os, ToolId{Tool::kIperf, {}});
  out << "serving iperf on " << inv.target->Address() << " for " << inv.serve_seconds << "s\n";
  out.flush();
  ExecResult r = session->Exec(cmd, std::chrono::seconds(inv.serve_seconds));
  if (r.timed_out) return 0;
  if (r.exit_code != 0) err << "fit: iperf exited " << r.exit_code << ": " << r.stderr_text << "\n";
  return r.exit_code == 0 ? 0 : 1;
}

int PrintPlan(const Invocation& inv, std::ostream& out) {
  if (IsKillRandom(*inv.fault)) {
    out << RenderPlan(KillPlan());
    return 0;
  }
  OsProfile os = OsProfile::For(inv.assume_os);
  for (const auto& tool : RequiredTools(*inv.fault)) {
    if (!PackageName(tool.tool, os.family)) continue;
    out << RenderPlan(InstallPlan(os, tool));
  }
  out << RenderPlan(BuildCommandPlan(*inv.fault, os));
  return 0;
}

void PrintList(std::ostream& out) {
  for (const auto& e : OperationCatalog()) {
    out << e.access_level << "\t" << e.fault_name << "\t" << TargetClassName(e.target_class)
        << "\t" << e.operation << "\n";
  }
}

}  // namespace

int Main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
         const MainDeps& deps) {
  EnvLookup env = deps.env ? deps.env : ProcessEnv();
  Invocation inv;
  try {
    inv = ParseArgs(argv, env);
  } catch (const FitError& e) {
    err << "fit: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    switch (inv.mode) {
      case Mode::kHelp:
        out << inv.help_text;
        return 0;
      case Mode::kList:
        PrintList(out);
        return 0;
      case Mode::kPrintPlan:
        return PrintPlan(inv, out);
      case Mode::kServeIperfPeer:
        return ServePeer(inv, deps, out, err);
      case Mode::kSingleFault:
        return RunSingle(inv, deps, out);
      case Mode::kScenario:
        return RunScenario(LoadScenario(inv.scenario_path), inv, deps, out);
    }
  } catch (const FitError& e) {
    err << "fit: " << e.what() << "\n";
    return ExitFor(e);
  } catch (const std::exception& e) {
    err << "fit: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace fit
