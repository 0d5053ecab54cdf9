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

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fit/campaign/executor.h"
#include "fit/faults/fault_spec.h"
#include "fit/osprobe/os_profile.h"
#include "fit/transport/endpoint.h"
#include "fit/transport/transport.h"

namespace fit {

enum class Mode { kSingleFault, kScenario, kServeIperfPeer, kPrintPlan, kList, kHelp };
enum class OutputFormat { kText, kJson };
enum class TransportKind { kSsh, kLocal };

struct Invocation {
  Mode mode = Mode::kHelp;
  std::optional<FaultSpec> fault;
  std::optional<Endpoint> target;
  std::string scenario_path;
  std::string inventory_path;
  // From --key or FIT_KEY; used for the target and for inventory or
  // whitelist entries without their own key.
  Auth default_auth = AgentAuth{};
  bool dry_run = false;
  std::string escalation = "sudo -n";
  // Unset: text on a terminal, json otherwise.
  std::optional<OutputFormat> output;
  std::optional<std::chrono::milliseconds> hold;
  // Family assumed by dry runs and print-plan.
  OsFamily assume_os = OsFamily::kUbuntu;
  TransportKind transport = TransportKind::kSsh;
  int connect_timeout_seconds = 30;
  int serve_seconds = 3600;
  std::string help_text;

  bool operator==(const Invocation&) const = default;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// Reads the process environment.
EnvLookup ProcessEnv();

// `argv` excludes the program name. Accepts
//   inject <fault> --<param>=<value>... --target user@host --key <path>
//   --stressmem <loops> <size> user@host -no <keypath>
//   scenario run <file> [--inventory <file>]
//   serve-iperf-peer --target user@host --key <path>
//   plan <fault> --<param>=<value>... [--assume-os ubuntu|centos]
//   list | help
// "-no" is an alias of "--key". Throws FitError(kUsageError) naming the
// offending token.
Invocation ParseArgs(const std::vector<std::string>& argv, const EnvLookup& env);

// Inverse of ParseArgs for the fault part: {"inject", name, "--k=v", ...}.
std::vector<std::string> RenderFlags(const FaultSpec& spec);

struct MainDeps {
  // Overrides the ssh/local backends (tests). Unused by dry runs.
  TransportFactory transport;
  EnvLookup env;
  const AbortSignal* abort = nullptr;
  bool stdout_is_tty = false;
};

// Parses, dispatches and renders. Returns the report's exit code, 64 for
// usage errors, or 3 when preflight fails before a report exists.
int Main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
         const MainDeps& deps);

}  // namespace fit
