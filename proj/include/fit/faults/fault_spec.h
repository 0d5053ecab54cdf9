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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fit/faults/plan.h"
#include "fit/osprobe/os_profile.h"
#include "fit/osprobe/tools.h"
#include "fit/transport/endpoint.h"

namespace fit {

inline constexpr std::uint64_t kMiB = 1024 * 1024;

// Holds `size_bytes` of RAM under memtester for `loops` passes.
struct StressMem {
  std::uint64_t size_bytes = 0;
  int loops = 1;
  bool operator==(const StressMem&) const = default;
};

struct StressCpu {
  int workers = 1;
  int duration_seconds = 60;
  bool operator==(const StressCpu&) const = default;
};

struct StressDiskIO {
  int workers = 1;
  std::uint64_t bytes_per_worker = 1024 * kMiB;
  int duration_seconds = 60;
  bool operator==(const StressDiskIO&) const = default;
};

// Pushes traffic at an iperf server running on `peer`.
struct StressNet {
  std::string peer;
  std::uint64_t rate_bps = 100'000'000;
  int duration_seconds = 60;
  bool operator==(const StressNet&) const = default;
};

struct Shutdown {
  int delay_seconds = 60;
  bool operator==(const Shutdown&) const = default;
};

struct StopService {
  std::string service_name;
  bool operator==(const StopService&) const = default;
};

struct BlockExternalAccess {
  // Port kept open for the control channel; 22 when unset.
  std::optional<int> control_port;
  bool operator==(const BlockExternalAccess&) const = default;
};

// Shuts down one endpoint drawn from `pool` (labels or user@host).
struct KillRandomVM {
  std::vector<std::string> pool;
  std::optional<std::uint64_t> seed;
  bool operator==(const KillRandomVM&) const = default;
};

struct KillRandomFromWhitelist {
  std::string whitelist_path;
  std::optional<std::uint64_t> seed;
  bool operator==(const KillRandomFromWhitelist&) const = default;
};

struct WorkloadYCSB {
  std::string install_root;
  std::string workload_name = "workloada";
  std::int64_t record_count = 1000;
  std::int64_t operation_count = 1000;
  bool operator==(const WorkloadYCSB&) const = default;
};

struct WorkloadJMeter {
  std::string install_root;
  // Local file, shipped to the target before the run.
  std::string plan_path;
  bool operator==(const WorkloadJMeter&) const = default;
};

using FaultSpec =
    std::variant<StressMem, StressCpu, StressDiskIO, StressNet, Shutdown,
                 StopService, BlockExternalAccess, KillRandomVM,
                 KillRandomFromWhitelist, WorkloadYCSB, WorkloadJMeter>;

// CLI/scenario name, e.g. "stress-mem".
std::string_view FaultName(const FaultSpec& spec);
std::vector<std::string_view> FaultNames();

// Type invariants only. Throws FitError(kInvalidParameter).
void ValidateParameters(const FaultSpec& spec);

bool InScope(const FaultSpec& spec, TargetClass target_class);

// Parameters plus scope against the target. Throws kInvalidParameter or
// kScopeMismatch.
void Validate(const FaultSpec& spec, const Endpoint& target);

std::vector<ToolId> RequiredTools(const FaultSpec& spec);

// Whether the plan carries a revert phase on every supported family.
bool HasRevertPhase(const FaultSpec& spec);

// Inject (and revert) steps for the fault on a family. Pure. Throws
// kUnsupportedOS for an unknown family and kScopeMismatch for the
// KillRandom* variants, which are planned per chosen endpoint via KillPlan.
CommandPlan BuildCommandPlan(const FaultSpec& spec, const OsProfile& profile);

// Revert-phase subset of BuildCommandPlan, plus any selector probes the
// revert commands depend on.
CommandPlan BuildRevertPlan(const FaultSpec& spec, const OsProfile& profile);

// Immediate shutdown of the endpoint chosen by a KillRandom* fault.
CommandPlan KillPlan();

// One row of the operation catalog: what the operator asked for and which
// fault variant on which target class realizes it.
struct CatalogEntry {
  std::string_view operation;
  std::string_view access_level;  // "cloud-admin" or "vm-admin"
  std::string_view fault_name;
  TargetClass target_class;
};

const std::vector<CatalogEntry>& OperationCatalog();

}  // namespace fit
