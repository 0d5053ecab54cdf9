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
#include <optional>
#include <string>
#include <vector>

#include "fit/campaign/executor.h"
#include "fit/campaign/inventory.h"
#include "fit/campaign/scenario.h"
#include "fit/report/run_report.h"
#include "fit/transport/transport.h"

namespace fit {

struct CampaignOptions {
  std::string escalation = "sudo -n";
  std::chrono::milliseconds connect_timeout{30'000};
  const AbortSignal* abort = nullptr;
  // Dry runs: launch immediately and skip holds.
  bool skip_waits = false;
  // Auth for whitelist entries given as user@host.
  Auth default_auth = AgentAuth{};
};

struct PlannedStep {
  int index = 0;
  Endpoint endpoint;
  FaultSpec fault;
  std::chrono::milliseconds start_offset{0};
  std::optional<std::chrono::milliseconds> hold;
};

// Resolves every selector (drawing in step order) and validates every fault
// against its endpoint. Throws kPreflightFailed; issues no commands.
std::vector<PlannedStep> Preflight(const Scenario& scenario,
                                   const Inventory& inventory,
                                   std::uint64_t seed,
                                   const Auth& default_auth = AgentAuth{});

// Runs all steps with at most scenario.parallelism in flight, each no
// earlier than its start offset. Revertible faults are always reverted
// before the run returns, except shutdowns without a hold and anything
// after a forced abort. Throws kPreflightFailed before any injection.
RunReport RunCampaign(const Scenario& scenario, const Inventory& inventory,
                      const TransportFactory& transports,
                      const CampaignOptions& options = {});

}  // namespace fit
