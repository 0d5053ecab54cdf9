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

#include "fit/campaign/campaign.h"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "fit/campaign/select.h"
#include "fit/error.h"
#include "fit/faults/fault_params.h"

namespace fit {

namespace {

using SteadyClock = std::chrono::steady_clock;

// Finished step reports flowing from workers back to the coordinator.
class ResultChannel {
 public:
  void Push(StepReport report) {
    {
      std::lock_guard lock(mu_);
      queue_.push_back(std::move(report));
    }
    cv_.notify_one();
  }

  // Waits until `deadline` for at least one report, then takes all queued.
  std::vector<StepReport> PopUntil(SteadyClock::time_point deadline) {
    std::unique_lock lock(mu_);
    cv_.wait_until(lock, deadline, [&] { return !queue_.empty(); });
    std::vector<StepReport> out(std::make_move_iterator(queue_.begin()),
                                std::make_move_iterator(queue_.end()));
    queue_.clear();
    return out;
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<StepReport> queue_;
};

StepReport Unstarted(const PlannedStep& step, std::string note) {
  StepReport r;
  r.index = step.index;
  r.endpoint_label = step.endpoint.DisplayName();
  r.endpoint_address = step.endpoint.Address();
  r.fault_name = std::string(FaultName(step.fault));
  r.params = FaultToParams(step.fault);
  r.status = StepStatus::kSkipped;
  r.note = std::move(note);
  return r;
}

std::uint64_t FreshSeed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

std::vector<PlannedStep> Preflight(const Scenario& scenario,
                                   const Inventory& inventory,
                                   std::uint64_t seed,
                                   const Auth& default_auth) {
  if (scenario.steps.empty() || scenario.parallelism < 1) {
    throw FitError(ErrorCode::kPreflightFailed, "scenario has no steps or bad parallelism");
  }
  SplitMix64 rng(seed);
  std::vector<PlannedStep> planned;
  for (std::size_t i = 0; i < scenario.steps.size(); ++i) {
    const ScenarioStep& step = scenario.steps[i];
    PlannedStep p;
    p.index = static_cast<int>(i);
    p.fault = step.fault;
    p.start_offset = step.start_offset;
    p.hold = step.hold;
    try {
      p.endpoint = SelectTarget(step.selector, inventory, rng, default_auth);
      if (auto* kill = std::get_if<KillRandomVM>(&p.fault); kill && kill->pool.empty()) {
        for (const auto& [label, ep] : inventory) kill->pool.push_back(label);
      }
      Validate(p.fault, p.endpoint);
    } catch (const FitError& e) {
      throw FitError(ErrorCode::kPreflightFailed,
                     "step " + std::to_string(i) + " (line " +
                         std::to_string(step.line) + "): " + e.what());
    }
    planned.push_back(std::move(p));
  }
  return planned;
}

RunReport RunCampaign(const Scenario& scenario, const Inventory& inventory,
                      const TransportFactory& transports,
                      const CampaignOptions& options) {
  RunReport report;
  report.scenario_name = scenario.name;
  report.seed = scenario.seed ? *scenario.seed : FreshSeed();
  const std::vector<PlannedStep> planned =
      Preflight(scenario, inventory, *report.seed, options.default_auth);

  report.started_at = std::chrono::system_clock::now();
  const auto t0 = SteadyClock::now();
  constexpr auto kTick = std::chrono::milliseconds(100);

  std::vector<std::size_t> order(planned.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return planned[a].start_offset < planned[b].start_offset;
  });

  std::vector<std::optional<StepReport>> results(planned.size());
  ResultChannel done;
  int active = 0;
  auto collect = [&](SteadyClock::time_point deadline) {
    for (StepReport& r : done.PopUntil(deadline)) {
      const auto idx = static_cast<std::size_t>(r.index);
      results[idx] = std::move(r);
      --active;
    }
  };
  auto aborted = [&] { return options.abort && options.abort->requested(); };

  std::vector<std::jthread> workers;
  std::size_t next = 0;
  while (next < order.size() && !aborted()) {
    const PlannedStep& step = planned[order[next]];
    const auto due = t0 + (options.skip_waits ? std::chrono::milliseconds(0)
                                              : step.start_offset);
    const auto now = SteadyClock::now();
    if (active < scenario.parallelism && now >= due) {
      ++active;
      ++next;
      workers.emplace_back([&, &step = step] {
        StepReport r;
        try {
          std::shared_ptr<Transport> transport = transports(step.endpoint);
          InjectOptions o;
          o.escalation = options.escalation;
          o.connect_timeout = options.connect_timeout;
          o.abort = options.abort;
          o.index = step.index;
          o.hold = step.hold;
          if (o.hold && options.skip_waits) o.hold = std::chrono::milliseconds(0);
          // A shutdown without a hold is left to fire.
          o.always_revert = !(std::holds_alternative<Shutdown>(step.fault) && !step.hold);
          r = InjectSingle(step.endpoint, step.fault, *transport, o);
        } catch (const std::exception& e) {
          r = Unstarted(step, e.what());
          r.status = StepStatus::kFailed;
        }
        r.index = step.index;
        done.Push(std::move(r));
      });
      continue;
    }
    auto wake = now + kTick;
    if (active < scenario.parallelism) wake = std::min(wake, due);
    collect(wake);
  }
  while (active > 0) collect(SteadyClock::now() + kTick);
  workers.clear();

  for (std::size_t i = 0; i < planned.size(); ++i) {
    report.steps.push_back(results[i] ? std::move(*results[i])
                                      : Unstarted(planned[i], "not started: campaign aborted"));
  }
  report.wall_clock =
      std::chrono::duration_cast<std::chrono::milliseconds>(SteadyClock::now() - t0);
  return report;
}

}  // namespace fit
