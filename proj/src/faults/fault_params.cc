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

#include "fit/faults/fault_params.h"

#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <set>

#include "fit/error.h"

namespace fit {

namespace {

[[noreturn]] void Bad(std::string_view what, std::string_view text) {
  throw FitError(ErrorCode::kInvalidParameter,
                 "bad " + std::string(what) + " '" + std::string(text) + "'");
}

std::int64_t ParseInt(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    Bad(what, text);
  }
  return v;
}

int ParseCount(std::string_view text, std::string_view what) {
  std::int64_t v = ParseInt(text, what);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    Bad(what, text);
  }
  return static_cast<int>(v);
}

// Splits a trailing unit letter off a number.
std::pair<std::string_view, char> SplitUnit(std::string_view text) {
  if (!text.empty() && std::isalpha(static_cast<unsigned char>(text.back()))) {
    return {text.substr(0, text.size() - 1),
            static_cast<char>(std::tolower(static_cast<unsigned char>(text.back())))};
  }
  return {text, '\0'};
}

std::uint64_t Scaled(std::string_view text, std::string_view what,
                     const std::map<char, std::uint64_t>& units) {
  auto [digits, unit] = SplitUnit(text);
  std::uint64_t mult = 1;
  if (unit != '\0') {
    auto it = units.find(unit);
    if (it == units.end()) Bad(what, text);
    mult = it->second;
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    Bad(what, text);
  }
  if (v != 0 && mult > std::numeric_limits<std::uint64_t>::max() / v) Bad(what, text);
  return v * mult;
}

std::string RenderSize(std::uint64_t bytes) {
  if (bytes != 0 && bytes % kMiB == 0) return std::to_string(bytes / kMiB) + "m";
  return std::to_string(bytes);
}

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> out;
  while (true) {
    auto comma = text.find(',');
    out.emplace_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string JoinList(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += (i ? "," : "") + items[i];
  }
  return out;
}

class Params {
 public:
  Params(std::string_view fault, const ParamList& list,
         std::set<std::string_view> allowed)
      : fault_(fault) {
    for (const auto& [k, v] : list) {
      if (!allowed.count(k)) {
        throw FitError(ErrorCode::kInvalidParameter,
                       std::string(fault) + ": unknown parameter '" + k + "'");
      }
      if (!values_.emplace(k, v).second) {
        throw FitError(ErrorCode::kInvalidParameter,
                       std::string(fault) + ": parameter '" + k + "' given twice");
      }
    }
  }

  const std::string* Find(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
  }

  const std::string& Required(const std::string& key) const {
    const std::string* v = Find(key);
    if (!v) {
      throw FitError(ErrorCode::kInvalidParameter,
                     std::string(fault_) + ": missing required parameter '" + key + "'");
    }
    return *v;
  }

 private:
  std::string_view fault_;
  std::map<std::string, std::string> values_;
};

std::optional<std::uint64_t> OptionalSeed(const Params& p) {
  if (const auto* s = p.Find("seed")) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
    if (s->empty() || ec != std::errc() || ptr != s->data() + s->size()) Bad("seed", *s);
    return v;
  }
  return std::nullopt;
}

FaultSpec Build(std::string_view name, const ParamList& list) {
  if (name == "stress-mem") {
    Params p(name, list, {"size", "loops"});
    StressMem f;
    f.size_bytes = ParseSize(p.Required("size"));
    if (auto* v = p.Find("loops")) f.loops = ParseCount(*v, "loops");
    return f;
  }
  if (name == "stress-cpu") {
    Params p(name, list, {"workers", "duration"});
    StressCpu f;
    if (auto* v = p.Find("workers")) f.workers = ParseCount(*v, "workers");
    if (auto* v = p.Find("duration")) f.duration_seconds = ParseDurationSeconds(*v);
    return f;
  }
  if (name == "stress-disk") {
    Params p(name, list, {"workers", "bytes", "duration"});
    StressDiskIO f;
    if (auto* v = p.Find("workers")) f.workers = ParseCount(*v, "workers");
    if (auto* v = p.Find("bytes")) f.bytes_per_worker = ParseSize(*v);
    if (auto* v = p.Find("duration")) f.duration_seconds = ParseDurationSeconds(*v);
    return f;
  }
  if (name == "stress-net") {
    Params p(name, list, {"peer", "rate", "duration"});
    StressNet f;
    f.peer = p.Required("peer");
    if (auto* v = p.Find("rate")) f.rate_bps = ParseRate(*v);
    if (auto* v = p.Find("duration")) f.duration_seconds = ParseDurationSeconds(*v);
    return f;
  }
  if (name == "shutdown") {
    Params p(name, list, {"delay"});
    Shutdown f;
    if (auto* v = p.Find("delay")) f.delay_seconds = ParseDurationSeconds(*v);
    return f;
  }
  if (name == "stop-service") {
    Params p(name, list, {"service"});
    return StopService{p.Required("service")};
  }
  if (name == "block-external") {
    Params p(name, list, {"port"});
    BlockExternalAccess f;
    if (auto* v = p.Find("port")) f.control_port = ParseCount(*v, "port");
    return f;
  }
  if (name == "kill-random-vm") {
    Params p(name, list, {"pool", "seed"});
    return KillRandomVM{SplitList(p.Required("pool")), OptionalSeed(p)};
  }
  if (name == "kill-random-whitelist") {
    Params p(name, list, {"whitelist", "seed"});
    return KillRandomFromWhitelist{p.Required("whitelist"), OptionalSeed(p)};
  }
  if (name == "ycsb") {
    Params p(name, list, {"root", "workload", "records", "operations"});
    WorkloadYCSB f;
    f.install_root = p.Required("root");
    if (auto* v = p.Find("workload")) f.workload_name = *v;
    if (auto* v = p.Find("records")) f.record_count = ParseInt(*v, "records");
    if (auto* v = p.Find("operations")) f.operation_count = ParseInt(*v, "operations");
    return f;
  }
  if (name == "jmeter") {
    Params p(name, list, {"root", "plan"});
    return WorkloadJMeter{p.Required("root"), p.Required("plan")};
  }
  throw FitError(ErrorCode::kUnknownFault, "unknown fault '" + std::string(name) + "'");
}

}  // namespace

std::uint64_t ParseSize(std::string_view text) {
  return Scaled(text, "size",
                {{'b', 1}, {'k', 1ull << 10}, {'m', 1ull << 20},
                 {'g', 1ull << 30}, {'t', 1ull << 40}});
}

int ParseDurationSeconds(std::string_view text) {
  std::uint64_t v = Scaled(text, "duration", {{'s', 1}, {'m', 60}, {'h', 3600}});
  if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    Bad("duration", text);
  }
  return static_cast<int>(v);
}

std::uint64_t ParseRate(std::string_view text) {
  return Scaled(text, "rate",
                {{'k', 1'000}, {'m', 1'000'000}, {'g', 1'000'000'000}});
}

FaultSpec FaultFromParams(std::string_view fault_name, const ParamList& params) {
  FaultSpec spec = Build(fault_name, params);
  ValidateParameters(spec);
  return spec;
}

ParamList FaultToParams(const FaultSpec& spec) {
  ParamList out;
  auto add = [&](std::string k, std::string v) { out.emplace_back(std::move(k), std::move(v)); };
  auto seed = [&](const std::optional<std::uint64_t>& s) {
    if (s) add("seed", std::to_string(*s));
  };
  if (auto* f = std::get_if<StressMem>(&spec)) {
    add("size", RenderSize(f->size_bytes));
    add("loops", std::to_string(f->loops));
  } else if (auto* f = std::get_if<StressCpu>(&spec)) {
    add("workers", std::to_string(f->workers));
    add("duration", std::to_string(f->duration_seconds));
  } else if (auto* f = std::get_if<StressDiskIO>(&spec)) {
    add("workers", std::to_string(f->workers));
    add("bytes", RenderSize(f->bytes_per_worker));
    add("duration", std::to_string(f->duration_seconds));
  } else if (auto* f = std::get_if<StressNet>(&spec)) {
    add("peer", f->peer);
    add("rate", std::to_string(f->rate_bps));
    add("duration", std::to_string(f->duration_seconds));
  } else if (auto* f = std::get_if<Shutdown>(&spec)) {
    add("delay", std::to_string(f->delay_seconds));
  } else if (auto* f = std::get_if<StopService>(&spec)) {
    add("service", f->service_name);
  } else if (auto* f = std::get_if<BlockExternalAccess>(&spec)) {
    if (f->control_port) add("port", std::to_string(*f->control_port));
  } else if (auto* f = std::get_if<KillRandomVM>(&spec)) {
    add("pool", JoinList(f->pool));
    seed(f->seed);
  } else if (auto* f = std::get_if<KillRandomFromWhitelist>(&spec)) {
    add("whitelist", f->whitelist_path);
    seed(f->seed);
  } else if (auto* f = std::get_if<WorkloadYCSB>(&spec)) {
    add("root", f->install_root);
    add("workload", f->workload_name);
    add("records", std::to_string(f->record_count));
    add("operations", std::to_string(f->operation_count));
  } else if (auto* f = std::get_if<WorkloadJMeter>(&spec)) {
    add("root", f->install_root);
    add("plan", f->plan_path);
  }
  return out;
}

}  // namespace fit
