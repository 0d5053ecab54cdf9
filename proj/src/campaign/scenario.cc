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

#include "fit/campaign/scenario.h"

#include <charconv>
#include <cmath>

#include "block_text.h"
#include "fit/error.h"
#include "fit/faults/fault_params.h"

namespace fit {

namespace {

[[noreturn]] void Fail(ErrorCode code, int line, const std::string& why) {
  throw FitError(code, "line " + std::to_string(line) + ": " + why);
}

std::vector<std::string> SplitCommaList(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = TrimSpace(text.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

ParamList ParseParams(const KeyValue& kv) {
  ParamList out;
  std::string_view text = kv.value;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = TrimSpace(text.substr(0, comma));
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        Fail(ErrorCode::kSyntaxError, kv.line,
             "params entry '" + std::string(item) + "' is not key=value");
      }
      out.emplace_back(std::string(TrimSpace(item.substr(0, eq))),
                       std::string(TrimSpace(item.substr(eq + 1))));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

ScenarioStep ParseStep(const Block& block) {
  const KeyValue* selector = nullptr;
  const KeyValue* fault = nullptr;
  const KeyValue* params = nullptr;
  const KeyValue* offset = nullptr;
  const KeyValue* hold = nullptr;
  for (const KeyValue& kv : block.entries) {
    if (kv.key == "selector") selector = &kv;
    else if (kv.key == "fault") fault = &kv;
    else if (kv.key == "params") params = &kv;
    else if (kv.key == "start_offset") offset = &kv;
    else if (kv.key == "hold") hold = &kv;
    else Fail(ErrorCode::kInvalidField, kv.line, "unknown step field '" + kv.key + "'");
  }
  if (!selector) Fail(ErrorCode::kInvalidField, block.line, "step has no selector");
  if (!fault) Fail(ErrorCode::kInvalidField, block.line, "step has no fault");

  ScenarioStep step;
  step.line = block.line;
  try {
    step.selector = ParseSelector(selector->value);
  } catch (const FitError& e) {
    Fail(ErrorCode::kInvalidField, selector->line, e.what());
  }

  const std::string& name = fault->value;
  ParamList plist = params ? ParseParams(*params) : ParamList{};
  if (name == "kill-random-vm" || name == "kill-random-whitelist") {
    // The victim pool comes from the selector.
    if (!plist.empty()) {
      Fail(ErrorCode::kInvalidField, params->line,
           name + " takes its pool from the selector, not params");
    }
    if (name == "kill-random-vm") {
      if (step.selector.kind != Selector::Kind::kRandom) {
        Fail(ErrorCode::kInvalidField, selector->line,
             "kill-random-vm needs a random selector");
      }
      step.fault = KillRandomVM{step.selector.pool, std::nullopt};
    } else {
      if (step.selector.kind != Selector::Kind::kWhitelist) {
        Fail(ErrorCode::kInvalidField, selector->line,
             "kill-random-whitelist needs a whitelist selector");
      }
      step.fault = KillRandomFromWhitelist{step.selector.whitelist_path, std::nullopt};
    }
  } else {
    try {
      step.fault = FaultFromParams(name, plist);
    } catch (const FitError& e) {
      Fail(e.code() == ErrorCode::kUnknownFault ? ErrorCode::kUnknownFault
                                                : ErrorCode::kInvalidField,
           fault->line, e.what());
    }
  }

  if (offset) {
    try {
      step.start_offset = ParseTimeSpan(offset->value);
    } catch (const FitError& e) {
      Fail(ErrorCode::kInvalidField, offset->line, e.what());
    }
  }
  if (hold) {
    try {
      step.hold = ParseTimeSpan(hold->value);
    } catch (const FitError& e) {
      Fail(ErrorCode::kInvalidField, hold->line, e.what());
    }
    if (step.hold->count() <= 0) {
      Fail(ErrorCode::kInvalidField, hold->line, "hold must be positive");
    }
    if (!HasRevertPhase(step.fault)) {
      Fail(ErrorCode::kInvalidField, hold->line,
           "hold given but " + name + " has no revert phase");
    }
  }
  return step;
}

}  // namespace

Selector ParseSelector(std::string_view text) {
  text = TrimSpace(text);
  Selector s;
  constexpr std::string_view kRandom = "random";
  constexpr std::string_view kWhitelist = "whitelist:";
  if (text == kRandom) {
    s.kind = Selector::Kind::kRandom;
  } else if (text.substr(0, kRandom.size() + 1) == "random:") {
    s.kind = Selector::Kind::kRandom;
    s.pool = SplitCommaList(text.substr(kRandom.size() + 1));
    if (s.pool.empty()) {
      throw FitError(ErrorCode::kInvalidField, "random: selector lists no labels");
    }
  } else if (text.substr(0, kWhitelist.size()) == kWhitelist) {
    s.kind = Selector::Kind::kWhitelist;
    s.whitelist_path = std::string(TrimSpace(text.substr(kWhitelist.size())));
    if (s.whitelist_path.empty()) {
      throw FitError(ErrorCode::kInvalidField, "whitelist: selector without a path");
    }
  } else {
    if (text.empty() || text.find_first_of(" \t,:") != std::string_view::npos) {
      throw FitError(ErrorCode::kInvalidField,
                     "bad selector '" + std::string(text) + "'");
    }
    s.kind = Selector::Kind::kNamed;
    s.label = std::string(text);
  }
  return s;
}

std::chrono::milliseconds ParseTimeSpan(std::string_view text) {
  text = TrimSpace(text);
  double scale = 1000.0;
  auto strip = [&](std::string_view suffix, double ms) {
    if (text.size() > suffix.size() &&
        text.substr(text.size() - suffix.size()) == suffix) {
      text.remove_suffix(suffix.size());
      scale = ms;
      return true;
    }
    return false;
  };
  strip("ms", 1.0) || strip("s", 1000.0) || strip("m", 60'000.0) || strip("h", 3'600'000.0);
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(v) || v < 0) {
    throw FitError(ErrorCode::kInvalidField, "bad time span '" + std::string(text) + "'");
  }
  return std::chrono::milliseconds(static_cast<long long>(std::llround(v * scale)));
}

Scenario ParseScenario(std::string_view text) {
  BlockDocument doc = ParseBlocks(text, {"step"});
  Scenario scenario;
  for (const KeyValue& kv : doc.header) {
    if (kv.key == "name") {
      scenario.name = kv.value;
    } else if (kv.key == "parallelism") {
      int p = 0;
      auto [ptr, ec] = std::from_chars(kv.value.data(), kv.value.data() + kv.value.size(), p);
      if (ec != std::errc() || ptr != kv.value.data() + kv.value.size() || p < 1) {
        Fail(ErrorCode::kInvalidField, kv.line, "parallelism must be an integer >= 1");
      }
      scenario.parallelism = p;
    } else if (kv.key == "seed") {
      std::uint64_t seed = 0;
      auto [ptr, ec] = std::from_chars(kv.value.data(), kv.value.data() + kv.value.size(), seed);
      if (kv.value.empty() || ec != std::errc() || ptr != kv.value.data() + kv.value.size()) {
        Fail(ErrorCode::kInvalidField, kv.line, "seed must be an unsigned integer");
      }
      scenario.seed = seed;
    } else {
      Fail(ErrorCode::kInvalidField, kv.line, "unknown scenario field '" + kv.key + "'");
    }
  }
  for (const Block& block : doc.blocks) scenario.steps.push_back(ParseStep(block));
  if (scenario.steps.empty()) {
    throw FitError(ErrorCode::kInvalidField, "scenario has no [step] blocks");
  }
  return scenario;
}

}  // namespace fit
