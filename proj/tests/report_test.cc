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

#include <gtest/gtest.h>

#include <json.hpp>

#include "fit/report/report.h"

namespace fit {
namespace {

using namespace std::chrono_literals;
using Json = nlohmann::json;

StepReport Step(int index, StepStatus status) {
  StepReport s;
  s.index = index;
  s.endpoint_label = "web" + std::to_string(index);
  s.endpoint_address = "ubuntu@10.0.0." + std::to_string(index);
  s.fault_name = "stress-cpu";
  s.params = {{"workers", "1"}, {"duration", "1"}};
  s.status = status;
  return s;
}

RunReport Report(std::initializer_list<StepStatus> statuses) {
  RunReport r;
  r.scenario_name = "t";
  int i = 0;
  for (StepStatus s : statuses) r.steps.push_back(Step(i++, s));
  return r;
}

TEST(ExitCodeTest, Policy) {
  EXPECT_EQ(ExitCode(Report({StepStatus::kSuccess, StepStatus::kReverted})), 0);
  EXPECT_EQ(ExitCode(Report({StepStatus::kSuccess, StepStatus::kFailed})), 1);
  EXPECT_EQ(ExitCode(Report({StepStatus::kFailed, StepStatus::kRevertFailed})), 2);
  EXPECT_EQ(ExitCode(Report({StepStatus::kRevertFailed, StepStatus::kFailed})), 2);
  EXPECT_EQ(ExitCode(Report({StepStatus::kSkipped})), 1);
  EXPECT_EQ(ExitCode(Report({})), 0);
}

TEST(JsonTest, SchemaAndKeyOrder) {
  RunReport r = Report({StepStatus::kReverted});
  r.seed = 42;
  r.started_at = std::chrono::system_clock::time_point(1'700'000'000'123ms);
  r.wall_clock = 1500ms;
  CommandOutcome c;
  c.phase = Phase::kInject;
  c.command = "stress --cpu 1 --timeout 1s";
  c.duration = 1002ms;
  r.steps[0].transcript.push_back(c);
  Json j = Json::parse(RenderJson(r));
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_EQ(j["started_at"], "2023-11-14T22:13:20.123Z");
  EXPECT_EQ(j["wall_clock_seconds"], 1.5);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["summary"]["reverted"], 1);
  EXPECT_EQ(j["steps"][0]["params"]["workers"], "1");
  EXPECT_TRUE(j["steps"][0]["started_at"].is_null());
  EXPECT_EQ(j["steps"][0]["transcript"][0]["phase"], "inject");
  EXPECT_EQ(j["steps"][0]["transcript"][0]["status"], "ok");

  std::string text = RenderJson(r);
  EXPECT_LT(text.find("\"schema_version\""), text.find("\"scenario\""));
  EXPECT_LT(text.find("\"summary\""), text.find("\"steps\""));
}

TEST(JsonTest, InvalidUtf8IsReplaced) {
  RunReport r = Report({StepStatus::kFailed});
  CommandOutcome c;
  c.command = "cat /dev/urandom";
  c.stdout_text = "ok\xff\xfe";
  r.steps[0].transcript.push_back(c);
  Json j = Json::parse(RenderJson(r));
  EXPECT_EQ(j["steps"][0]["transcript"][0]["stdout"], "ok\xEF\xBF\xBD\xEF\xBF\xBD");
}

TEST(JsonTest, NullSeedAndOs) {
  Json j = Json::parse(RenderJson(Report({StepStatus::kSkipped})));
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_TRUE(j["steps"][0]["os"].is_null());
}

TEST(CapTest, TruncatesWithMarker) {
  EXPECT_EQ(CapOutput("abc", 5), "abc");
  EXPECT_EQ(CapOutput("abcdefgh", 5), "abcde\n[truncated 3 bytes]");
  std::string big(kTranscriptCap + 10, 'x');
  EXPECT_EQ(CapOutput(big).size(), kTranscriptCap + std::string("\n[truncated 10 bytes]").size());
}

TEST(TextTest, SummaryAndExcerpt) {
  RunReport r = Report({StepStatus::kSuccess, StepStatus::kFailed});
  r.wall_clock = 2500ms;
  r.steps[1].note = "inject failed: stress --cpu 1 --timeout 1s";
  CommandOutcome c;
  c.stderr_text = std::string(600, 'e') + "\n";
  r.steps[1].transcript.push_back(c);
  std::string text = RenderText(r);
  EXPECT_NE(text.find("OK step 0 web0 (ubuntu@10.0.0.0) stress-cpu 0.000s\n"), std::string::npos);
  EXPECT_NE(text.find("FAILED step 1 web1"), std::string::npos);
  EXPECT_NE(text.find("  stderr: " + std::string(500, 'e') + "\n"), std::string::npos);
  EXPECT_EQ(text.find(std::string(501, 'e')), std::string::npos);
  EXPECT_NE(text.find("2 steps: 1 ok, 0 reverted, 1 failed, 0 revert-failed, 0 skipped (2.500s)"),
            std::string::npos);
}

TEST(TimestampTest, Format) {
  EXPECT_EQ(FormatTimestamp(std::chrono::system_clock::time_point(0ms)), "1970-01-01T00:00:00.000Z");
  EXPECT_EQ(FormatTimestamp(std::chrono::system_clock::time_point(1'790'000'000'005ms)),
            "2026-09-21T14:13:20.005Z");
}

}  // namespace
}  // namespace fit
