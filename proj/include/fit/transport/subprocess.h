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

#include <sys/types.h>

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fit/transport/transport.h"

namespace fit {

// Runs argv[0] (PATH lookup) in its own process group, feeding `stdin_data`
// and capturing both output streams. At the timeout the whole group gets
// SIGKILL and the result carries kTimeoutExitCode with timed_out set.
// A child killed by signal N reports 128 + N.
//
// `on_start`, when set, is called with the child's pid right after fork.
ExecResult RunProcess(const std::vector<std::string>& argv,
                      std::string_view stdin_data,
                      std::chrono::milliseconds timeout,
                      const std::function<void(pid_t)>& on_start = {});

// Single-quotes `word` for a POSIX shell unless it only holds safe characters.
std::string ShellQuote(std::string_view word);

}  // namespace fit
