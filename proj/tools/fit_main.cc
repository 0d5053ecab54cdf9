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

#include <unistd.h>

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <pthread.h>
#include <thread>

#include "fit/campaign/executor.h"
#include "fit/cli/cli.h"

int main(int argc, char** argv) {
  // Block the signals here so every thread inherits the mask; a dedicated
  // thread receives them with sigwait.
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);

  fit::AbortSignal abort;
  std::thread([&abort, set] {
    for (;;) {
      int sig = 0;
      if (sigwait(&set, &sig) != 0) continue;
      if (abort.requested()) {
        std::cerr << "fit: second interrupt, exiting without revert\n";
        std::_Exit(130);
      }
      std::cerr << "fit: interrupt, reverting (again to force exit)\n";
      abort.Request();
    }
  }).detach();

  fit::MainDeps deps;
  deps.env = fit::ProcessEnv();
  deps.abort = &abort;
  deps.stdout_is_tty = isatty(STDOUT_FILENO) != 0;
  std::vector<std::string> args(argv + 1, argv + argc);
  int code = fit::Main(args, std::cout, std::cerr, deps);
  std::cout.flush();
  return code;
}
