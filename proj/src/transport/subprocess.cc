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

#include "fit/transport/subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>
#include <mutex>

#include "fit/error.h"

namespace fit {

namespace {

using Clock = std::chrono::steady_clock;

void IgnoreSigpipeOnce() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

struct Pipe {
  int fds[2] = {-1, -1};
  Pipe() {
    if (::pipe2(fds, O_CLOEXEC) != 0) {
      throw FitError(ErrorCode::kTransportBroken,
                     std::string("pipe2: ") + std::strerror(errno));
    }
  }
  ~Pipe() {
    CloseRead();
    CloseWrite();
  }
  void CloseRead() {
    if (fds[0] >= 0) ::close(fds[0]);
    fds[0] = -1;
  }
  void CloseWrite() {
    if (fds[1] >= 0) ::close(fds[1]);
    fds[1] = -1;
  }
};

int DecodeStatus(int status) {
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return -1;
}

}  // namespace

ExecResult RunProcess(const std::vector<std::string>& argv,
                      std::string_view stdin_data,
                      std::chrono::milliseconds timeout,
                      const std::function<void(pid_t)>& on_start) {
  if (argv.empty()) {
    throw FitError(ErrorCode::kInvalidParameter, "empty argv");
  }
  IgnoreSigpipeOnce();

  Pipe in, out, err;
  std::vector<char*> cargv;
  cargv.reserve(argv.size() + 1);
  for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
  cargv.push_back(nullptr);

  const auto start = Clock::now();
  pid_t pid = ::fork();
  if (pid < 0) {
    throw FitError(ErrorCode::kTransportBroken,
                   std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in.fds[0], STDIN_FILENO);
    ::dup2(out.fds[1], STDOUT_FILENO);
    ::dup2(err.fds[1], STDERR_FILENO);
    ::signal(SIGPIPE, SIG_DFL);
    ::execvp(cargv[0], cargv.data());
    ::_exit(127);
  }
  ::setpgid(pid, pid);  // races the child's own call; either one wins
  if (on_start) on_start(pid);

  in.CloseRead();
  out.CloseWrite();
  err.CloseWrite();
  if (stdin_data.empty()) in.CloseWrite();
  ::fcntl(in.fds[1], F_SETFL, O_NONBLOCK);

  ExecResult result;
  std::size_t written = 0;
  bool reaped = false;
  int status = 0;
  bool killed = false;
  Clock::time_point kill_time;
  const auto deadline = start + timeout;
  std::array<char, 8192> buf;

  while (true) {
    if (!reaped) {
      pid_t r = ::waitpid(pid, &status, WNOHANG);
      if (r == pid) reaped = true;
    }
    const bool streams_open = out.fds[0] >= 0 || err.fds[0] >= 0;
    if (reaped && !streams_open) break;

    auto now = Clock::now();
    if (!killed && now >= deadline) {
      ::kill(-pid, SIGKILL);
      ::kill(pid, SIGKILL);
      killed = true;
      kill_time = now;
      result.timed_out = true;
    }
    // Descendants that escaped the process group may hold the pipes open.
    if (killed && now - kill_time > kExecGrace / 2) break;

    std::array<pollfd, 3> fds{};
    nfds_t n = 0;
    int out_idx = -1, err_idx = -1, in_idx = -1;
    if (out.fds[0] >= 0) { out_idx = n; fds[n++] = {out.fds[0], POLLIN, 0}; }
    if (err.fds[0] >= 0) { err_idx = n; fds[n++] = {err.fds[0], POLLIN, 0}; }
    if (in.fds[1] >= 0) { in_idx = n; fds[n++] = {in.fds[1], POLLOUT, 0}; }
    int ready = ::poll(fds.data(), n, 50);
    if (ready < 0 && errno != EINTR) break;
    if (ready <= 0) {
      // Child gone but a background grandchild keeps a pipe open.
      if (reaped) break;
      continue;
    }
    auto drain = [&](int idx, Pipe& p, std::string& sink) {
      if (idx < 0 || !(fds[idx].revents & (POLLIN | POLLHUP | POLLERR))) return;
      ssize_t got = ::read(p.fds[0], buf.data(), buf.size());
      if (got > 0) {
        sink.append(buf.data(), static_cast<std::size_t>(got));
      } else if (got == 0 || (errno != EINTR && errno != EAGAIN)) {
        p.CloseRead();
      }
    };
    drain(out_idx, out, result.stdout_text);
    drain(err_idx, err, result.stderr_text);
    if (in_idx >= 0 && (fds[in_idx].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t put = ::write(in.fds[1], stdin_data.data() + written,
                            stdin_data.size() - written);
      if (put > 0) written += static_cast<std::size_t>(put);
      if (put < 0 && errno != EAGAIN && errno != EINTR) in.CloseWrite();
      if (written == stdin_data.size()) in.CloseWrite();
    }
  }

  if (!reaped) {
    if (!killed) {
      ::kill(-pid, SIGKILL);
      ::kill(pid, SIGKILL);
      if (Clock::now() >= deadline) result.timed_out = true;
    }
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
  }
  result.exit_code = result.timed_out ? kTimeoutExitCode : DecodeStatus(status);
  result.duration =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return result;
}

std::string ShellQuote(std::string_view word) {
  bool safe = !word.empty();
  for (char c : word) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
              c == '/' || c == ':' || c == '@' || c == '=' || c == ',' ||
              c == '+';
    if (!ok) {
      safe = false;
      break;
    }
  }
  if (safe) return std::string(word);
  std::string out = "'";
  for (char c : word) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

}  // namespace fit
