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

#include "fit/error.h"
#include "fit/transport/transport.h"

namespace fit {

ExecResult Session::Exec(std::string_view command,
                         std::chrono::milliseconds timeout) {
  if (!open_) {
    throw FitError(ErrorCode::kSessionClosed,
                   "exec on closed session to " + endpoint_.DisplayName());
  }
  if (command.empty()) {
    throw FitError(ErrorCode::kInvalidParameter, "empty command");
  }
  if (timeout.count() <= 0) {
    throw FitError(ErrorCode::kInvalidParameter, "timeout must be positive");
  }
  return DoExec(command, timeout);
}

void Session::Upload(std::string_view content, const std::string& remote_path) {
  if (!open_) {
    throw FitError(ErrorCode::kSessionClosed,
                   "upload on closed session to " + endpoint_.DisplayName());
  }
  if (remote_path.empty() || remote_path.front() != '/') {
    throw FitError(ErrorCode::kInvalidParameter,
                   "remote path must be absolute: '" + remote_path + "'");
  }
  DoUpload(content, remote_path);
}

void Session::Close() {
  if (!open_) return;
  open_ = false;
  DoClose();
}

}  // namespace fit
