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

#include "fit/transport/transport.h"

namespace fit {

// Runs commands on this machine via /bin/sh, ignoring the endpoint address.
class LocalTransport : public Transport {
 public:
  std::unique_ptr<Session> Connect(const Endpoint& endpoint,
                                   std::chrono::milliseconds timeout) override;
};

}  // namespace fit
