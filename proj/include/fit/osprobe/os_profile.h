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

#include <string>
#include <string_view>

namespace fit {

enum class OsFamily { kUbuntu, kCentos, kUnknown };
enum class PackageManager { kApt, kYum, kNone };

std::string_view OsFamilyName(OsFamily family);
std::string_view PackageManagerName(PackageManager pm);

struct OsProfile {
  OsFamily family = OsFamily::kUnknown;
  std::string version;
  PackageManager package_manager = PackageManager::kNone;

  // Binds the package manager implied by the family.
  static OsProfile For(OsFamily family, std::string version = "");

  bool operator==(const OsProfile&) const = default;
};

// Parses /etc/os-release content. Only ID=ubuntu and ID=centos are
// recognized; anything else, including garbage, yields kUnknown.
OsProfile ParseOsRelease(std::string_view text);

// Parses /etc/redhat-release content ("CentOS Linux release 7.9.2009 (Core)").
OsProfile ParseRedhatRelease(std::string_view text);

// Inverse of ParseOsRelease for the two supported families.
std::string SynthesizeOsRelease(const OsProfile& profile);

}  // namespace fit
