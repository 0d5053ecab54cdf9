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

#include "fit/osprobe/os_profile.h"

#include <algorithm>
#include <cctype>

namespace fit {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string Unquote(std::string_view v) {
  v = Trim(v);
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') &&
      v.back() == v.front()) {
    v = v.substr(1, v.size() - 2);
  }
  return std::string(v);
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::string_view OsFamilyName(OsFamily family) {
  switch (family) {
    case OsFamily::kUbuntu: return "ubuntu";
    case OsFamily::kCentos: return "centos";
    case OsFamily::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view PackageManagerName(PackageManager pm) {
  switch (pm) {
    case PackageManager::kApt: return "apt";
    case PackageManager::kYum: return "yum";
    case PackageManager::kNone: return "none";
  }
  return "none";
}

OsProfile OsProfile::For(OsFamily family, std::string version) {
  OsProfile p;
  p.family = family;
  p.version = std::move(version);
  switch (family) {
    case OsFamily::kUbuntu: p.package_manager = PackageManager::kApt; break;
    case OsFamily::kCentos: p.package_manager = PackageManager::kYum; break;
    case OsFamily::kUnknown: p.package_manager = PackageManager::kNone; break;
  }
  return p;
}

OsProfile ParseOsRelease(std::string_view text) {
  std::string id, version;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto eq = line.find('=');
    if (line.empty() || line.front() == '#' || eq == std::string_view::npos) continue;
    std::string_view key = Trim(line.substr(0, eq));
    if (key == "ID") id = Lower(Unquote(line.substr(eq + 1)));
    if (key == "VERSION_ID") version = Unquote(line.substr(eq + 1));
  }
  if (id == "ubuntu") return OsProfile::For(OsFamily::kUbuntu, version);
  if (id == "centos") return OsProfile::For(OsFamily::kCentos, version);
  return OsProfile::For(OsFamily::kUnknown);
}

OsProfile ParseRedhatRelease(std::string_view text) {
  std::string lower = Lower(std::string(text));
  if (lower.find("centos") == std::string::npos) {
    return OsProfile::For(OsFamily::kUnknown);
  }
  std::string version;
  constexpr std::string_view kRelease = "release ";
  auto pos = lower.find(kRelease);
  if (pos != std::string::npos) {
    pos += kRelease.size();
    auto end = pos;
    while (end < lower.size() &&
           (std::isdigit(static_cast<unsigned char>(lower[end])) || lower[end] == '.')) {
      ++end;
    }
    version = lower.substr(pos, end - pos);
  }
  return OsProfile::For(OsFamily::kCentos, version);
}

std::string SynthesizeOsRelease(const OsProfile& profile) {
  switch (profile.family) {
    case OsFamily::kUbuntu:
      return "NAME=\"Ubuntu\"\nID=ubuntu\nVERSION_ID=\"" + profile.version + "\"\n";
    case OsFamily::kCentos:
      return "NAME=\"CentOS Linux\"\nID=\"centos\"\nVERSION_ID=\"" +
             profile.version + "\"\n";
    case OsFamily::kUnknown:
      break;
  }
  return "ID=unknown\n";
}

}  // namespace fit
