// Copyright 2026 The fpeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpeval/observation_log.h"

#include "fpeval/errors.h"
#include "fpeval/file_util.h"
#include "fpeval/json_value.h"

namespace fpeval {

using nlohmann::json;

std::string_view ToString(Boundary boundary) {
  switch (boundary) {
    case Boundary::kReload:
      return "reload";
    case Boundary::kDomain:
      return "domain";
    case Boundary::kSession:
      return "session";
  }
  return "";
}

std::optional<Boundary> ParseBoundary(std::string_view name) {
  for (Boundary b : kAllBoundaries) {
    if (ToString(b) == name) return b;
  }
  return std::nullopt;
}

std::string Subject::ToString() const {
  return is_baseline() ? "baseline" : "pet:" + pet;
}

Subject Subject::Parse(std::string_view text) {
  if (text == "baseline") return Baseline();
  if (text.substr(0, 4) == "pet:" && text.size() > 4) {
    return Pet(std::string(text.substr(4)));
  }
  throw FormatError("bad subject '" + std::string(text) +
                    "' (expected 'baseline' or 'pet:<name>')");
}

std::set<std::string> ObservationLog::AttributeNames() const {
  std::set<std::string> names;
  for (const Observation& o : observations) {
    for (const auto& [name, value] : o.fingerprint.attrs()) names.insert(name);
  }
  return names;
}

std::set<std::string> ObservationLog::Pets() const {
  std::set<std::string> pets;
  for (const Observation& o : observations) {
    if (!o.subject.is_baseline()) pets.insert(o.subject.pet);
  }
  return pets;
}

ObservationLog ParseObservationLog(std::string_view contents) {
  if (auto bad = FindInvalidUtf8(contents)) {
    throw FormatError("invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  ObservationLog log;
  size_t pos = 0;
  size_t line_no = 0;
  while (pos < contents.size()) {
    size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = "observation log line " + std::to_string(line_no);
    json j = ParseJsonObjectStrict(line, where);
    try {
      Observation o;
      o.platform_id = j.at("platform").get<std::string>();
      if (o.platform_id.empty()) throw FormatError(where + ": empty platform");
      o.subject = Subject::Parse(j.at("subject").get<std::string>());
      const std::string boundary = j.at("boundary").get<std::string>();
      auto b = ParseBoundary(boundary);
      if (!b) throw FormatError(where + ": unknown boundary '" + boundary + "'");
      o.boundary = *b;
      o.epoch = j.at("epoch").get<int>();
      if (o.epoch < 0) throw FormatError(where + ": negative epoch");
      Fingerprint::Map attrs;
      for (const auto& [name, value] : j.at("attrs").items()) {
        attrs.emplace(name, ValueFromJson(value));
      }
      o.fingerprint = Fingerprint(std::move(attrs));
      log.observations.push_back(std::move(o));
    } catch (const json::exception& e) {
      throw FormatError(where + ": " + e.what());
    }
  }
  return log;
}

std::string SerializeObservationLog(const ObservationLog& log) {
  std::string out;
  for (const Observation& o : log.observations) {
    json attrs = json::object();
    for (const auto& [name, value] : o.fingerprint.attrs()) {
      attrs[name] = ValueToJson(value);
    }
    json j = {{"platform", o.platform_id},
              {"subject", o.subject.ToString()},
              {"boundary", ToString(o.boundary)},
              {"epoch", o.epoch},
              {"attrs", std::move(attrs)}};
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

ObservationLog LoadObservationLog(const std::string& path) {
  return ParseObservationLog(ReadFile(path));
}

void SaveObservationLog(const ObservationLog& log, const std::string& path) {
  WriteFileAtomic(path, SerializeObservationLog(log));
}

}  // namespace fpeval
