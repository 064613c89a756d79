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

#include "fpeval/json_value.h"

#include <set>

#include "fpeval/errors.h"

namespace fpeval {

using nlohmann::json;

json ValueToJson(const AttributeValue& value) {
  if (value.is_missing()) return nullptr;
  if (value.is_masked()) return json{{"$masked", true}};
  if (value.is_integer()) return value.integer();
  return value.text();
}

AttributeValue ValueFromJson(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return AttributeValue::Missing();
    case json::value_t::string:
      return AttributeValue::Text(j.get<std::string>());
    case json::value_t::number_integer:
      return AttributeValue::Integer(j.get<int64_t>());
    case json::value_t::number_unsigned: {
      auto u = j.get<uint64_t>();
      if (u <= static_cast<uint64_t>(INT64_MAX)) {
        return AttributeValue::Integer(static_cast<int64_t>(u));
      }
      return AttributeValue::Text(j.dump());
    }
    case json::value_t::object:
      if (j.size() == 1 && j.contains("$masked") &&
          j["$masked"] == true) {
        return AttributeValue::Masked();
      }
      return AttributeValue::Text(j.dump());
    default:
      // Floats, booleans and arrays keep their json spelling as text.
      return AttributeValue::Text(j.dump());
  }
}

json ParseJsonObjectStrict(std::string_view text, const std::string& where) {
  std::set<std::string> keys;
  std::string duplicate;
  json::parser_callback_t cb = [&](int depth, json::parse_event_t event,
                                   json& parsed) {
    if (event == json::parse_event_t::key && depth == 1 && duplicate.empty()) {
      auto key = parsed.get<std::string>();
      if (!keys.insert(key).second) duplicate = key;
    }
    return true;
  };
  json j;
  try {
    j = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    throw FormatError(where + ": invalid json: " + e.what());
  }
  if (!duplicate.empty()) {
    throw FormatError(where + ": duplicate key '" + duplicate + "'");
  }
  if (!j.is_object()) throw FormatError(where + ": expected a json object");
  return j;
}

}  // namespace fpeval
