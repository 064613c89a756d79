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

// AttributeValue <-> json conversions shared by the dataset, observation
// log and model formats.

#ifndef FPEVAL_JSON_VALUE_H_
#define FPEVAL_JSON_VALUE_H_

#include "fpeval/fingerprint.h"
#include "json.hpp"

namespace fpeval {

nlohmann::json ValueToJson(const AttributeValue& value);
AttributeValue ValueFromJson(const nlohmann::json& j);

// Parses one json object, rejecting duplicate keys at the top level.
// `where` names the source position for error messages.
nlohmann::json ParseJsonObjectStrict(std::string_view text,
                                     const std::string& where);

}  // namespace fpeval

#endif  // FPEVAL_JSON_VALUE_H_
