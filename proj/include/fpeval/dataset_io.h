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

// Dataset files.
//
// csv: first row is the header. `cookie_id` and `js_enabled` are reserved
// metadata columns; every other column is an attribute. Unquoted empty cells
// are Missing, quoted cells are always text, unquoted canonical integers are
// Integer values, and the unquoted token #MASKED# is the mask sentinel.
//
// jsonl: one object per line. The key `_meta` holds {cookie_id, js_enabled};
// all other keys are attributes. Strings are text, integers are Integer,
// null or an absent key is Missing, {"$masked": true} is the sentinel.
//
// Both loaders fill every record with the full attribute universe of the
// file so absent cells and absent keys are both explicit Missing values.

#ifndef FPEVAL_DATASET_IO_H_
#define FPEVAL_DATASET_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "fpeval/fingerprint.h"

namespace fpeval {

enum class DatasetFormat { kCsv, kJsonl };

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name);
// Guesses from the file extension; jsonl unless it ends in ".csv".
DatasetFormat FormatFromPath(std::string_view path);

inline constexpr std::string_view kCookieColumn = "cookie_id";
inline constexpr std::string_view kJsEnabledColumn = "js_enabled";
inline constexpr std::string_view kMetaKey = "_meta";
inline constexpr std::string_view kCsvMaskedToken = "#MASKED#";

Dataset ParseDataset(std::string_view contents, DatasetFormat format,
                     std::string provenance = "");
std::string SerializeDataset(const Dataset& dataset, DatasetFormat format);

// Throws IoError when the file cannot be read and FormatError on malformed
// content (duplicate attribute columns, invalid UTF-8 with its byte offset,
// bad json).
Dataset LoadDataset(const std::string& path, DatasetFormat format);
void SaveDataset(const Dataset& dataset, const std::string& path,
                 DatasetFormat format);

}  // namespace fpeval

#endif  // FPEVAL_DATASET_IO_H_
