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

#include "fpeval/csv.h"

#include "fpeval/errors.h"

namespace fpeval::csv {

std::vector<Row> Parse(std::string_view text) {
  std::vector<Row> rows;
  size_t i = 0;
  size_t line = 1;
  const size_t n = text.size();
  while (i < n) {
    // Skip blank lines.
    if (text[i] == '\n') {
      ++i;
      ++line;
      continue;
    }
    if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') {
      i += 2;
      ++line;
      continue;
    }
    Row row;
    row.line = line;
    while (true) {
      Field field;
      if (i < n && text[i] == '"') {
        field.quoted = true;
        ++i;
        while (true) {
          if (i >= n) {
            throw FormatError("csv: unterminated quoted field starting on line " +
                              std::to_string(row.line));
          }
          char c = text[i];
          if (c == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field.text.push_back('"');
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (c == '\n') ++line;
          field.text.push_back(c);
          ++i;
        }
        if (i < n && text[i] != ',' && text[i] != '\n' &&
            !(text[i] == '\r' && i + 1 < n && text[i + 1] == '\n')) {
          throw FormatError("csv: unexpected character after closing quote on line " +
                            std::to_string(line));
        }
      } else {
        while (i < n && text[i] != ',' && text[i] != '\n' &&
               !(text[i] == '\r' && i + 1 < n && text[i + 1] == '\n')) {
          if (text[i] == '"') {
            throw FormatError("csv: quote inside unquoted field on line " +
                              std::to_string(line));
          }
          field.text.push_back(text[i]);
          ++i;
        }
      }
      row.fields.push_back(std::move(field));
      if (i < n && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i < n) {
      i += text[i] == '\r' ? 2 : 1;
      ++line;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string Quote(std::string_view field) {
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string Escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  return Quote(field);
}

std::string JoinRow(const std::vector<std::string>& escaped_fields) {
  std::string out;
  for (size_t i = 0; i < escaped_fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out.append(escaped_fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace fpeval::csv
