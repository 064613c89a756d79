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

// Minimal RFC 4180 reader/writer that keeps track of whether a field was
// quoted. The dataset format relies on that bit: a quoted field is always
// text, an unquoted empty field is a missing value.

#ifndef FPEVAL_CSV_H_
#define FPEVAL_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace fpeval::csv {

struct Field {
  std::string text;
  bool quoted = false;
};

struct Row {
  std::vector<Field> fields;
  size_t line = 0;  // 1-based line where the row starts
};

// Throws FormatError on an unterminated quote or stray characters after a
// closing quote. Blank lines are skipped. Accepts LF and CRLF.
std::vector<Row> Parse(std::string_view text);

// Always quotes.
std::string Quote(std::string_view field);

// Quotes only when the field contains a separator, quote, or line break.
std::string Escape(std::string_view field);

std::string JoinRow(const std::vector<std::string>& escaped_fields);

}  // namespace fpeval::csv

#endif  // FPEVAL_CSV_H_
