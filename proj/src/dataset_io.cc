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

#include "fpeval/dataset_io.h"

#include <set>
#include <vector>

#include "fpeval/csv.h"
#include "fpeval/errors.h"
#include "fpeval/file_util.h"
#include "fpeval/json_value.h"

namespace fpeval {
namespace {

using nlohmann::json;

std::optional<bool> ParseBool(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes" || s == "TRUE" || s == "True") {
    return true;
  }
  if (s == "false" || s == "0" || s == "no" || s == "FALSE" || s == "False") {
    return false;
  }
  return std::nullopt;
}

AttributeValue CellValue(const csv::Field& cell) {
  if (cell.quoted) return AttributeValue::Text(cell.text);
  if (cell.text.empty()) return AttributeValue::Missing();
  if (cell.text == kCsvMaskedToken) return AttributeValue::Masked();
  if (auto n = ParseCanonicalInteger(cell.text)) {
    return AttributeValue::Integer(*n);
  }
  return AttributeValue::Text(cell.text);
}

std::string CellText(const AttributeValue& v) {
  if (v.is_missing()) return "";
  if (v.is_masked()) return std::string(kCsvMaskedToken);
  if (v.is_integer()) return std::to_string(v.integer());
  return csv::Quote(v.text());
}

// Gives every record an explicit value for every attribute in the file.
void FillUniverse(Dataset* d) {
  std::vector<std::string> names = d->AttributeNames();
  for (Record& r : d->records) {
    if (r.fingerprint.size() == names.size()) continue;
    Fingerprint::Map attrs = r.fingerprint.attrs();
    for (const std::string& name : names) {
      attrs.try_emplace(name, AttributeValue::Missing());
    }
    r.fingerprint = Fingerprint(std::move(attrs));
  }
}

Dataset ParseCsv(std::string_view contents, std::string provenance) {
  std::vector<csv::Row> rows = csv::Parse(contents);
  Dataset d;
  d.provenance = std::move(provenance);
  if (rows.empty()) return d;

  const csv::Row& header = rows.front();
  std::set<std::string, std::less<>> seen;
  int cookie_col = -1;
  int js_col = -1;
  for (size_t c = 0; c < header.fields.size(); ++c) {
    const std::string& name = header.fields[c].text;
    if (name.empty()) {
      throw FormatError("csv: empty column name at position " +
                        std::to_string(c + 1));
    }
    if (!seen.insert(name).second) {
      throw FormatError("csv: duplicate attribute column '" + name + "'");
    }
    if (name == kCookieColumn) cookie_col = static_cast<int>(c);
    if (name == kJsEnabledColumn) js_col = static_cast<int>(c);
  }

  d.records.reserve(rows.size() - 1);
  for (size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (row.fields.size() > header.fields.size()) {
      throw FormatError("csv: line " + std::to_string(row.line) + " has " +
                        std::to_string(row.fields.size()) +
                        " cells, header has " +
                        std::to_string(header.fields.size()));
    }
    Fingerprint::Map attrs;
    std::optional<std::string> cookie;
    bool js_enabled = true;
    for (size_t c = 0; c < header.fields.size(); ++c) {
      const std::string& name = header.fields[c].text;
      if (static_cast<int>(c) == cookie_col) {
        if (c < row.fields.size() && !row.fields[c].text.empty()) {
          cookie = row.fields[c].text;
        }
        continue;
      }
      if (static_cast<int>(c) == js_col) {
        if (c < row.fields.size() && !row.fields[c].text.empty()) {
          auto b = ParseBool(row.fields[c].text);
          if (!b.has_value()) {
            throw FormatError("csv: line " + std::to_string(row.line) +
                              ": bad js_enabled value '" +
                              row.fields[c].text + "'");
          }
          js_enabled = *b;
        }
        continue;
      }
      attrs.emplace(name, c < row.fields.size() ? CellValue(row.fields[c])
                                                : AttributeValue::Missing());
    }
    d.records.push_back(Record::FromFingerprint(Fingerprint(std::move(attrs)),
                                                std::move(cookie), js_enabled));
  }
  return d;
}

Dataset ParseJsonl(std::string_view contents, std::string provenance) {
  Dataset d;
  d.provenance = std::move(provenance);
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const std::string where = "jsonl line " + std::to_string(line_no);
    json obj = ParseJsonObjectStrict(line, where);
    Fingerprint::Map attrs;
    std::optional<std::string> cookie;
    bool js_enabled = true;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (it.key() == kMetaKey) {
        const json& meta = it.value();
        if (!meta.is_object()) throw FormatError(where + ": _meta must be an object");
        if (auto c = meta.find(kCookieColumn); c != meta.end() && !c->is_null()) {
          if (!c->is_string()) {
            throw FormatError(where + ": cookie_id must be a string");
          }
          if (!c->get<std::string>().empty()) cookie = c->get<std::string>();
        }
        if (auto js = meta.find(kJsEnabledColumn);
            js != meta.end() && !js->is_null()) {
          if (!js->is_boolean()) {
            throw FormatError(where + ": js_enabled must be a boolean");
          }
          js_enabled = js->get<bool>();
        }
        continue;
      }
      attrs.emplace(it.key(), ValueFromJson(it.value()));
    }
    d.records.push_back(Record::FromFingerprint(Fingerprint(std::move(attrs)),
                                                std::move(cookie), js_enabled));
  }
  return d;
}

}  // namespace

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name) {
  if (name == "csv") return DatasetFormat::kCsv;
  if (name == "jsonl") return DatasetFormat::kJsonl;
  return std::nullopt;
}

DatasetFormat FormatFromPath(std::string_view path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".csv"
             ? DatasetFormat::kCsv
             : DatasetFormat::kJsonl;
}

Dataset ParseDataset(std::string_view contents, DatasetFormat format,
                     std::string provenance) {
  if (auto bad = FindInvalidUtf8(contents)) {
    throw FormatError("invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  Dataset d = format == DatasetFormat::kCsv
                  ? ParseCsv(contents, std::move(provenance))
                  : ParseJsonl(contents, std::move(provenance));
  FillUniverse(&d);
  return d;
}

std::string SerializeDataset(const Dataset& dataset, DatasetFormat format) {
  const std::vector<std::string> names = dataset.AttributeNames();
  std::string out;
  if (format == DatasetFormat::kCsv) {
    std::vector<std::string> header = {std::string(kCookieColumn),
                                       std::string(kJsEnabledColumn)};
    for (const std::string& name : names) header.push_back(csv::Escape(name));
    out += csv::JoinRow(header);
    for (const Record& r : dataset.records) {
      std::vector<std::string> cells;
      cells.reserve(names.size() + 2);
      cells.push_back(r.cookie_id ? csv::Quote(*r.cookie_id) : "");
      cells.push_back(r.js_enabled ? "true" : "false");
      for (const std::string& name : names) {
        cells.push_back(CellText(r.fingerprint.Get(name)));
      }
      out += csv::JoinRow(cells);
    }
    return out;
  }
  for (const Record& r : dataset.records) {
    json obj = json::object();
    json meta = json::object();
    meta[std::string(kCookieColumn)] =
        r.cookie_id ? json(*r.cookie_id) : json(nullptr);
    meta[std::string(kJsEnabledColumn)] = r.js_enabled;
    obj[std::string(kMetaKey)] = std::move(meta);
    for (const std::string& name : names) {
      obj[name] = ValueToJson(r.fingerprint.Get(name));
    }
    out += obj.dump();
    out.push_back('\n');
  }
  return out;
}

Dataset LoadDataset(const std::string& path, DatasetFormat format) {
  return ParseDataset(ReadFile(path), format, path);
}

void SaveDataset(const Dataset& dataset, const std::string& path,
                 DatasetFormat format) {
  WriteFileAtomic(path, SerializeDataset(dataset, format));
}

}  // namespace fpeval
