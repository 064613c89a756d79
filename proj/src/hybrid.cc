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

#include "fpeval/hybrid.h"

#include <algorithm>

#include "fpeval/csv.h"
#include "fpeval/errors.h"
#include "fpeval/parallel.h"

namespace fpeval {

std::string_view ToString(MaskPolicy policy) {
  return policy == MaskPolicy::kInconclusiveAsMasked
             ? "inconclusive-as-masked"
             : "inconclusive-as-unmasked";
}

std::optional<MaskPolicy> ParseMaskPolicy(std::string_view name) {
  if (name == "masked" || name == ToString(MaskPolicy::kInconclusiveAsMasked)) {
    return MaskPolicy::kInconclusiveAsMasked;
  }
  if (name == "unmasked" ||
      name == ToString(MaskPolicy::kInconclusiveAsUnmasked)) {
    return MaskPolicy::kInconclusiveAsUnmasked;
  }
  return std::nullopt;
}

Fingerprint MaskFingerprint(const Fingerprint& fp, const MaskModel& model,
                            MaskPolicy policy) {
  Fingerprint::Map out;
  for (const auto& [name, value] : fp.attrs()) {
    auto v = model.verdicts.find(name);
    const bool mask =
        v != model.verdicts.end() &&
        (IsMasked(v->second.status) ||
         (policy == MaskPolicy::kInconclusiveAsMasked &&
          IsInconclusive(v->second.status)));
    if (!mask) {
      out.emplace_hint(out.end(), name, value);
      continue;
    }
    auto t = model.transforms.find(name);
    out.emplace_hint(out.end(), name,
                     t == model.transforms.end() ? AttributeValue::Masked()
                                                 : t->second.Apply(fp));
  }
  return Fingerprint(std::move(out));
}

Dataset ApplyMask(const Dataset& d, const MaskModel& model, MaskPolicy policy) {
  model.Validate();
  Dataset out;
  out.provenance = d.provenance + "+mask:" + model.pet;
  out.records = d.records;
  ParallelFor(out.records.size(), [&](size_t i) {
    out.records[i].fingerprint =
        MaskFingerprint(d.records[i].fingerprint, model, policy);
  });
  return out;
}

HybridReport EvaluatePet(const Dataset& d, const MaskModel& model,
                         MaskPolicy policy) {
  if (d.empty()) throw DomainError("cannot evaluate on an empty dataset");
  HybridReport r;
  r.pet = model.pet;
  const std::vector<Fingerprint> before = d.Fingerprints();
  const std::vector<Fingerprint> after = ApplyMask(d, model, policy).Fingerprints();
  r.before = Trackability(before);
  r.after = Trackability(after);
  for (Metric m : kAllMetrics) r.eff[m] = Effectiveness(m, r.before, r.after);
  for (const std::string& name : d.AttributeNames()) {
    auto v = model.verdicts.find(name);
    if (v == model.verdicts.end() || v->second.status == VerdictStatus::kUnmasked) {
      r.unmasked_attrs.push_back(name);
    } else if (IsMasked(v->second.status)) {
      r.masked_attrs.push_back(name);
    } else {
      r.inconclusive_attrs.push_back(name);
    }
  }
  return r;
}

std::vector<HybridRow> EvaluateAll(const Dataset& d,
                                   const std::vector<MaskModel>& models,
                                   MaskPolicy policy) {
  for (const MaskModel& m : models) {
    if (!m.browser) continue;
    for (size_t i = 0; i < d.records.size(); ++i) {
      if (d.records[i].browser_family != *m.browser) {
        throw ConfigurationError(
            "model '" + m.pet + "' is for " + std::string(ToString(*m.browser)) +
            " but record " + std::to_string(i) + " is " +
            std::string(ToString(d.records[i].browser_family)));
      }
    }
  }

  // Group by signature so identical models are evaluated once.
  std::map<std::string, std::vector<const MaskModel*>> groups;
  for (const MaskModel& m : models) groups[m.Signature()].push_back(&m);

  std::vector<HybridRow> rows(groups.size());
  std::vector<const std::vector<const MaskModel*>*> group_list;
  for (const auto& [sig, members] : groups) group_list.push_back(&members);
  ParallelFor(group_list.size(), [&](size_t i) {
    const auto& members = *group_list[i];
    HybridRow& row = rows[i];
    for (const MaskModel* m : members) row.pets.push_back(m->pet);
    std::sort(row.pets.begin(), row.pets.end());
    row.report = EvaluatePet(d, *members.front(), policy);
    std::string joined;
    for (const std::string& p : row.pets) {
      if (!joined.empty()) joined += ", ";
      joined += p;
    }
    row.report.pet = joined;
  });
  std::sort(rows.begin(), rows.end(), [](const HybridRow& a, const HybridRow& b) {
    if (a.report.after.entropy_bits != b.report.after.entropy_bits) {
      return a.report.after.entropy_bits > b.report.after.entropy_bits;
    }
    return a.pets < b.pets;
  });
  return rows;
}

nlohmann::json ToJson(const HybridReport& report) {
  nlohmann::json eff = nlohmann::json::object();
  for (const auto& [metric, value] : report.eff) eff[std::string(ToString(metric))] = value;
  return {{"pet", report.pet},
          {"before", ToJson(report.before)},
          {"after", ToJson(report.after)},
          {"eff", std::move(eff)},
          {"masked_attrs", report.masked_attrs},
          {"inconclusive_attrs", report.inconclusive_attrs},
          {"unmasked_attrs", report.unmasked_attrs}};
}

std::string HybridTableToCsv(const std::vector<HybridRow>& rows) {
  auto num = [](double v) { return nlohmann::json(v).dump(); };
  std::string out = csv::JoinRow({"pet", "entropy", "pct_le_1", "pct_le_10"});
  for (const HybridRow& row : rows) {
    out += csv::JoinRow({csv::Escape(row.report.pet),
                         num(row.report.after.entropy_bits),
                         num(row.report.after.pct_le_1),
                         num(row.report.after.pct_le_10)});
  }
  return out;
}

std::vector<HybridTableRow> HybridTableFromCsv(std::string_view contents) {
  std::vector<csv::Row> rows = csv::Parse(contents);
  if (rows.empty() || rows.front().fields.size() != 4 ||
      rows.front().fields[0].text != "pet") {
    throw FormatError("hybrid csv: missing or unexpected header");
  }
  std::vector<HybridTableRow> out;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    if (f.size() != 4) {
      throw FormatError("hybrid csv: line " + std::to_string(rows[i].line) +
                        " must have 4 fields");
    }
    HybridTableRow r;
    r.pet = f[0].text;
    double* slots[] = {&r.entropy_bits, &r.pct_le_1, &r.pct_le_10};
    for (size_t k = 0; k < 3; ++k) {
      try {
        *slots[k] = nlohmann::json::parse(f[k + 1].text).get<double>();
      } catch (const nlohmann::json::exception&) {
        throw FormatError("hybrid csv: bad number '" + f[k + 1].text +
                          "' on line " + std::to_string(rows[i].line));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fpeval
