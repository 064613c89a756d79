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

#include "fpeval/mask_model.h"

#include "fpeval/errors.h"
#include "fpeval/file_util.h"
#include "fpeval/json_value.h"
#include "fpeval/resolution.h"

namespace fpeval {
namespace {

using nlohmann::json;

constexpr std::pair<VerdictStatus, std::string_view> kStatusNames[] = {
    {VerdictStatus::kMaskedVary, "masked-vary"},
    {VerdictStatus::kMaskedStandardize, "masked-standardize"},
    {VerdictStatus::kUnmasked, "unmasked"},
    {VerdictStatus::kInconclusiveBaselineVaries,
     "inconclusive-baseline-varies"},
    {VerdictStatus::kInconclusiveInsufficientDiversity,
     "inconclusive-insufficient-diversity"},
};

int64_t PositiveParam(const json& params, const char* key) {
  auto it = params.find(key);
  if (it == params.end() || !it->is_number_integer() ||
      it->get<int64_t>() <= 0) {
    throw ConfigurationError(std::string("screen-spoof: '") + key +
                             "' must be a positive integer");
  }
  return it->get<int64_t>();
}

ValueTransform::Fn MakeScreenSpoof(const json& params) {
  if (!params.is_object()) {
    throw ConfigurationError("screen-spoof: params must be an object");
  }
  SpoofStrategy s{PositiveParam(params, "cap_w"), PositiveParam(params, "cap_h"),
                  PositiveParam(params, "quant_w"),
                  PositiveParam(params, "quant_h")};
  s.Validate();
  const std::string output = params.value("output", "");
  if (output == "zero") {
    return [](const Fingerprint&) { return AttributeValue::Integer(0); };
  }
  if (output != "width" && output != "height") {
    throw ConfigurationError(
        "screen-spoof: output must be 'width', 'height' or 'zero'");
  }
  const bool width = output == "width";
  return [s, width](const Fingerprint& fp) {
    std::optional<int64_t> w = fp.Get(attr::kScreenWidth).AsInteger();
    std::optional<int64_t> h = fp.Get(attr::kScreenHeight).AsInteger();
    if (!w || !h || *w <= 0 || *h <= 0) {
      throw DataError("screen-spoof: record has no usable screen resolution");
    }
    Resolution out = Spoof(s, {*w, *h});
    return AttributeValue::Integer(width ? out.w : out.h);
  };
}

}  // namespace

std::string_view ToString(VerdictStatus status) {
  for (const auto& [s, name] : kStatusNames) {
    if (s == status) return name;
  }
  return "";
}

std::optional<VerdictStatus> ParseVerdictStatus(std::string_view name) {
  for (const auto& [s, n] : kStatusNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

void StatParams::Validate() const {
  if (!(f > 0.0 && f < 1.0)) {
    throw DomainError("impact fraction f must lie in (0, 1), got " +
                      std::to_string(f));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

ValueTransform ValueTransform::FullMask() { return ValueTransform(); }

ValueTransform ValueTransform::Map(std::string function, json params) {
  ValueTransform t;
  t.kind_ = Kind::kMap;
  if (function == "screen-spoof") {
    t.fn_ = MakeScreenSpoof(params);
  } else if (function == "constant") {
    if (!params.is_object() || !params.contains("value")) {
      throw ConfigurationError("constant: params must hold 'value'");
    }
    AttributeValue v = ValueFromJson(params["value"]);
    t.fn_ = [v](const Fingerprint&) { return v; };
  } else {
    throw ConfigurationError("unknown transform function '" + function + "'");
  }
  t.function_ = std::move(function);
  t.params_ = std::move(params);
  return t;
}

AttributeValue ValueTransform::Apply(const Fingerprint& original) const {
  if (kind_ == Kind::kFullMask) return AttributeValue::Masked();
  return fn_(original);
}

std::set<std::string> MaskModel::MaskedAttributes() const {
  std::set<std::string> out;
  for (const auto& [name, v] : verdicts) {
    if (IsMasked(v.status)) out.insert(name);
  }
  return out;
}

std::set<std::string> MaskModel::InconclusiveAttributes() const {
  std::set<std::string> out;
  for (const auto& [name, v] : verdicts) {
    if (IsInconclusive(v.status)) out.insert(name);
  }
  return out;
}

void MaskModel::Validate() const {
  for (const auto& [name, t] : transforms) {
    auto it = verdicts.find(name);
    if (it == verdicts.end() || !IsMasked(it->second.status)) {
      throw ConfigurationError("model '" + pet + "': transform on '" + name +
                               "', which is not masked");
    }
  }
}

std::string MaskModel::Signature() const {
  json j = json::object();
  json v = json::object();
  for (const auto& [name, verdict] : verdicts) {
    json e = {{"status", ToString(verdict.status)}};
    if (verdict.confidence) e["confidence"] = *verdict.confidence;
    v[name] = std::move(e);
  }
  j["verdicts"] = std::move(v);
  json t = json::object();
  for (const auto& [name, transform] : transforms) {
    t[name] = {{"kind", transform.kind() == ValueTransform::Kind::kFullMask
                            ? "full"
                            : "map"},
               {"function", transform.function()},
               {"params", transform.params()}};
  }
  j["transforms"] = std::move(t);
  return j.dump();
}

json ToJson(const MaskModel& model) {
  json j = json::object();
  j["pet"] = model.pet;
  if (model.browser) j["browser"] = ToString(*model.browser);
  j["params"] = {{"f", model.params.f}, {"alpha", model.params.alpha}};
  json verdicts = json::object();
  for (const auto& [name, v] : model.verdicts) {
    json e = {{"status", ToString(v.status)}};
    if (v.confidence) e["confidence"] = *v.confidence;
    if (!v.reason.empty()) e["reason"] = v.reason;
    if (!v.evidence.empty()) {
      json ev = json::array();
      for (const Citation& c : v.evidence) {
        ev.push_back({{"platform", c.platform_id},
                      {"subject", c.subject},
                      {"epoch", c.epoch},
                      {"value", ValueToJson(c.value)}});
      }
      e["evidence"] = std::move(ev);
    }
    verdicts[name] = std::move(e);
  }
  j["verdicts"] = std::move(verdicts);
  if (!model.transforms.empty()) {
    json t = json::object();
    for (const auto& [name, transform] : model.transforms) {
      if (transform.kind() == ValueTransform::Kind::kFullMask) {
        t[name] = {{"kind", "full"}};
      } else {
        t[name] = {{"kind", "map"},
                   {"function", transform.function()},
                   {"params", transform.params()}};
      }
    }
    j["transforms"] = std::move(t);
  }
  if (!model.notes.empty()) j["notes"] = model.notes;
  return j;
}

MaskModel MaskModelFromJson(const json& j) {
  try {
    MaskModel m;
    m.pet = j.at("pet").get<std::string>();
    if (auto b = j.find("browser"); b != j.end() && !b->is_null()) {
      m.browser = ParseBrowserFamily(b->get<std::string>());
      if (!m.browser) {
        throw FormatError("model: unknown browser '" + b->get<std::string>() +
                          "'");
      }
    }
    if (auto p = j.find("params"); p != j.end()) {
      m.params.f = p->value("f", m.params.f);
      m.params.alpha = p->value("alpha", m.params.alpha);
    }
    for (const auto& [name, e] : j.at("verdicts").items()) {
      Verdict v;
      const std::string status = e.at("status").get<std::string>();
      auto parsed = ParseVerdictStatus(status);
      if (!parsed) {
        throw FormatError("model: unknown status '" + status + "' for '" +
                          name + "'");
      }
      v.status = *parsed;
      if (auto c = e.find("confidence"); c != e.end() && !c->is_null()) {
        v.confidence = c->get<double>();
      }
      v.reason = e.value("reason", "");
      if (auto ev = e.find("evidence"); ev != e.end()) {
        for (const json& c : *ev) {
          v.evidence.push_back({c.at("platform").get<std::string>(),
                                c.at("subject").get<std::string>(),
                                c.at("epoch").get<std::string>(),
                                ValueFromJson(c.at("value"))});
        }
      }
      m.verdicts.emplace(name, std::move(v));
    }
    if (auto t = j.find("transforms"); t != j.end()) {
      for (const auto& [name, e] : t->items()) {
        const std::string kind = e.at("kind").get<std::string>();
        if (kind == "full") {
          m.transforms.emplace(name, ValueTransform::FullMask());
        } else if (kind == "map") {
          m.transforms.emplace(
              name, ValueTransform::Map(e.at("function").get<std::string>(),
                                        e.value("params", json::object())));
        } else {
          throw FormatError("model: unknown transform kind '" + kind + "'");
        }
      }
    }
    if (auto n = j.find("notes"); n != j.end()) {
      m.notes = n->get<std::vector<std::string>>();
    }
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("model: ") + e.what());
  }
}

MaskModel LoadMaskModel(const std::string& path) {
  const std::string text = ReadFile(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": invalid json: " + e.what());
  }
  return MaskModelFromJson(j);
}

void SaveMaskModel(const MaskModel& model, const std::string& path) {
  WriteFileAtomic(path, ToJson(model).dump(2) + "\n");
}

}  // namespace fpeval
