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

#include "fpeval/resolution.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include "fpeval/csv.h"
#include "fpeval/errors.h"
#include "fpeval/parallel.h"

namespace fpeval {
namespace {

constexpr std::string_view kScreenAttrs[] = {
    attr::kScreenWidth,     attr::kScreenHeight,    attr::kScreenAvailWidth,
    attr::kScreenAvailHeight, attr::kScreenAvailLeft, attr::kScreenAvailTop};

std::string_view SpoofOutputFor(std::string_view name) {
  if (name == attr::kScreenWidth || name == attr::kScreenAvailWidth) {
    return "width";
  }
  if (name == attr::kScreenHeight || name == attr::kScreenAvailHeight) {
    return "height";
  }
  return "zero";
}

bool IsScreenAttr(std::string_view name) {
  return std::find(std::begin(kScreenAttrs), std::end(kScreenAttrs), name) !=
         std::end(kScreenAttrs);
}

std::vector<Resolution> ScreensOrThrow(const Dataset& d) {
  std::vector<Resolution> screens;
  screens.reserve(d.size());
  std::vector<size_t> bad;
  for (size_t i = 0; i < d.records.size(); ++i) {
    const Record& r = d.records[i];
    if (r.screen_w && r.screen_h) {
      screens.push_back({*r.screen_w, *r.screen_h});
    } else {
      bad.push_back(i);
    }
  }
  if (!bad.empty()) {
    std::string list;
    for (size_t k = 0; k < bad.size() && k < 20; ++k) {
      if (k > 0) list += ", ";
      list += std::to_string(bad[k]);
    }
    if (bad.size() > 20) list += ", ...";
    throw DataError(std::to_string(bad.size()) +
                    " record(s) lack a usable screen resolution: " + list);
  }
  return screens;
}

struct Losses {
  double abs_loss = 0.0;
  double pct_loss = 0.0;
};

Losses MeanLosses(const std::vector<Resolution>& screens,
                  const SpoofStrategy& s) {
  double abs_sum = 0.0;
  double pct_sum = 0.0;
  for (const Resolution& r : screens) {
    const Resolution out = Spoof(s, r);
    const double full = static_cast<double>(r.w) * static_cast<double>(r.h);
    const double unused =
        full - static_cast<double>(out.w) * static_cast<double>(out.h);
    abs_sum += unused;
    pct_sum += unused / full;
  }
  const double n = static_cast<double>(screens.size());
  return {abs_sum / n, pct_sum / n};
}

int64_t ReachableCount(int64_t cap, int64_t quant) {
  if (cap % quant == 0) return cap / quant;
  std::set<int64_t> outputs;
  for (int64_t x = 1; x <= cap + quant; ++x) {
    outputs.insert(SpoofDimension(cap, quant, x));
  }
  return static_cast<int64_t>(outputs.size());
}

}  // namespace

std::string Resolution::ToString() const {
  return std::to_string(w) + "x" + std::to_string(h);
}

Resolution Resolution::Parse(std::string_view text) {
  const size_t x = text.find('x');
  auto part = [&](std::string_view p) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (p.empty() || ec != std::errc() || ptr != p.data() + p.size() || v <= 0) {
      throw FormatError("bad resolution '" + std::string(text) +
                        "' (expected WxH with positive integers)");
    }
    return v;
  };
  if (x == std::string_view::npos) {
    throw FormatError("bad resolution '" + std::string(text) +
                      "' (expected WxH)");
  }
  return {part(text.substr(0, x)), part(text.substr(x + 1))};
}

void SpoofStrategy::Validate() const {
  if (cap_w <= 0 || cap_h <= 0 || quant_w <= 0 || quant_h <= 0) {
    throw ConfigurationError("strategy " + ToString() +
                             ": dimensions must be positive");
  }
  if (quant_w > cap_w || quant_h > cap_h) {
    throw ConfigurationError("strategy " + ToString() +
                             ": quantum exceeds cap");
  }
}

std::string SpoofStrategy::ToString() const {
  return Resolution{cap_w, cap_h}.ToString() + ":" +
         Resolution{quant_w, quant_h}.ToString();
}

int64_t SpoofDimension(int64_t cap, int64_t quant, int64_t x) {
  const int64_t floored = (x / quant) * quant;
  return std::min(cap, floored == 0 ? quant : floored);
}

Resolution Spoof(const SpoofStrategy& s, Resolution screen) {
  return {SpoofDimension(s.cap_w, s.quant_w, screen.w),
          SpoofDimension(s.cap_h, s.quant_h, screen.h)};
}

int64_t StrategySets(const SpoofStrategy& s) {
  s.Validate();
  return ReachableCount(s.cap_w, s.quant_w) * ReachableCount(s.cap_h, s.quant_h);
}

MaskModel WithScreenStrategy(const MaskModel& model, const SpoofStrategy& s) {
  s.Validate();
  MaskModel out = model;
  for (std::string_view name : kScreenAttrs) {
    Verdict v;
    v.status = VerdictStatus::kMaskedStandardize;
    v.reason = "handcrafted screen spoofing " + s.ToString();
    out.verdicts.insert_or_assign(std::string(name), std::move(v));
    nlohmann::json params = {{"cap_w", s.cap_w},
                             {"cap_h", s.cap_h},
                             {"quant_w", s.quant_w},
                             {"quant_h", s.quant_h},
                             {"output", SpoofOutputFor(name)}};
    out.transforms.insert_or_assign(
        std::string(name), ValueTransform::Map("screen-spoof", std::move(params)));
  }
  return out;
}

MaskModel TorHandcraftedModel(const std::vector<std::string>& attributes,
                              const SpoofStrategy& s) {
  MaskModel m;
  m.pet = "tor-handcrafted";
  m.browser = BrowserFamily::kFirefox;
  for (const std::string& name : attributes) {
    Verdict v;
    v.status = VerdictStatus::kMaskedStandardize;
    m.verdicts.emplace(name, std::move(v));
  }
  return WithScreenStrategy(m, s);
}

StrategyScore ScoreStrategy(const Dataset& d, const MaskModel& baseline_model,
                            const SpoofStrategy& s) {
  if (d.empty()) throw DomainError("cannot score a strategy on an empty dataset");
  const std::vector<Resolution> screens = ScreensOrThrow(d);
  const Dataset masked = ApplyMask(d, WithScreenStrategy(baseline_model, s),
                                   MaskPolicy::kInconclusiveAsMasked);
  const TrackabilityReport t = Trackability(masked.Fingerprints());
  const Losses loss = MeanLosses(screens, s);
  return {t.entropy_bits, t.pct_le_1, t.pct_le_10, loss.abs_loss, loss.pct_loss};
}

QuantaRange QuantaRange::Parse(std::string_view text) {
  const size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    Resolution r = Resolution::Parse(text);
    return {r, r};
  }
  QuantaRange q{Resolution::Parse(text.substr(0, dots)),
                Resolution::Parse(text.substr(dots + 2))};
  if (q.min.w > q.max.w || q.min.h > q.max.h) {
    throw FormatError("empty quanta range '" + std::string(text) + "'");
  }
  return q;
}

std::vector<SpoofStrategy> EnumerateStrategies(
    const std::vector<Resolution>& caps, const QuantaRange& quanta,
    const std::vector<Resolution>& exclude) {
  std::vector<SpoofStrategy> out;
  for (const Resolution& cap : caps) {
    for (int64_t qw = quanta.min.w; qw <= quanta.max.w; ++qw) {
      if (qw > cap.w) break;
      for (int64_t qh = quanta.min.h; qh <= quanta.max.h; ++qh) {
        if (qh > cap.h) break;
        const Resolution q{qw, qh};
        if (std::find(exclude.begin(), exclude.end(), q) != exclude.end()) {
          continue;
        }
        out.push_back(SpoofStrategy::FromParts(cap, q));
      }
    }
  }
  return out;
}

std::vector<SweepResult> Sweep(const Dataset& d, const MaskModel& baseline_model,
                               const std::vector<Resolution>& caps,
                               const QuantaRange& quanta,
                               const std::vector<Resolution>& exclude) {
  if (d.empty()) throw DomainError("cannot sweep on an empty dataset");
  const std::vector<Resolution> screens = ScreensOrThrow(d);
  const std::vector<SpoofStrategy> candidates =
      EnumerateStrategies(caps, quanta, exclude);
  for (const SpoofStrategy& s : candidates) s.Validate();

  // Everything except the screen attributes is fixed across candidates; give
  // each record the id of its masked non-screen part. Screen attributes that
  // the record carries are blanked so their presence still separates ids.
  WithScreenStrategy(baseline_model, SpoofStrategy::TorDefault()).Validate();
  std::vector<std::string> rest_keys;
  rest_keys.reserve(d.size());
  for (const Record& r : d.records) {
    Fingerprint::Map attrs;
    for (const auto& [name, value] : r.fingerprint.attrs()) {
      if (IsScreenAttr(name)) attrs.emplace(name, AttributeValue::Masked());
    }
    const Fingerprint masked = MaskFingerprint(
        r.fingerprint, baseline_model, MaskPolicy::kInconclusiveAsMasked);
    for (const auto& [name, value] : masked.attrs()) {
      if (!IsScreenAttr(name)) attrs.emplace(name, value);
    }
    rest_keys.push_back(Fingerprint(std::move(attrs)).Canonical());
  }
  std::vector<std::string> uniq = rest_keys;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int64_t> rest_id(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    rest_id[i] = std::lower_bound(uniq.begin(), uniq.end(), rest_keys[i]) -
                 uniq.begin();
  }

  std::vector<SweepResult> results(candidates.size());
  ParallelFor(candidates.size(), [&](size_t c) {
    const SpoofStrategy& s = candidates[c];
    std::vector<std::array<int64_t, 3>> keys(screens.size());
    for (size_t i = 0; i < screens.size(); ++i) {
      const Resolution out = Spoof(s, screens[i]);
      keys[i] = {rest_id[i], out.w, out.h};
    }
    std::sort(keys.begin(), keys.end());
    std::vector<int64_t> counts;
    for (size_t i = 0; i < keys.size();) {
      size_t j = i + 1;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      counts.push_back(static_cast<int64_t>(j - i));
      i = j;
    }
    const TrackabilityReport t = TrackabilityFromCounts(counts);
    const Losses loss = MeanLosses(screens, s);
    results[c] = {s, {t.entropy_bits, t.pct_le_1, t.pct_le_10, loss.abs_loss,
                      loss.pct_loss}};
  });
  return results;
}

std::vector<SweepResult> ParetoImprovements(
    const std::vector<SweepResult>& results, const StrategyScore& reference) {
  std::vector<SweepResult> out;
  for (const SweepResult& r : results) {
    const StrategyScore& s = r.score;
    if (s.entropy_bits < reference.entropy_bits &&
        s.pct_le_1 < reference.pct_le_1 && s.pct_le_10 < reference.pct_le_10 &&
        s.abs_loss < reference.abs_loss && s.pct_loss < reference.pct_loss) {
      out.push_back(r);
    }
  }
  return out;
}

std::string SweepToCsv(const std::vector<SweepResult>& results) {
  auto num = [](double v) { return nlohmann::json(v).dump(); };
  std::string out = csv::JoinRow({"cap_w", "cap_h", "quant_w", "quant_h",
                                  "entropy", "pct_le_1", "pct_le_10",
                                  "abs_loss", "pct_loss"});
  for (const SweepResult& r : results) {
    out += csv::JoinRow(
        {std::to_string(r.strategy.cap_w), std::to_string(r.strategy.cap_h),
         std::to_string(r.strategy.quant_w), std::to_string(r.strategy.quant_h),
         num(r.score.entropy_bits), num(r.score.pct_le_1),
         num(r.score.pct_le_10), num(r.score.abs_loss), num(r.score.pct_loss)});
  }
  return out;
}

std::vector<SweepResult> SweepFromCsv(std::string_view contents) {
  std::vector<csv::Row> rows = csv::Parse(contents);
  if (rows.empty() || rows.front().fields.size() != 9 ||
      rows.front().fields[0].text != "cap_w") {
    throw FormatError("sweep csv: missing or unexpected header");
  }
  auto integer = [](const csv::Field& f, size_t line) {
    auto v = ParseCanonicalInteger(f.text);
    if (!v) {
      throw FormatError("sweep csv: bad integer '" + f.text + "' on line " +
                        std::to_string(line));
    }
    return *v;
  };
  auto real = [](const csv::Field& f, size_t line) {
    try {
      return nlohmann::json::parse(f.text).get<double>();
    } catch (const nlohmann::json::exception&) {
      throw FormatError("sweep csv: bad number '" + f.text + "' on line " +
                        std::to_string(line));
    }
  };
  std::vector<SweepResult> out;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    const size_t line = rows[i].line;
    if (f.size() != 9) {
      throw FormatError("sweep csv: line " + std::to_string(line) +
                        " must have 9 fields");
    }
    SweepResult r;
    r.strategy = {integer(f[0], line), integer(f[1], line), integer(f[2], line),
                  integer(f[3], line)};
    r.score = {real(f[4], line), real(f[5], line), real(f[6], line),
               real(f[7], line), real(f[8], line)};
    out.push_back(r);
  }
  return out;
}

}  // namespace fpeval
