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

#include "fpeval/synthetic.h"

#include <cmath>
#include <set>

#include "fpeval/errors.h"
#include "fpeval/json_value.h"
#include "fpeval/mask_inference.h"
#include "fpeval/preprocess.h"
#include "fpeval/random.h"

namespace fpeval {
namespace {

using nlohmann::json;

constexpr double kWeightTolerance = 1e-9;

void CheckWeights(const std::vector<double>& weights, const std::string& what) {
  if (weights.empty()) throw SpecError(what + ": empty distribution");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw SpecError(what + ": weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightTolerance) {
    throw SpecError(what + ": weights sum to " + std::to_string(sum) +
                    ", expected 1");
  }
}

void CheckFraction(double v, const std::string& what) {
  if (!(v >= 0.0 && v <= 1.0)) throw SpecError(what + " must lie in [0, 1]");
}

// Zipf-like weights over `n` values, normalized.
std::vector<WeightedValue> ZipfTexts(const std::string& prefix, int n) {
  std::vector<WeightedValue> out;
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += 1.0 / (i + 1);
  for (int i = 0; i < n; ++i) {
    char hash[17];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(DeriveSeed(i, prefix.size())));
    out.push_back({AttributeValue::Text(prefix + hash), (1.0 / (i + 1)) / total});
  }
  return out;
}

std::vector<WeightedValue> Texts(
    std::initializer_list<std::pair<const char*, double>> items) {
  std::vector<WeightedValue> out;
  for (const auto& [v, w] : items) out.push_back({AttributeValue::Text(v), w});
  return out;
}

std::vector<WeightedValue> Integers(
    std::initializer_list<std::pair<int64_t, double>> items) {
  std::vector<WeightedValue> out;
  for (const auto& [v, w] : items) out.push_back({AttributeValue::Integer(v), w});
  return out;
}

std::string OsToken(BrowserFamily browser, int os) {
  switch (os) {
    case 0:
      return "Windows NT 10.0; Win64; x64";
    case 1:
      return browser == BrowserFamily::kFirefox ? "Macintosh; Intel Mac OS X 10.13"
                                                : "Macintosh; Intel Mac OS X 10_13_2";
    case 2:
      return "X11; Linux x86_64";
    default:
      return "Linux; Android 8.0.0; Pixel 2";
  }
}

// Returns a User-Agent whose classification is `browser` by construction.
std::string MakeUserAgent(BrowserFamily browser, int os, Rng& rng) {
  const std::string os_token = OsToken(browser, os);
  if (browser == BrowserFamily::kFirefox) {
    static constexpr int kVersions[] = {52, 56, 57, 58};
    const int v = kVersions[rng.Uniform(4)];
    return "Mozilla/5.0 (" + os_token + "; rv:" + std::to_string(v) +
           ".0) Gecko/20100101 Firefox/" + std::to_string(v) + ".0";
  }
  if (browser == BrowserFamily::kChrome) {
    static constexpr int kVersions[] = {61, 62, 63, 64};
    const int v = kVersions[rng.Uniform(4)];
    return "Mozilla/5.0 (" + os_token +
           ") AppleWebKit/537.36 (KHTML, like Gecko) Chrome/" +
           std::to_string(v) + ".0.3239.132 Safari/537.36";
  }
  switch (rng.Uniform(5)) {
    case 0:
      return "Mozilla/5.0 (" + os_token +
             ") AppleWebKit/537.36 (KHTML, like Gecko) Chrome/58.0.3029.110 "
             "Safari/537.36 Edge/16.16299";
    case 1:
      return "Mozilla/5.0 (" + os_token +
             ") AppleWebKit/537.36 (KHTML, like Gecko) Chrome/63.0.3239.132 "
             "Safari/537.36 OPR/50.0.2762.58";
    case 2:
      return "Mozilla/5.0 (" + os_token +
             "; rv:52.0) Gecko/20100101 Firefox/52.0 SeaMonkey/2.49.1";
    case 3:
      return "Mozilla/5.0 (" + os_token +
             ") AppleWebKit/537.36 (KHTML, like Gecko) Ubuntu Chromium/63.0.3239.84 "
             "Chrome/63.0.3239.84 Safari/537.36";
    default:
      return "Mozilla/5.0 (" + os_token +
             ") AppleWebKit/604.4.7 (KHTML, like Gecko) Version/11.0.2 "
             "Safari/604.4.7";
  }
}

std::vector<double> MixFromJson(const json& j, const char* const* keys,
                                size_t n, const std::string& what) {
  std::vector<double> out(n, 0.0);
  for (const auto& [k, v] : j.items()) {
    size_t i = 0;
    while (i < n && k != keys[i]) ++i;
    if (i == n) throw SpecError(what + ": unknown key '" + k + "'");
    out[i] = v.get<double>();
  }
  return out;
}

constexpr const char* kBrowserKeys[] = {"chrome", "firefox", "other"};
constexpr const char* kOsKeys[] = {"windows", "mac", "linux", "mobile"};

}  // namespace

void CorpusSpec::Validate() const {
  if (n < 0) throw SpecError("n must be non-negative");
  for (const auto& [name, dist] : attributes) {
    std::vector<double> w;
    for (const WeightedValue& v : dist) w.push_back(v.weight);
    CheckWeights(w, "attribute '" + name + "'");
  }
  if (browser_mix.size() != 3) throw SpecError("browser_mix needs 3 weights");
  if (os_mix.size() != 4) throw SpecError("os_mix needs 4 weights");
  CheckWeights(browser_mix, "browser_mix");
  CheckWeights(os_mix, "os_mix");
  if (!resolutions.empty()) {
    std::vector<double> w;
    for (const WeightedResolution& r : resolutions) w.push_back(r.weight);
    CheckWeights(w, "resolutions");
  }
  CheckFraction(js_disabled_fraction, "js_disabled_fraction");
  CheckFraction(bad_resolution_fraction, "bad_resolution_fraction");
  CheckFraction(no_cookie_fraction, "no_cookie_fraction");
  if (bad_resolution_fraction > 0.0 && resolutions.empty()) {
    throw SpecError("bad_resolution_fraction needs a resolution distribution");
  }
  if (cookies < 0) throw SpecError("cookies must be non-negative");
}

CorpusSpec CorpusSpecFromJson(const json& j) {
  try {
    CorpusSpec spec;
    if (auto p = j.find("preset"); p != j.end()) {
      spec = PresetCorpusSpec(p->get<std::string>(), 0, 0);
    }
    if (!j.contains("seed")) throw SpecError("corpus spec: 'seed' is required");
    spec.seed = j.at("seed").get<uint64_t>();
    spec.n = j.value("n", spec.n);
    if (auto a = j.find("attributes"); a != j.end()) {
      for (const auto& [name, dist] : a->items()) {
        std::vector<WeightedValue> values;
        for (const json& e : dist) {
          values.push_back({ValueFromJson(e.at("value")), e.at("weight").get<double>()});
        }
        spec.attributes[name] = std::move(values);
      }
    }
    if (auto b = j.find("browser_mix"); b != j.end()) {
      spec.browser_mix = MixFromJson(*b, kBrowserKeys, 3, "browser_mix");
    }
    if (auto o = j.find("os_mix"); o != j.end()) {
      spec.os_mix = MixFromJson(*o, kOsKeys, 4, "os_mix");
    }
    if (auto r = j.find("resolutions"); r != j.end()) {
      spec.resolutions.clear();
      for (const json& e : *r) {
        spec.resolutions.push_back({Resolution::Parse(e.at("value").get<std::string>()),
                                    e.at("weight").get<double>()});
      }
    }
    spec.avail_attributes = j.value("avail_attributes", spec.avail_attributes);
    spec.js_disabled_fraction =
        j.value("js_disabled_fraction", spec.js_disabled_fraction);
    spec.bad_resolution_fraction =
        j.value("bad_resolution_fraction", spec.bad_resolution_fraction);
    spec.no_cookie_fraction = j.value("no_cookie_fraction", spec.no_cookie_fraction);
    spec.cookies = j.value("cookies", spec.cookies);
    spec.Validate();
    return spec;
  } catch (const json::exception& e) {
    throw SpecError(std::string("corpus spec: ") + e.what());
  } catch (const FormatError& e) {
    throw SpecError(std::string("corpus spec: ") + e.what());
  }
}

json ToJson(const CorpusSpec& spec) {
  json attrs = json::object();
  for (const auto& [name, dist] : spec.attributes) {
    json values = json::array();
    for (const WeightedValue& v : dist) {
      values.push_back({{"value", ValueToJson(v.value)}, {"weight", v.weight}});
    }
    attrs[name] = std::move(values);
  }
  json browser = json::object();
  for (size_t i = 0; i < 3; ++i) browser[kBrowserKeys[i]] = spec.browser_mix[i];
  json os = json::object();
  for (size_t i = 0; i < 4; ++i) os[kOsKeys[i]] = spec.os_mix[i];
  json res = json::array();
  for (const WeightedResolution& r : spec.resolutions) {
    res.push_back({{"value", r.resolution.ToString()}, {"weight", r.weight}});
  }
  return {{"n", spec.n},
          {"seed", spec.seed},
          {"attributes", std::move(attrs)},
          {"browser_mix", std::move(browser)},
          {"os_mix", std::move(os)},
          {"resolutions", std::move(res)},
          {"avail_attributes", spec.avail_attributes},
          {"js_disabled_fraction", spec.js_disabled_fraction},
          {"bad_resolution_fraction", spec.bad_resolution_fraction},
          {"no_cookie_fraction", spec.no_cookie_fraction},
          {"cookies", spec.cookies}};
}

CorpusSpec PresetCorpusSpec(std::string_view name, int64_t n, uint64_t seed) {
  CorpusSpec spec;
  spec.n = n;
  spec.seed = seed;
  if (name == "firefox-like") {
    spec.browser_mix = {0.3, 0.6, 0.1};
  } else if (name == "chrome-like") {
    spec.browser_mix = {0.6, 0.3, 0.1};
  } else {
    throw SpecError("unknown corpus preset '" + std::string(name) +
                    "' (expected firefox-like or chrome-like)");
  }
  spec.os_mix = {0.6, 0.2, 0.15, 0.05};
  auto& a = spec.attributes;
  a["h.Accept"] = Texts({{"text/html,application/xhtml+xml,application/xml;q=0.9,*/*;q=0.8", 0.9},
                         {"*/*", 0.1}});
  a["h.Accept-Encoding"] = Texts({{"gzip, deflate, br", 0.8}, {"gzip, deflate", 0.2}});
  a["h.Accept-Language"] = Texts({{"en-US,en;q=0.5", 0.4},
                                  {"fr-FR,fr;q=0.8,en-US;q=0.5,en;q=0.3", 0.3},
                                  {"de-DE,de;q=0.8,en;q=0.5", 0.15},
                                  {"en-GB,en;q=0.5", 0.1},
                                  {"es-ES,es;q=0.8", 0.05}});
  a["language"] = Texts({{"en-US", 0.45}, {"fr", 0.3}, {"de", 0.15}, {"es", 0.1}});
  a["timezone"] = Integers({{-60, 0.35}, {0, 0.15}, {-120, 0.1}, {300, 0.15},
                            {480, 0.05}, {-480, 0.05}, {240, 0.1}, {-330, 0.05}});
  a["platform"] = Texts({{"Win32", 0.6}, {"MacIntel", 0.2}, {"Linux x86_64", 0.2}});
  a["plugins"] = ZipfTexts("plugins:", 12);
  a["canvas fingerprint"] = ZipfTexts("canvas:", 150);
  a["javascript fonts"] = ZipfTexts("fonts:", 60);
  a["webGL.Vendor"] = Texts({{"Google Inc.", 0.5}, {"Intel Inc.", 0.3}, {"NVIDIA Corporation", 0.2}});
  a["webGL.Renderer"] = ZipfTexts("renderer:", 25);
  a["cookies enabled"] = Texts({{"yes", 0.98}, {"no", 0.02}});
  a["local storage"] = Texts({{"yes", 0.97}, {"no", 0.03}});
  a["screen.Depth"] = Integers({{24, 0.9}, {32, 0.1}});
  a["screen.Pixel Ratio"] = Texts({{"1", 0.7}, {"1.25", 0.1}, {"1.5", 0.1}, {"2", 0.1}});
  spec.resolutions = {
      {{1920, 1080}, 0.30}, {{1366, 768}, 0.20}, {{1440, 900}, 0.08},
      {{1536, 864}, 0.08},  {{1600, 900}, 0.06}, {{1280, 1024}, 0.06},
      {{1680, 1050}, 0.05}, {{2560, 1440}, 0.05}, {{1280, 800}, 0.05},
      {{1024, 768}, 0.04},  {{3840, 2160}, 0.03}};
  return spec;
}

json ToJson(const GroundTruth& truth) {
  json records = json::array();
  for (const RecordTruth& r : truth.records) {
    records.push_back({{"browser", ToString(r.browser)},
                       {"os", ToString(r.os)},
                       {"planted_js_disabled", r.planted_js_disabled},
                       {"planted_bad_resolution", r.planted_bad_resolution},
                       {"expected_drop_rule", r.expected_drop_rule}});
  }
  json verdicts = json::object();
  for (const auto& [pet, statuses] : truth.verdicts) {
    json m = json::object();
    for (const auto& [attr, status] : statuses) m[attr] = ToString(status);
    verdicts[pet] = std::move(m);
  }
  return {{"records", std::move(records)}, {"verdicts", std::move(verdicts)}};
}

GeneratedCorpus GenerateCorpus(const CorpusSpec& spec) {
  spec.Validate();
  Rng rng(spec.seed);
  GeneratedCorpus out;
  out.dataset.provenance = "synthetic:seed=" + std::to_string(spec.seed);

  std::vector<std::vector<double>> attr_weights;
  for (const auto& [name, dist] : spec.attributes) {
    std::vector<double> w;
    for (const WeightedValue& v : dist) w.push_back(v.weight);
    attr_weights.push_back(std::move(w));
  }
  std::vector<double> res_weights;
  for (const WeightedResolution& r : spec.resolutions) res_weights.push_back(r.weight);

  const auto n = static_cast<size_t>(spec.n);
  std::vector<Fingerprint> fps(n);
  std::vector<bool> js(n, true);
  for (size_t i = 0; i < n; ++i) {
    RecordTruth truth;
    const size_t b = rng.Categorical(spec.browser_mix);
    const int os = static_cast<int>(rng.Categorical(spec.os_mix));
    truth.browser = b == 0   ? BrowserFamily::kChrome
                    : b == 1 ? BrowserFamily::kFirefox
                             : BrowserFamily::kOther;
    truth.os = os == 0 ? OsFamily::kWindows
               : os == 1 ? OsFamily::kMac
               : os == 2 ? OsFamily::kLinux
                         : OsFamily::kOther;

    Fingerprint::Map attrs;
    size_t k = 0;
    for (const auto& [name, dist] : spec.attributes) {
      attrs.insert_or_assign(name, dist[rng.Categorical(attr_weights[k++])].value);
    }
    attrs.insert_or_assign(std::string(attr::kUserAgent),
                           AttributeValue::Text(MakeUserAgent(truth.browser, os, rng)));
    if (!spec.resolutions.empty()) {
      const Resolution r = spec.resolutions[rng.Categorical(res_weights)].resolution;
      attrs.insert_or_assign(std::string(attr::kScreenWidth), AttributeValue::Integer(r.w));
      attrs.insert_or_assign(std::string(attr::kScreenHeight), AttributeValue::Integer(r.h));
      if (spec.avail_attributes) {
        attrs.insert_or_assign(std::string(attr::kScreenAvailWidth), AttributeValue::Integer(r.w));
        attrs.insert_or_assign(std::string(attr::kScreenAvailHeight),
                               AttributeValue::Integer(r.h - 40));
        attrs.insert_or_assign(std::string(attr::kScreenAvailLeft), AttributeValue::Integer(0));
        attrs.insert_or_assign(std::string(attr::kScreenAvailTop), AttributeValue::Integer(0));
      }
      if (rng.Bernoulli(spec.bad_resolution_fraction)) {
        truth.planted_bad_resolution = true;
        static const AttributeValue kBad[] = {AttributeValue::Integer(0),
                                              AttributeValue::Integer(-1),
                                              AttributeValue::Text("NaN")};
        attrs.insert_or_assign(std::string(attr::kScreenWidth), kBad[rng.Uniform(3)]);
      }
    }
    if (rng.Bernoulli(spec.js_disabled_fraction)) {
      truth.planted_js_disabled = true;
      js[i] = false;
    }
    fps[i] = Fingerprint(std::move(attrs));
    out.truth.records.push_back(truth);
  }

  // Cookie assignment: every one of the first min(cookies, m) cookie ids is
  // used at least once, the rest of the records reuse random ids.
  std::vector<bool> has_cookie(n);
  size_t with_cookie = 0;
  for (size_t i = 0; i < n; ++i) {
    has_cookie[i] = !rng.Bernoulli(spec.no_cookie_fraction);
    with_cookie += has_cookie[i];
  }
  std::vector<uint64_t> ids;
  if (spec.cookies == 0) {
    for (size_t i = 0; i < with_cookie; ++i) ids.push_back(i);
  } else {
    const auto pool = static_cast<uint64_t>(spec.cookies);
    for (size_t i = 0; i < with_cookie; ++i) {
      ids.push_back(i < pool ? i : rng.Uniform(pool));
    }
    for (size_t i = ids.size(); i > 1; --i) {
      std::swap(ids[i - 1], ids[rng.Uniform(i)]);
    }
  }
  size_t next_id = 0;
  for (size_t i = 0; i < n; ++i) {
    std::optional<std::string> cookie;
    if (has_cookie[i]) cookie = "c" + std::to_string(ids[next_id++]);
    Record r = Record::FromFingerprint(std::move(fps[i]), std::move(cookie), js[i]);
    out.truth.records[i].expected_drop_rule = std::string(FirstViolatedRule(r));
    out.dataset.records.push_back(std::move(r));
  }
  return out;
}

GeneratedLog GenerateLog(const std::vector<PetRequest>& pets, int platforms,
                         int epochs_per_boundary, uint64_t seed,
                         const StatParams& params) {
  params.Validate();
  if (pets.empty()) throw SpecError("at least one pet is required");
  if (platforms < 1) throw SpecError("platforms must be >= 1");
  if (epochs_per_boundary < 1) throw SpecError("epochs_per_boundary must be >= 1");
  const int64_t k_min = MinDistinctValuesForUnmasked(params);

  std::set<std::string> pet_names;
  for (const PetRequest& p : pets) {
    if (p.name.empty()) throw SpecError("pet names must be non-empty");
    if (!pet_names.insert(p.name).second) {
      throw SpecError("duplicate pet '" + p.name + "'");
    }
    if (p.verdicts.size() != pets.front().verdicts.size() ||
        !std::equal(p.verdicts.begin(), p.verdicts.end(),
                    pets.front().verdicts.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
      throw SpecError("pet '" + p.name + "' requests a different attribute set than '" +
                      pets.front().name + "'");
    }
  }

  const size_t n_platforms = static_cast<size_t>(platforms);
  const size_t n_epochs = static_cast<size_t>(epochs_per_boundary);
  const size_t n_boundaries = std::size(kAllBoundaries);
  const size_t n_subjects = pets.size() + 1;  // 0 is the baseline
  Rng rng(seed);

  // values[subject][platform][boundary * n_epochs + epoch] per attribute.
  using Grid = std::vector<std::vector<std::vector<AttributeValue>>>;
  std::map<std::string, Grid> values;

  for (const auto& [attr, unused] : pets.front().verdicts) {
    bool baseline_varies = false;
    bool all_baseline_varies = true;
    bool low_diversity = false;
    bool high_diversity = false;
    bool needs_variation = false;
    for (const PetRequest& p : pets) {
      const VerdictStatus s = p.verdicts.at(attr);
      baseline_varies |= s == VerdictStatus::kInconclusiveBaselineVaries;
      all_baseline_varies &= s == VerdictStatus::kInconclusiveBaselineVaries;
      low_diversity |= s == VerdictStatus::kInconclusiveInsufficientDiversity;
      high_diversity |= s == VerdictStatus::kUnmasked;
      needs_variation |= s == VerdictStatus::kMaskedVary ||
                         s == VerdictStatus::kInconclusiveBaselineVaries;
    }
    if (baseline_varies && !all_baseline_varies) {
      throw SpecError("attribute '" + attr +
                      "': the baseline is shared, so either every pet or no pet "
                      "can request inconclusive-baseline-varies");
    }
    if (low_diversity && high_diversity) {
      throw SpecError("attribute '" + attr +
                      "': unmasked needs diverse baseline values while "
                      "insufficient-diversity needs uniform ones");
    }
    if (high_diversity && platforms < k_min) {
      throw SpecError("attribute '" + attr + "': unmasked needs at least k=" +
                      std::to_string(k_min) +
                      " distinct baseline values (so (1-f)^k <= alpha), but only " +
                      std::to_string(platforms) + " platform(s) are available");
    }
    if (low_diversity && k_min <= 1) {
      throw SpecError("attribute '" + attr +
                      "': insufficient-diversity is unreachable when one value "
                      "already satisfies (1-f)^k <= alpha");
    }
    if (needs_variation && epochs_per_boundary < 2) {
      throw SpecError("attribute '" + attr +
                      "': variation statuses need at least 2 epochs per boundary");
    }

    const bool as_integer = rng.Bernoulli(0.5);
    int64_t token = 0;
    auto fresh = [&] {
      ++token;
      return as_integer ? AttributeValue::Integer(1000 + token)
                        : AttributeValue::Text(attr + "#" + std::to_string(token));
    };

    Grid grid(n_subjects,
              std::vector<std::vector<AttributeValue>>(
                  n_platforms, std::vector<AttributeValue>(n_boundaries * n_epochs)));
    std::vector<AttributeValue> base(n_platforms);
    const AttributeValue shared = fresh();
    for (size_t p = 0; p < n_platforms; ++p) {
      base[p] = low_diversity ? shared : fresh();
      for (AttributeValue& v : grid[0][p]) v = base[p];
    }
    if (baseline_varies) {
      const size_t p = rng.Uniform(n_platforms);
      const size_t b = rng.Uniform(n_boundaries);
      const size_t e = 1 + rng.Uniform(n_epochs - 1);
      grid[0][p][b * n_epochs + e] = fresh();
    }

    for (size_t s = 1; s < n_subjects; ++s) {
      auto& pet_grid = grid[s];
      for (size_t p = 0; p < n_platforms; ++p) pet_grid[p] = grid[0][p];
      switch (pets[s - 1].verdicts.at(attr)) {
        case VerdictStatus::kUnmasked:
        case VerdictStatus::kInconclusiveInsufficientDiversity:
          break;
        case VerdictStatus::kInconclusiveBaselineVaries:
          // Anything goes on the tool side; sometimes vary it as well.
          if (rng.Bernoulli(0.5)) {
            pet_grid[rng.Uniform(n_platforms)][rng.Uniform(n_epochs * n_boundaries)] = fresh();
          }
          break;
        case VerdictStatus::kMaskedStandardize: {
          const AttributeValue standard =
              rng.Bernoulli(0.25) ? AttributeValue::Missing() : fresh();
          std::vector<bool> hit(n_platforms);
          bool any = false;
          for (size_t p = 0; p < n_platforms; ++p) any |= (hit[p] = rng.Bernoulli(0.5));
          if (!any) hit[rng.Uniform(n_platforms)] = true;
          for (size_t p = 0; p < n_platforms; ++p) {
            if (!hit[p]) continue;
            for (AttributeValue& v : pet_grid[p]) v = standard;
          }
          break;
        }
        case VerdictStatus::kMaskedVary: {
          // Some platforms also standardize; variation must still win.
          const AttributeValue standard = fresh();
          std::vector<bool> vary(n_platforms);
          bool any = false;
          for (size_t p = 0; p < n_platforms; ++p) any |= (vary[p] = rng.Bernoulli(0.5));
          if (!any) vary[rng.Uniform(n_platforms)] = true;
          for (size_t p = 0; p < n_platforms; ++p) {
            if (vary[p]) {
              const size_t b = rng.Uniform(n_boundaries);
              for (size_t e = 0; e < n_epochs; ++e) {
                pet_grid[p][b * n_epochs + e] = fresh();
              }
            } else if (rng.Bernoulli(0.3)) {
              for (AttributeValue& v : pet_grid[p]) v = standard;
            }
          }
          break;
        }
      }
    }
    values.emplace(attr, std::move(grid));
  }

  GeneratedLog out;
  for (size_t p = 0; p < n_platforms; ++p) {
    for (size_t s = 0; s < n_subjects; ++s) {
      for (size_t b = 0; b < n_boundaries; ++b) {
        for (size_t e = 0; e < n_epochs; ++e) {
          Observation o;
          o.platform_id = "p" + std::to_string(p);
          o.subject = s == 0 ? Subject::Baseline() : Subject::Pet(pets[s - 1].name);
          o.boundary = kAllBoundaries[b];
          o.epoch = static_cast<int>(e);
          Fingerprint::Map attrs;
          for (const auto& [attr, grid] : values) {
            const AttributeValue& v = grid[s][p][b * n_epochs + e];
            // Missing values are left out, as a real collector would.
            if (!v.is_missing()) attrs.emplace(attr, v);
          }
          o.fingerprint = Fingerprint(std::move(attrs));
          out.log.observations.push_back(std::move(o));
        }
      }
    }
  }
  for (const PetRequest& p : pets) out.truth.verdicts[p.name] = p.verdicts;
  return out;
}

std::map<std::string, VerdictStatus> TorFirefoxVerdicts() {
  constexpr auto kStd = VerdictStatus::kMaskedStandardize;
  constexpr auto kUnm = VerdictStatus::kUnmasked;
  constexpr auto kInc = VerdictStatus::kInconclusiveInsufficientDiversity;
  return {
      {"buildID", kStd},
      {"canvas fingerprint", kStd},
      {"cookies enabled", kInc},
      {"cpu class", kStd},
      {"h.Accept", kInc},
      {"h.Accept-Encoding", kInc},
      {"h.Accept-Language", kStd},
      {"h.Pragma", kInc},
      {"h.User-Agent", kStd},
      {"javascript fonts", kStd},
      {"language", kStd},
      {"local storage", kInc},
      {"platform", kUnm},
      {"plugins", kInc},
      {"screen.AvailHeight", kStd},
      {"screen.AvailLeft", kStd},
      {"screen.AvailTop", kStd},
      {"screen.AvailWidth", kStd},
      {"screen.Depth", kStd},
      {"screen.Height", kStd},
      {"screen.Left", kInc},
      {"screen.Pixel Ratio", kStd},
      {"screen.Top", kInc},
      {"screen.Width", kStd},
      {"session storage", kInc},
      {"timezone", kStd},
      {"touch.event", kStd},
      {"touch.max points", kInc},
      {"touch.start", kStd},
      {"webGL.Data Hash", kStd},
      {"webGL.Renderer", kStd},
      {"webGL.Vendor", kStd},
  };
}

}  // namespace fpeval
