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

#include "fpeval/mask_inference.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "fpeval/errors.h"

namespace fpeval {
namespace {

using PlatformObservations =
    std::map<std::string, std::vector<const Observation*>, std::less<>>;

struct SubjectIndex {
  PlatformObservations baseline;
  PlatformObservations pet;
};

bool EpochOrder(const Observation* a, const Observation* b) {
  return std::tie(a->boundary, a->epoch) < std::tie(b->boundary, b->epoch);
}

SubjectIndex IndexSubjects(const ObservationLog& log, std::string_view pet) {
  SubjectIndex index;
  for (const Observation& o : log.observations) {
    if (o.subject.is_baseline()) {
      index.baseline[o.platform_id].push_back(&o);
    } else if (o.subject.pet == pet) {
      index.pet[o.platform_id].push_back(&o);
    }
  }
  for (auto* side : {&index.baseline, &index.pet}) {
    for (auto& [platform, obs] : *side) {
      std::stable_sort(obs.begin(), obs.end(), EpochOrder);
    }
  }
  return index;
}

Citation Cite(const Observation& o, std::string_view attr) {
  return {o.platform_id, o.subject.ToString(),
          std::string(ToString(o.boundary)) + ":" + std::to_string(o.epoch),
          o.fingerprint.Get(attr)};
}

// First pair of observations on one platform that disagree on `attr`.
std::optional<std::pair<const Observation*, const Observation*>> FindVariation(
    const PlatformObservations& platforms, std::string_view attr) {
  for (const auto& [platform, obs] : platforms) {
    if (obs.empty()) continue;
    const AttributeValue first = obs.front()->fingerprint.Get(attr);
    for (size_t i = 1; i < obs.size(); ++i) {
      if (!(obs[i]->fingerprint.Get(attr) == first)) {
        return std::make_pair(obs.front(), obs[i]);
      }
    }
  }
  return std::nullopt;
}

bool AnyObservationCarries(const ObservationLog& log, std::string_view attr) {
  return std::any_of(log.observations.begin(), log.observations.end(),
                     [&](const Observation& o) {
                       return o.fingerprint.contains(attr);
                     });
}

std::string FormatDouble(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Verdict ClassifyIndexed(const SubjectIndex& index, std::string_view pet,
                        std::string_view attr, const StatParams& params) {
  std::vector<std::string_view> paired;
  for (const auto& [platform, obs] : index.baseline) {
    if (index.pet.find(platform) != index.pet.end()) paired.push_back(platform);
  }
  if (paired.empty()) {
    throw InsufficientDataError("no platform has both baseline and pet:" +
                                std::string(pet) + " observations");
  }

  Verdict v;
  if (auto var = FindVariation(index.baseline, attr)) {
    v.status = VerdictStatus::kInconclusiveBaselineVaries;
    v.reason = "baseline platform '" + var->first->platform_id +
               "' varies the attribute without the tool";
    v.evidence = {Cite(*var->first, attr), Cite(*var->second, attr)};
    return v;
  }
  if (auto var = FindVariation(index.pet, attr)) {
    v.status = VerdictStatus::kMaskedVary;
    v.reason = "value varies on platform '" + var->first->platform_id +
               "' with the tool installed";
    v.evidence = {Cite(*var->first, attr), Cite(*var->second, attr)};
    return v;
  }

  // No variation anywhere: each platform has a single value per side.
  std::set<AttributeValue> distinct;
  std::vector<Citation> tested;
  for (std::string_view platform : paired) {
    const Observation& base = *index.baseline.find(platform)->second.front();
    const Observation& with = *index.pet.find(platform)->second.front();
    const AttributeValue bv = base.fingerprint.Get(attr);
    if (!(bv == with.fingerprint.Get(attr))) {
      v.status = VerdictStatus::kMaskedStandardize;
      v.reason = "value on platform '" + std::string(platform) +
                 "' changes when the tool is added";
      v.evidence = {Cite(base, attr), Cite(with, attr)};
      return v;
    }
    if (distinct.insert(bv).second) tested.push_back(Cite(base, attr));
  }

  const auto k = static_cast<int64_t>(distinct.size());
  const double p = std::pow(1.0 - params.f, static_cast<double>(k));
  v.evidence = std::move(tested);
  if (RulesOutImpactfulStandardization(k, params)) {
    v.status = VerdictStatus::kUnmasked;
    v.confidence = params.alpha;
    v.reason = "k=" + std::to_string(k) + " distinct values, (1-f)^k=" +
               FormatDouble(p) + " <= alpha=" + FormatDouble(params.alpha);
  } else {
    v.status = VerdictStatus::kInconclusiveInsufficientDiversity;
    v.reason = "k=" + std::to_string(k) + " distinct values, (1-f)^k=" +
               FormatDouble(p) + " > alpha=" + FormatDouble(params.alpha);
  }
  return v;
}

void NoteSkippedBoundaries(const ObservationLog& log, const SubjectIndex& index,
                           std::vector<std::string>* notes) {
  std::set<Boundary> tested;
  for (const Observation& o : log.observations) tested.insert(o.boundary);
  for (const auto* side : {&index.baseline, &index.pet}) {
    for (const auto& [platform, obs] : *side) {
      for (Boundary b : tested) {
        std::set<int> epochs;
        for (const Observation* o : obs) {
          if (o->boundary == b) epochs.insert(o->epoch);
        }
        if (epochs.size() < 2) {
          notes->push_back("platform '" + platform + "' (" +
                           obs.front()->subject.ToString() + "): " +
                           std::string(ToString(b)) + " boundary has " +
                           std::to_string(epochs.size()) +
                           " epoch(s); variation across it not tested");
        }
      }
    }
  }
}

}  // namespace

bool RulesOutImpactfulStandardization(int64_t distinct_values,
                                      const StatParams& params) {
  if (distinct_values <= 0) return false;
  return std::pow(1.0 - params.f, static_cast<double>(distinct_values)) <=
         params.alpha;
}

int64_t MinDistinctValuesForUnmasked(const StatParams& params) {
  params.Validate();
  int64_t k = 1;
  while (!RulesOutImpactfulStandardization(k, params)) ++k;
  return k;
}

bool BaselineVaries(const ObservationLog& log, std::string_view attr) {
  if (!AnyObservationCarries(log, attr)) {
    throw NotObservedError("attribute '" + std::string(attr) +
                           "' appears in no observation");
  }
  PlatformObservations baseline;
  for (const Observation& o : log.observations) {
    if (o.subject.is_baseline()) baseline[o.platform_id].push_back(&o);
  }
  return FindVariation(baseline, attr).has_value();
}

Verdict Classify(const ObservationLog& log, std::string_view pet,
                 std::string_view attr, const StatParams& params) {
  params.Validate();
  if (!AnyObservationCarries(log, attr)) {
    throw NotObservedError("attribute '" + std::string(attr) +
                           "' appears in no observation");
  }
  return ClassifyIndexed(IndexSubjects(log, pet), pet, attr, params);
}

MaskModel InferModel(const ObservationLog& log, std::string_view pet,
                     const StatParams& params) {
  params.Validate();
  MaskModel model;
  model.pet = std::string(pet);
  model.params = params;
  const SubjectIndex index = IndexSubjects(log, pet);

  std::set<std::string> attrs;
  for (const auto* side : {&index.baseline, &index.pet}) {
    for (const auto& [platform, obs] : *side) {
      for (const Observation* o : obs) {
        for (const auto& [name, value] : o->fingerprint.attrs()) {
          attrs.insert(name);
        }
      }
    }
  }
  for (const std::string& attr : attrs) {
    try {
      model.verdicts.emplace(attr, ClassifyIndexed(index, pet, attr, params));
    } catch (const Error& e) {
      Verdict v;
      v.status = VerdictStatus::kInconclusiveInsufficientDiversity;
      v.reason = e.kind() + ": " + e.what();
      model.verdicts.emplace(attr, std::move(v));
    }
  }
  NoteSkippedBoundaries(log, index, &model.notes);
  return model;
}

bool PreorderRanking::Dominates(std::string_view a, std::string_view b) const {
  return std::find(dominance.begin(), dominance.end(),
                   std::make_pair(std::string(a), std::string(b))) !=
         dominance.end();
}

PreorderRanking RankPreorder(const std::vector<MaskModel>& models) {
  std::vector<const MaskModel*> sorted;
  for (const MaskModel& m : models) sorted.push_back(&m);
  std::sort(sorted.begin(), sorted.end(),
            [](const MaskModel* a, const MaskModel* b) { return a->pet < b->pet; });

  auto universe = [](const MaskModel& m) {
    std::set<std::string> names;
    for (const auto& [name, v] : m.verdicts) names.insert(name);
    return names;
  };
  if (!sorted.empty()) {
    const std::set<std::string> first = universe(*sorted.front());
    for (const MaskModel* m : sorted) {
      if (universe(*m) != first) {
        throw ConfigurationError("model '" + m->pet + "' has a different "
                                 "attribute universe than '" +
                                 sorted.front()->pet + "'");
      }
    }
  }

  PreorderRanking ranking;
  std::vector<std::set<std::string>> masked;
  for (const MaskModel* m : sorted) {
    masked.push_back(m->MaskedAttributes());
    ranking.masked_counts[m->pet] = static_cast<int64_t>(masked.back().size());
  }
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = 0; j < sorted.size(); ++j) {
      if (std::includes(masked[i].begin(), masked[i].end(), masked[j].begin(),
                        masked[j].end())) {
        ranking.dominance.emplace_back(sorted[i]->pet, sorted[j]->pet);
      }
    }
  }

  std::map<std::set<std::string>, std::vector<std::string>> groups;
  for (size_t i = 0; i < sorted.size(); ++i) {
    groups[masked[i]].push_back(sorted[i]->pet);
  }
  for (auto& [set, names] : groups) ranking.classes.push_back(std::move(names));
  std::stable_sort(ranking.classes.begin(), ranking.classes.end(),
                   [&](const auto& a, const auto& b) {
                     int64_t ca = ranking.masked_counts[a.front()];
                     int64_t cb = ranking.masked_counts[b.front()];
                     if (ca != cb) return ca > cb;
                     return a.front() < b.front();
                   });
  return ranking;
}

}  // namespace fpeval
