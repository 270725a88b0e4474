// Copyright 2026 the Persian readability toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readability/curate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <json.hpp>

#include "readability/classify.hpp"
#include "readability/error.hpp"

namespace readability {

IngestResult ingest(std::istream& in) {
  IngestResult result;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      result.errors.push_back("line " + std::to_string(line_no) +
                              ": invalid JSON");
      continue;
    }
    if (!j.contains("voter") || !j.contains("text") || !j.contains("label") ||
        !j["voter"].is_string() || !j["text"].is_string() ||
        !j["label"].is_string()) {
      result.errors.push_back("line " + std::to_string(line_no) +
                              ": missing voter/text/label");
      continue;
    }
    int label;
    try {
      label = label_from_string(j["label"].get<std::string>());
    } catch (const ConfigError&) {
      result.errors.push_back("line " + std::to_string(line_no) +
                              ": label outside {easy,medium,hard}");
      continue;
    }
    LabelRecord rec;
    rec.voter_id = j["voter"].get<std::string>();
    rec.text_id = j["text"].get<std::string>();
    rec.label = label;
    if (j.contains("ts") && j["ts"].is_string())
      rec.timestamp = j["ts"].get<std::string>();
    if (!seen.emplace(rec.voter_id, rec.text_id).second) {
      ++result.duplicates_dropped;
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

AgreementResult agreement(const std::vector<int>& labels) {
  if (labels.empty()) throw NoLabels("agreement over zero labels");
  std::array<std::size_t, 3> counts{0, 0, 0};
  for (const int l : labels) ++counts[static_cast<std::size_t>(l)];
  AgreementResult result;
  std::size_t best = 0;
  for (int c = 0; c < 3; ++c) {
    if (counts[static_cast<std::size_t>(c)] > best) {
      best = counts[static_cast<std::size_t>(c)];
      result.majority_label = c;
    }
  }
  result.tie = std::count(counts.begin(), counts.end(), best) > 1;
  result.percent =
      static_cast<int>((100 * best) / labels.size());  // floor rounding
  return result;
}

ReadingAbility reading_ability(const std::vector<int>& voter_labels) {
  if (voter_labels.empty()) throw NoLabels("voter has no labels");
  std::array<double, 3> counts{0.0, 0.0, 0.0};
  for (const int l : voter_labels) counts[static_cast<std::size_t>(l)] += 1.0;
  const double n = static_cast<double>(voter_labels.size());
  return ReadingAbility{counts[0] / n, counts[1] / n, counts[2] / n};
}

GoldStandardSet parse_gold_set(std::istream& in) {
  GoldStandardSet gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("text") || !j.contains("label"))
      throw ConfigError("gold set: malformed line " + std::to_string(line_no));
    gold.labels[j["text"].get<std::string>()] =
        label_from_string(j["label"].get<std::string>());
  }
  return gold;
}

double gold_evaluate(const std::vector<LabelRecord>& voter_records,
                     const GoldStandardSet& gold) {
  std::size_t overlap = 0, correct = 0;
  for (const auto& rec : voter_records) {
    const auto it = gold.labels.find(rec.text_id);
    if (it == gold.labels.end()) continue;
    ++overlap;
    if (rec.label == it->second) ++correct;
  }
  if (overlap == 0) throw NoGoldOverlap("voter labeled no gold texts");
  return static_cast<double>(correct) / static_cast<double>(overlap);
}

std::map<std::string, VoterProfile> build_voter_profiles(
    const std::vector<LabelRecord>& records, const GoldStandardSet& gold) {
  std::map<std::string, std::vector<LabelRecord>> by_voter;
  for (const auto& rec : records) by_voter[rec.voter_id].push_back(rec);
  std::map<std::string, VoterProfile> profiles;
  for (const auto& [voter, recs] : by_voter) {
    VoterProfile profile;
    std::vector<int> labels;
    labels.reserve(recs.size());
    for (const auto& r : recs) labels.push_back(r.label);
    profile.ability = reading_ability(labels);
    profile.n_labels = recs.size();
    try {
      profile.gold_accuracy = gold_evaluate(recs, gold);
    } catch (const NoGoldOverlap&) {
      profile.gold_accuracy = std::nullopt;
    }
    profiles.emplace(voter, std::move(profile));
  }
  return profiles;
}

std::vector<std::string> detect_outliers(
    std::map<std::string, VoterProfile>& profiles, double z_threshold,
    double gold_floor) {
  if (profiles.size() < 3)
    throw TooFewVoters("outlier detection needs >= 3 voters");
  std::array<double, 3> mean{0, 0, 0};
  const double n = static_cast<double>(profiles.size());
  for (const auto& [voter, p] : profiles) {
    mean[0] += p.ability.easy / n;
    mean[1] += p.ability.medium / n;
    mean[2] += p.ability.hard / n;
  }
  std::array<double, 3> stddev{0, 0, 0};
  for (const auto& [voter, p] : profiles) {
    const std::array<double, 3> v{p.ability.easy, p.ability.medium,
                                  p.ability.hard};
    for (int c = 0; c < 3; ++c) {
      const auto cc = static_cast<std::size_t>(c);
      stddev[cc] += (v[cc] - mean[cc]) * (v[cc] - mean[cc]) / n;
    }
  }
  for (double& s : stddev) s = std::sqrt(s);

  std::vector<std::string> flagged;
  for (auto& [voter, p] : profiles) {
    const std::array<double, 3> v{p.ability.easy, p.ability.medium,
                                  p.ability.hard};
    bool out = false;
    for (std::size_t c = 0; c < 3; ++c) {
      if (stddev[c] > 0.0 &&
          std::abs(v[c] - mean[c]) > z_threshold * stddev[c])
        out = true;
    }
    if (p.gold_accuracy && *p.gold_accuracy < gold_floor) out = true;
    p.outlier = out;
    if (out) flagged.push_back(voter);
  }
  return flagged;
}

std::vector<CuratedEntry> filter_curated(
    const std::vector<LabelRecord>& records,
    const std::map<std::string, VoterProfile>& profiles,
    std::size_t min_labels, int threshold) {
  std::map<std::string, std::vector<const LabelRecord*>> by_text;
  for (const auto& rec : records) by_text[rec.text_id].push_back(&rec);

  std::vector<CuratedEntry> curated;
  for (const auto& [text_id, recs] : by_text) {
    if (recs.size() < min_labels) continue;
    std::vector<int> labels;
    labels.reserve(recs.size());
    for (const auto* r : recs) labels.push_back(r->label);
    const auto agr = agreement(labels);
    if (agr.tie || agr.percent <= threshold) continue;

    CuratedEntry entry;
    entry.text_id = text_id;
    entry.label = agr.majority_label;
    entry.agreement_percent = agr.percent;
    double n_voters = 0.0;
    for (const auto* r : recs) {
      const auto it = profiles.find(r->voter_id);
      if (it == profiles.end()) continue;
      entry.mean_ability.easy += it->second.ability.easy;
      entry.mean_ability.medium += it->second.ability.medium;
      entry.mean_ability.hard += it->second.ability.hard;
      n_voters += 1.0;
    }
    if (n_voters > 0.0) {
      entry.mean_ability.easy /= n_voters;
      entry.mean_ability.medium /= n_voters;
      entry.mean_ability.hard /= n_voters;
    }
    curated.push_back(std::move(entry));
  }
  return curated;
}

CurationResult curate(const IngestResult& ingested,
                      const GoldStandardSet& gold,
                      const CurationOptions& opts) {
  CurationResult result;
  result.report.records_ingested = ingested.records.size();
  result.report.malformed_lines = ingested.errors.size();
  result.report.duplicates_dropped = ingested.duplicates_dropped;

  result.profiles = build_voter_profiles(ingested.records, gold);
  result.report.voters = result.profiles.size();

  std::set<std::string> flagged;
  if (result.profiles.size() >= 3) {
    for (auto& v :
         detect_outliers(result.profiles, opts.z_threshold, opts.gold_floor))
      flagged.insert(std::move(v));
  }
  result.report.flagged_voters = flagged.size();

  std::vector<LabelRecord> kept;
  kept.reserve(ingested.records.size());
  for (const auto& rec : ingested.records) {
    if (!flagged.contains(rec.voter_id)) kept.push_back(rec);
  }
  result.report.records_after_exclusion = kept.size();

  std::set<std::string> texts;
  for (const auto& rec : kept) texts.insert(rec.text_id);
  result.report.texts_seen = texts.size();
  result.report.labels_per_text =
      texts.empty() ? 0.0
                    : static_cast<double>(kept.size()) /
                          static_cast<double>(texts.size());

  result.curated =
      filter_curated(kept, result.profiles, opts.min_labels, opts.threshold);
  result.report.texts_curated = result.curated.size();
  return result;
}

std::vector<std::string> emit_dataset(
    const std::vector<CuratedEntry>& curated,
    const std::map<std::string, std::string>& docs, std::ostream& out) {
  std::vector<const CuratedEntry*> ordered;
  ordered.reserve(curated.size());
  for (const auto& e : curated) ordered.push_back(&e);
  std::sort(ordered.begin(), ordered.end(),
            [](const CuratedEntry* a, const CuratedEntry* b) {
              return a->text_id < b->text_id;
            });
  std::vector<std::string> missing;
  for (const auto* e : ordered) {
    const auto it = docs.find(e->text_id);
    if (it == docs.end()) {
      missing.push_back(e->text_id);
      continue;
    }
    nlohmann::json j;
    j["text_id"] = e->text_id;
    j["text"] = it->second;
    j["label"] = label_to_string(e->label);
    j["agreement"] = e->agreement_percent;
    j["reading_ability"] = {e->mean_ability.easy, e->mean_ability.medium,
                            e->mean_ability.hard};
    out << j.dump() << '\n';
  }
  return missing;
}

}  // namespace readability
