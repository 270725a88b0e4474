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

#ifndef READABILITY_CURATE_HPP
#define READABILITY_CURATE_HPP

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "readability/features.hpp"

namespace readability {

struct LabelRecord {
  std::string voter_id;
  std::string text_id;
  int label = 0;  // easy=0 / medium=1 / hard=2
  std::string timestamp;
};

struct IngestResult {
  std::vector<LabelRecord> records;
  std::vector<std::string> errors;  // "line N: reason"
  std::size_t duplicates_dropped = 0;
};

// JSONL of {"voter","text","label","ts"}. Duplicate (voter, text) pairs keep
// the earliest occurrence; malformed lines are reported with line numbers.
IngestResult ingest(std::istream& in);

struct AgreementResult {
  int majority_label = 0;
  int percent = 0;  // floor(100 * majority_count / total)
  bool tie = false;
};

AgreementResult agreement(const std::vector<int>& labels);

// Throws NoLabels on an empty vote list.
ReadingAbility reading_ability(const std::vector<int>& voter_labels);

struct GoldStandardSet {
  std::map<std::string, int> labels;  // text_id -> true label
};

GoldStandardSet parse_gold_set(std::istream& in);

// Fraction of gold texts this voter labeled identically to the gold label.
// Throws NoGoldOverlap when the voter labeled none of them.
double gold_evaluate(const std::vector<LabelRecord>& voter_records,
                     const GoldStandardSet& gold);

struct VoterProfile {
  ReadingAbility ability;
  std::optional<double> gold_accuracy;  // absent without gold overlap
  std::size_t n_labels = 0;
  bool outlier = false;
};

std::map<std::string, VoterProfile> build_voter_profiles(
    const std::vector<LabelRecord>& records, const GoldStandardSet& gold);

// Flags voters whose ability deviates from the population mean by more than
// z_threshold population stds in any component, or whose gold accuracy is
// below gold_floor. Throws TooFewVoters below 3 profiles.
std::vector<std::string> detect_outliers(
    std::map<std::string, VoterProfile>& profiles, double z_threshold = 3.0,
    double gold_floor = 1.0 / 3.0);

struct CuratedEntry {
  std::string text_id;
  int label = 0;
  int agreement_percent = 0;
  ReadingAbility mean_ability;
};

// Keeps texts with >= min_labels votes and agreement strictly above
// threshold; ties never qualify. mean_ability averages the voters' ability
// triples.
std::vector<CuratedEntry> filter_curated(
    const std::vector<LabelRecord>& records,
    const std::map<std::string, VoterProfile>& profiles,
    std::size_t min_labels = 3, int threshold = 80);

struct CurationReport {
  std::size_t records_ingested = 0;
  std::size_t malformed_lines = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t voters = 0;
  std::size_t flagged_voters = 0;
  std::size_t records_after_exclusion = 0;
  std::size_t texts_seen = 0;
  std::size_t texts_curated = 0;
  double labels_per_text = 0.0;
};

struct CurationResult {
  std::vector<CuratedEntry> curated;
  std::map<std::string, VoterProfile> profiles;
  CurationReport report;
};

struct CurationOptions {
  std::size_t min_labels = 3;
  int threshold = 80;
  double z_threshold = 3.0;
  double gold_floor = 1.0 / 3.0;
};

// Full pipeline: profiles -> outlier exclusion -> agreement filter. Flagged
// voters' records are excluded before agreement computation. Outlier
// detection is skipped (nobody flagged) with fewer than 3 voters.
CurationResult curate(const IngestResult& ingested,
                      const GoldStandardSet& gold,
                      const CurationOptions& opts = {});

// JSONL rows of {text_id, text, label, agreement, reading_ability}, ordered
// by text_id. Curated ids missing from docs are skipped and returned.
std::vector<std::string> emit_dataset(
    const std::vector<CuratedEntry>& curated,
    const std::map<std::string, std::string>& docs, std::ostream& out);

}  // namespace readability

#endif  // READABILITY_CURATE_HPP
