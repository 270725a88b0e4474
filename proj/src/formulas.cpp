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

#include "readability/formulas.hpp"

#include "readability/error.hpp"

namespace readability {

namespace {

void require_domain(const TextStatistics& s) {
  if (s.words == 0 || s.sentences == 0)
    throw DivisionDomain("formula requires words >= 1 and sentences >= 1");
}

double ratio(std::size_t a, std::size_t b) {
  return static_cast<double>(a) / static_cast<double>(b);
}

}  // namespace

Formula formula_from_string(const std::string& name) {
  if (name == "flesch-dayani") return Formula::flesch_dayani;
  if (name == "flesch-kincaid") return Formula::flesch_kincaid;
  if (name == "gunning-fog") return Formula::gunning_fog;
  if (name == "dale-chall") return Formula::dale_chall;
  throw ConfigError("unknown formula: " + name);
}

std::string to_string(Formula f) {
  switch (f) {
    case Formula::flesch_dayani:
      return "flesch-dayani";
    case Formula::flesch_kincaid:
      return "flesch-kincaid";
    case Formula::gunning_fog:
      return "gunning-fog";
    case Formula::dale_chall:
      return "dale-chall";
  }
  return "?";
}

double flesch_dayani(const TextStatistics& s) {
  require_domain(s);
  return 262.835 - 0.846 * ratio(s.letters, s.words) -
         1.01 * ratio(s.words, s.sentences);
}

double flesch_kincaid_grade(const TextStatistics& s) {
  require_domain(s);
  return 0.39 * ratio(s.words, s.sentences) +
         11.8 * ratio(s.syllables, s.words) - 15.59;
}

double gunning_fog(const TextStatistics& s, bool classical_grouping) {
  require_domain(s);
  const double sentence_term = ratio(s.words, s.sentences);
  const double complex_term = 100.0 * ratio(s.complex_words, s.words);
  if (classical_grouping) return 0.4 * (sentence_term + complex_term);
  return 0.4 * sentence_term + complex_term;
}

double dale_chall(const TextStatistics& s) {
  require_domain(s);
  return 15.79 * ratio(s.difficult_words, s.words) +
         0.0496 * ratio(s.words, s.sentences);
}

double compute_formula(Formula f, const TextStatistics& s,
                       bool classical_gunning) {
  switch (f) {
    case Formula::flesch_dayani:
      return flesch_dayani(s);
    case Formula::flesch_kincaid:
      return flesch_kincaid_grade(s);
    case Formula::gunning_fog:
      return gunning_fog(s, classical_gunning);
    case Formula::dale_chall:
      return dale_chall(s);
  }
  throw ConfigError("unknown formula enum value");
}

}  // namespace readability
