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

#ifndef READABILITY_FORMULAS_HPP
#define READABILITY_FORMULAS_HPP

#include <string>

#include "readability/text_core.hpp"

namespace readability {

enum class Formula { flesch_dayani, flesch_kincaid, gunning_fog, dale_chall };

Formula formula_from_string(const std::string& name);
std::string to_string(Formula f);

// 262.835 - 0.846*(letters/words) - 1.01*(words/sentences)
double flesch_dayani(const TextStatistics& s);

// 0.39*(words/sentences) + 11.8*(syllables/words) - 15.59
double flesch_kincaid_grade(const TextStatistics& s);

// 0.4*(words/sentences) + 100*(complex_words/words); with classical_grouping
// the 0.4 factor covers both terms.
double gunning_fog(const TextStatistics& s, bool classical_grouping = false);

// 15.79*(difficult_words/words) + 0.0496*(words/sentences)
double dale_chall(const TextStatistics& s);

double compute_formula(Formula f, const TextStatistics& s,
                       bool classical_gunning = false);

}  // namespace readability

#endif  // READABILITY_FORMULAS_HPP
