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

#ifndef READABILITY_ERROR_HPP
#define READABILITY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace readability {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define READABILITY_DEFINE_ERROR(Name)                            \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& msg) : Error(msg) {}         \
  }

READABILITY_DEFINE_ERROR(EmptyDocument);
READABILITY_DEFINE_ERROR(EmptyCorpus);
READABILITY_DEFINE_ERROR(OrderMismatch);
READABILITY_DEFINE_ERROR(VersionMismatch);
READABILITY_DEFINE_ERROR(CorruptModel);
READABILITY_DEFINE_ERROR(DivisionDomain);
READABILITY_DEFINE_ERROR(MissingModel);
READABILITY_DEFINE_ERROR(InsufficientData);
READABILITY_DEFINE_ERROR(SchemaMismatch);
READABILITY_DEFINE_ERROR(MissingClass);
READABILITY_DEFINE_ERROR(DegenerateData);
READABILITY_DEFINE_ERROR(TooFewExamples);
READABILITY_DEFINE_ERROR(ZeroSupport);
READABILITY_DEFINE_ERROR(NoLabels);
READABILITY_DEFINE_ERROR(NoGoldOverlap);
READABILITY_DEFINE_ERROR(TooFewVoters);
READABILITY_DEFINE_ERROR(IoError);
READABILITY_DEFINE_ERROR(ConfigError);

#undef READABILITY_DEFINE_ERROR

}  // namespace readability

#endif  // READABILITY_ERROR_HPP
