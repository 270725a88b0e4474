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

#ifndef READABILITY_UNICODE_HPP
#define READABILITY_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace readability::unicode {

constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kArabicKaf = 0x0643;
constexpr char32_t kPersianKaf = 0x06A9;
constexpr char32_t kArabicYeh = 0x064A;
constexpr char32_t kPersianYeh = 0x06CC;
constexpr char32_t kAlef = 0x0627;
constexpr char32_t kAlefMadda = 0x0622;
constexpr char32_t kVav = 0x0648;
constexpr char32_t kHeh = 0x0647;

// Decodes UTF-8, replacing invalid sequences with U+FFFD.
std::vector<char32_t> decode_utf8(std::string_view s);

std::string encode_utf8(const std::vector<char32_t>& cps);
void append_utf8(std::string& out, char32_t cp);

bool is_whitespace(char32_t c);
bool is_letter(char32_t c);        // Persian/Arabic letters plus ASCII alpha
bool is_ascii_digit(char32_t c);
bool is_combining_diacritic(char32_t c);  // U+064B..U+0652

// Letters, ASCII digits, and ZWNJ form tokens.
bool is_word_char(char32_t c);

// Vowel nucleus letters for the syllable heuristic.
bool is_vowel_nucleus(char32_t c);

}  // namespace readability::unicode

#endif  // READABILITY_UNICODE_HPP
