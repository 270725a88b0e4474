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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "readability/error.hpp"
#include "readability/rng.hpp"
#include "readability/text_core.hpp"
#include "readability/unicode.hpp"

using namespace readability;

TEST_CASE("normalize maps Arabic variants to Persian codepoints") {
  // Arabic yeh U+064A inside a word becomes Persian yeh U+06CC.
  CHECK(normalize("مي") == "می");
  // Arabic kaf U+0643 becomes Persian kaf U+06A9.
  CHECK(normalize("كتاب") ==
        "کتاب");
  // Arabic-Indic and Extended digits become ASCII.
  CHECK(normalize("١٢۳") == "123");
  // Tatweel and diacritics are stripped.
  CHECK(normalize("كـَت") == "کت");
}

TEST_CASE("normalize collapses whitespace but keeps paragraph breaks") {
  CHECK(normalize("a  \t b") == "a b");
  CHECK(normalize("a \n b") == "a b");
  CHECK(normalize("a\n\n\nb") == "a\n\nb");
  CHECK(normalize("  a  ") == "a");
}

TEST_CASE("normalize is idempotent on already-canonical text") {
  const std::string canonical = "کتاب خوب";
  CHECK(normalize(canonical) == canonical);
}

TEST_CASE("normalize rejects degenerate input") {
  CHECK_THROWS_AS(normalize("  \t\n "), EmptyDocument);
  CHECK_THROWS_AS(normalize("ًٌ ـ"), EmptyDocument);
}

TEST_CASE("normalize idempotence property over random Persian strings") {
  // Codepoint pool mixes Persian letters, Arabic variants, digits,
  // diacritics, whitespace, and punctuation.
  const std::vector<char32_t> pool = {
      0x0627, 0x0628, 0x06CC, 0x064A, 0x0643, 0x06A9, 0x0645, 0x0646,
      0x0648, 0x0647, 0x0640, 0x064B, 0x0650, 0x0660, 0x06F5, U'a',
      U'1',   U' ',   U'\n',  U'\t',  U'.',   0x061F, 0x200C, 0x2026};
  Rng rng(20260823);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<char32_t> cps;
    const std::size_t len = 1 + rng.next_below(40);
    for (std::size_t i = 0; i < len; ++i)
      cps.push_back(pool[rng.next_below(pool.size())]);
    const std::string input = unicode::encode_utf8(cps);
    std::string once;
    try {
      once = normalize(input);
    } catch (const EmptyDocument&) {
      continue;  // degenerate draw
    }
    CHECK(normalize(once) == once);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("split_sentences splits on the terminator set") {
  const auto s = split_sentences(
      normalize("آمد. رفت؟ "
                "خوب!"));
  REQUIRE(s.size() == 3);
  const auto ascii = split_sentences("A. B? C!");
  CHECK(ascii.size() == 3);
}

TEST_CASE("split_sentences falls back to one sentence, empty to none") {
  CHECK(split_sentences("no terminator here").size() == 1);
  CHECK(split_sentences("").empty());
  CHECK(split_sentences("...!!!").empty());  // no word characters
  CHECK(split_sentences("a\n\nb").size() == 2);
}

TEST_CASE("tokenize keeps ZWNJ-joined compounds as one token") {
  // mi + ZWNJ + ravad: one token.
  const auto toks = tokenize("می‌رود");
  REQUIRE(toks.size() == 1);
  CHECK(toks[0] == "می‌رود");
}

TEST_CASE("tokenize basic splitting and punctuation removal") {
  CHECK(tokenize("x y z").size() == 3);
  CHECK(tokenize(",;:()").empty());
  const auto toks = tokenize("a,b");
  REQUIRE(toks.size() == 2);
  CHECK(toks[0] == "a");
  // Dangling ZWNJ never survives at token edges.
  for (const auto& t : tokenize("‌ab‌ c‌")) {
    CHECK(t.find("‌") == std::string::npos);
  }
}

TEST_CASE("tokenize after split_sentences yields no empties") {
  Rng rng(99);
  const std::vector<char32_t> pool = {0x0627, 0x0628, 0x06CC, U' ', U'.',
                                      0x061F, U',',   U'!',   0x200C};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<char32_t> cps;
    const std::size_t len = 1 + rng.next_below(30);
    for (std::size_t i = 0; i < len; ++i)
      cps.push_back(pool[rng.next_below(pool.size())]);
    for (const auto& sentence :
         split_sentences(unicode::encode_utf8(cps))) {
      for (const auto& tok : tokenize(sentence)) CHECK(!tok.empty());
    }
  }
}

TEST_CASE("count_syllables vowel-nucleus heuristic") {
  // Single nucleus.
  CHECK(count_syllables("در") == 1);  // dar: no nucleus letter -> 1
  CHECK(count_syllables("با") == 1);  // ba: one alef
  // Three nuclei: alef, vav, yeh.
  CHECK(count_syllables("بادومی") == 3);
  // Final heh adds a nucleus.
  CHECK(count_syllables("خانه") == 2);
  CHECK(count_syllables("") == 0);
  CHECK(count_syllables("123") == 0);  // no letters
}

TEST_CASE("count_syllables is deterministic and >= 1 with letters") {
  Rng rng(7);
  const std::vector<char32_t> pool = {0x0627, 0x0628, 0x062F, 0x0648,
                                      0x06CC, 0x0647, 0x0645};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<char32_t> cps;
    const std::size_t len = 1 + rng.next_below(8);
    for (std::size_t i = 0; i < len; ++i)
      cps.push_back(pool[rng.next_below(pool.size())]);
    const std::string tok = unicode::encode_utf8(cps);
    const auto n = count_syllables(tok);
    CHECK(n >= 1);
    CHECK(count_syllables(tok) == n);
  }
}

namespace {

TokenizedDocument make_doc(std::vector<std::vector<std::string>> sentences) {
  TokenizedDocument doc;
  doc.id = "t";
  doc.sentences = std::move(sentences);
  for (const auto& s : doc.sentences)
    for (const auto& t : s) doc.char_count += t.size();
  doc.letter_count = doc.char_count;
  return doc;
}

}  // namespace

TEST_CASE("remove_stopwords drops tokens and emptied sentences") {
  const auto doc = make_doc({{"a", "b", "c"}, {"b", "b"}, {"d"}});
  const auto out = remove_stopwords(doc, {"b"});
  REQUIRE(out.sentences.size() == 2);
  CHECK(out.sentences[0] == std::vector<std::string>{"a", "c"});
  CHECK(out.sentences[1] == std::vector<std::string>{"d"});

  CHECK(remove_stopwords(doc, {}).sentences == doc.sentences);
  CHECK(remove_stopwords(make_doc({{"x", "y"}}), {"x", "y"}).empty());

  // 10 tokens, 4 stoplist hits -> 6 tokens.
  const auto doc10 =
      make_doc({{"a", "b", "c", "d", "e"}, {"f", "g", "a", "b", "h"}});
  CHECK(remove_stopwords(doc10, {"a", "b"}).word_count() == 6);
}

TEST_CASE("compute_statistics counts words, uniques, and list membership") {
  const auto doc = make_doc({{"a", "b", "a", "c"}});
  const auto stats = compute_statistics(doc, {}, {});
  CHECK(stats.words == 4);
  CHECK(stats.unique_words == 3);
  CHECK(stats.sentences == 1);
  CHECK(stats.complex_words == 0);
  CHECK(stats.difficult_words == 4);  // empty familiar list

  const auto stats2 = compute_statistics(doc, {"a"}, {"a", "b", "c"});
  CHECK(stats2.complex_words == 2);
  CHECK(stats2.difficult_words == 0);

  CHECK_THROWS_AS(compute_statistics(make_doc({}), {}, {}), EmptyDocument);
}

TEST_CASE("word counts agree across sentence structure") {
  const RawDocument raw{"d1",
                        "کتاب خوب "
                        "است. من آمدم."};
  const auto doc = tokenize_document(raw);
  const auto stats = compute_statistics(doc, {}, {});
  std::size_t total = 0;
  for (const auto& s : doc.sentences) total += s.size();
  CHECK(total == stats.words);
  CHECK(stats.sentences == 2);
  CHECK(doc.char_count >= doc.letter_count);
}
