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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include "readability/error.hpp"
#include "readability/ngram_lm.hpp"
#include "readability/rng.hpp"

using namespace readability;

namespace {

TokenizedDocument doc(std::string id,
                      std::vector<std::vector<std::string>> sentences) {
  TokenizedDocument d;
  d.id = std::move(id);
  d.sentences = std::move(sentences);
  return d;
}

// Brute-force oracle: re-enumerate every window with naive loops and count
// into a map, independent of the library's enumeration helper.
std::map<std::vector<std::string>, std::uint64_t> oracle_counts(
    const std::vector<TokenizedDocument>& corpus, NgramUnit unit, int order) {
  std::map<std::vector<std::string>, std::uint64_t> counts;
  auto add_units = [&](const std::vector<std::string>& units) {
    if (units.size() < static_cast<std::size_t>(order)) return;
    for (std::size_t i = 0; i + order <= units.size(); ++i) {
      counts[{units.begin() + i, units.begin() + i + order}]++;
    }
  };
  for (const auto& d : corpus) {
    for (const auto& s : d.sentences) {
      if (unit == NgramUnit::character) {
        for (const auto& tok : s) {
          // ASCII test tokens: one byte per codepoint.
          std::vector<std::string> cps;
          for (char c : tok) cps.emplace_back(1, c);
          add_units(cps);
        }
      } else {
        add_units(s);
      }
    }
  }
  return counts;
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("word unigram and bigram counts on a tiny corpus") {
  const auto d = doc("d", {{"a", "b", "a", "b", "a"}});
  const auto uni = train_ngram({d}, NgramUnit::word, 1);
  CHECK(uni.total == 5);
  CHECK(uni.vocab_size() == 2);
  CHECK(uni.frequency_joined("a") == doctest::Approx(3.0 / 5.0));
  CHECK(uni.frequency_joined("b") == doctest::Approx(2.0 / 5.0));
  CHECK(uni.frequency_joined("c") == 0.0);

  const auto bi = train_ngram({d}, NgramUnit::word, 2);
  CHECK(bi.total == 4);
  const std::vector<std::string> ab = {"a", "b"};
  const std::vector<std::string> ba = {"b", "a"};
  CHECK(bi.frequency(ab) == doctest::Approx(0.5));
  CHECK(bi.frequency(ba) == doctest::Approx(0.5));
}

TEST_CASE("word n-grams do not cross sentence boundaries") {
  const auto d = doc("d", {{"a", "b"}, {"c", "d"}});
  const auto bi = train_ngram({d}, NgramUnit::word, 2);
  CHECK(bi.total == 2);  // "a b" and "c d" only, no "b c"
  const std::vector<std::string> bc = {"b", "c"};
  CHECK(bi.frequency(bc) == 0.0);
}

TEST_CASE("character n-grams do not cross token boundaries") {
  const auto d = doc("d", {{"ab", "cd"}});
  const auto bi = train_ngram({d}, NgramUnit::character, 2);
  CHECK(bi.total == 2);
  CHECK(bi.frequency_joined(std::string("a") + '\x1F' + "b") ==
        doctest::Approx(0.5));
  CHECK(bi.frequency_joined(std::string("b") + '\x1F' + "c") == 0.0);
}

TEST_CASE("short sentences and tokens yield no padded n-grams") {
  const auto d = doc("d", {{"a"}, {"b"}});
  CHECK_THROWS_AS(train_ngram({d}, NgramUnit::word, 2), EmptyCorpus);
  const auto tri = train_ngram({doc("d", {{"abcd", "x"}})},
                               NgramUnit::character, 3);
  CHECK(tri.total == 2);  // abc, bcd; "x" too short
}

TEST_CASE("counts match brute-force oracle over random corpora") {
  Rng rng(31337);
  const std::vector<std::string> vocab = {"aa", "ab", "ba", "bbb", "c"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TokenizedDocument> corpus;
    const std::size_t n_docs = 1 + rng.next_below(4);
    for (std::size_t di = 0; di < n_docs; ++di) {
      TokenizedDocument d;
      d.id = "d" + std::to_string(di);
      const std::size_t n_sent = 1 + rng.next_below(4);
      for (std::size_t si = 0; si < n_sent; ++si) {
        std::vector<std::string> sent;
        const std::size_t n_tok = 1 + rng.next_below(8);
        for (std::size_t ti = 0; ti < n_tok; ++ti)
          sent.push_back(vocab[rng.next_below(vocab.size())]);
        d.sentences.push_back(std::move(sent));
      }
      corpus.push_back(std::move(d));
    }
    for (NgramUnit unit : {NgramUnit::word, NgramUnit::character}) {
      const int order = 1 + static_cast<int>(rng.next_below(3));
      const auto expected = oracle_counts(corpus, unit, order);
      std::uint64_t expected_total = 0;
      for (const auto& [k, v] : expected) expected_total += v;
      NgramModel model;
      try {
        model = train_ngram(corpus, unit, order);
      } catch (const EmptyCorpus&) {
        CHECK(expected_total == 0);
        continue;
      }
      CHECK(model.total == expected_total);
      CHECK(model.vocab_size() == expected.size());
      for (const auto& [key, count] : expected) {
        CHECK(model.frequency(key) ==
              doctest::Approx((double)count / (double)expected_total)
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("frequencies over the vocabulary sum to one") {
  const auto d = doc("d", {{"x", "y", "x", "z", "y", "x"}, {"w", "x"}});
  for (int order = 1; order <= 3; ++order) {
    const auto model = train_ngram({d}, NgramUnit::word, order);
    double sum = 0.0;
    for (const auto& [key, count] : model.counts)
      sum += model.frequency_joined(key);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("doc_frequency_stats mean and population variance") {
  const auto train_doc = doc("t", {{"a", "a", "a", "b"}});
  const auto model = train_ngram({train_doc}, NgramUnit::word, 1);
  // Evaluated doc: a (0.75), b (0.25), c (0.0).
  const auto eval_doc = doc("e", {{"a", "b", "c"}});
  const auto stats = doc_frequency_stats(model, eval_doc);
  CHECK(stats.n_evaluated == 3);
  const double mean = (0.75 + 0.25 + 0.0) / 3.0;
  CHECK(stats.mean == doctest::Approx(mean).epsilon(1e-12));
  const double var =
      ((0.75 - mean) * (0.75 - mean) + (0.25 - mean) * (0.25 - mean) +
       mean * mean) /
      3.0;
  CHECK(stats.variance == doctest::Approx(var).epsilon(1e-12));

  // Bhatia-Davis: variance <= (max-mean)(mean-min) for values in [0,1].
  CHECK(stats.variance <= (1.0 - stats.mean) * stats.mean + 1e-15);

  // Empty evaluation: no n-grams of order 3 in a 2-token doc.
  const auto model3 = train_ngram({doc("t", {{"a", "b", "c"}})},
                                  NgramUnit::word, 3);
  const auto empty = doc_frequency_stats(model3, doc("e", {{"a", "b"}}));
  CHECK(empty.n_evaluated == 0);
  CHECK(empty.mean == 0.0);
  CHECK(empty.variance == 0.0);
}

TEST_CASE("doc_frequency_stats is invariant to document identity") {
  const auto model =
      train_ngram({doc("t", {{"a", "b"}, {"b", "a"}})}, NgramUnit::word, 1);
  const auto d1 = doc("x", {{"a", "b", "b"}});
  const auto d2 = doc("y", {{"a", "b", "b"}});
  const auto s1 = doc_frequency_stats(model, d1);
  const auto s2 = doc_frequency_stats(model, d2);
  CHECK(s1.mean == s2.mean);
  CHECK(s1.variance == s2.variance);
}

TEST_CASE("extreme_unigram_means picks most and least frequent tokens") {
  const auto model = train_ngram(
      {doc("t", {{"a", "a", "a", "a", "b", "b", "c", "d", "e", "f"}})},
      NgramUnit::word, 1);
  // Doc tokens: a (0.4), c (0.1), unseen z (0.0).
  const auto d = doc("e", {{"a", "c", "z", "a"}});
  const auto [max2, min2] = extreme_unigram_means(model, d, 2);
  CHECK(max2 == doctest::Approx((0.4 + 0.1) / 2.0).epsilon(1e-12));
  CHECK(min2 == doctest::Approx((0.0 + 0.1) / 2.0).epsilon(1e-12));

  // k larger than distinct-token count: averages all three.
  const auto [max9, min9] = extreme_unigram_means(model, d, 9);
  CHECK(max9 == doctest::Approx((0.4 + 0.1 + 0.0) / 3.0).epsilon(1e-12));
  CHECK(max9 == min9);

  CHECK_THROWS_AS(
      extreme_unigram_means(train_ngram({d}, NgramUnit::word, 2), d, 2),
      OrderMismatch);
  CHECK_THROWS_AS(extreme_unigram_means(model, doc("e", {}), 2),
                  EmptyDocument);
}

TEST_CASE("training rejects bad configuration") {
  const auto d = doc("d", {{"a", "b"}});
  CHECK_THROWS_AS(train_ngram({d}, NgramUnit::word, 0), ConfigError);
  CHECK_THROWS_AS(train_ngram({d}, NgramUnit::word, 6), ConfigError);
  CHECK_THROWS_AS(train_ngram({}, NgramUnit::word, 1), EmptyCorpus);
  const std::vector<std::string> one = {"a"};
  const auto bi = train_ngram({d}, NgramUnit::word, 2);
  CHECK_THROWS_AS(bi.frequency(one), OrderMismatch);
}

TEST_CASE("save/load round-trips exactly") {
  const auto model = train_ngram(
      {doc("t", {{"میوه", "خوب"}, {"میوه", "بد", "خوب"}})},
      NgramUnit::word, 2);
  const auto path = temp_path("ngram_roundtrip.lm");
  save_ngram(model, path);
  const auto loaded = load_ngram(path);
  CHECK(loaded.unit == model.unit);
  CHECK(loaded.order == model.order);
  CHECK(loaded.total == model.total);
  CHECK(loaded.counts == model.counts);
  std::filesystem::remove(path);
}

TEST_CASE("identical models serialize to identical bytes") {
  const auto d = doc("t", {{"a", "b", "c", "a"}});
  const auto p1 = temp_path("ngram_det1.lm");
  const auto p2 = temp_path("ngram_det2.lm");
  save_ngram(train_ngram({d}, NgramUnit::word, 1), p1);
  save_ngram(train_ngram({d}, NgramUnit::word, 1), p2);
  std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
  const std::string b1((std::istreambuf_iterator<char>(f1)), {});
  const std::string b2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(b1 == b2);
  CHECK(!b1.empty());
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("corrupt and mismatched model files are rejected") {
  const auto model =
      train_ngram({doc("t", {{"a", "b"}})}, NgramUnit::word, 1);
  const auto path = temp_path("ngram_corrupt.lm");
  save_ngram(model, path);

  std::ifstream in(path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(in)), {});
  in.close();

  SUBCASE("truncated file") {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() / 2));
    out.close();
    CHECK_THROWS_AS(load_ngram(path), CorruptModel);
  }
  SUBCASE("wrong magic") {
    bytes[0] = 'X';
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    CHECK_THROWS_AS(load_ngram(path), CorruptModel);
  }
  SUBCASE("unsupported version") {
    bytes[4] = 99;  // version byte follows the 4-byte magic
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    CHECK_THROWS_AS(load_ngram(path), VersionMismatch);
  }
  std::filesystem::remove(path);
}

TEST_CASE("unit names round-trip") {
  for (NgramUnit u :
       {NgramUnit::word, NgramUnit::character, NgramUnit::pos}) {
    CHECK(ngram_unit_from_string(to_string(u)) == u);
  }
  CHECK_THROWS_AS(ngram_unit_from_string("syllable"), ConfigError);
}
