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

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "readability/formulas.hpp"
#include "readability/text_core.hpp"

namespace {

std::string g_cli;
std::string g_data;

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CommandResult run_cli(const std::string& args) {
  CommandResult result;
  const std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe))
    result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_temp(const char* name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::trunc);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("--version names the tool and its model format versions") {
  const auto r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("readability") != std::string::npos);
  CHECK(r.output.find("ngram v1") != std::string::npos);
}

TEST_CASE("schema prints one indexed name per feature dimension") {
  const auto r = run_cli("schema");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    std::size_t index;
    std::string name;
    REQUIRE((ls >> index >> name));
    CHECK(index == count);
    ++count;
  }
  CHECK(count == 62);
  CHECK(r.output.find("avg_sentence_len") != std::string::npos);
  CHECK(r.output.find("reading_hard") != std::string::npos);
}

TEST_CASE("normalize canonicalizes a file to stdout") {
  const auto path = write_temp("cli_norm.txt", "كتاب   ١٢\n");
  const auto r = run_cli("normalize " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "کتاب 12\n");
  std::filesystem::remove(path);
}

TEST_CASE("assess --formula matches the library computation") {
  const std::string text = "کتاب خوب است. من به خانه رفتم.";
  const auto path = write_temp("cli_assess.txt", text);
  const auto doc = readability::tokenize_document({"t", text});
  const auto stats = readability::compute_statistics(doc, {}, {});
  char expected[64];
  std::snprintf(expected, sizeof(expected), "%.4f\n",
                readability::flesch_dayani(stats));

  const auto r = run_cli("assess " + path.string() +
                         " --formula flesch-dayani");
  CHECK(r.exit_code == 0);
  CHECK(r.output == expected);

  std::snprintf(expected, sizeof(expected), "%.4f\n",
                readability::flesch_kincaid_grade(stats));
  const auto r2 = run_cli("assess " + path.string() +
                          " --formula flesch-kincaid");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output == expected);
  std::filesystem::remove(path);
}

TEST_CASE("assess requires the word lists its formula depends on") {
  const auto path = write_temp("cli_fog.txt", "یک دو سه.");
  const auto r = run_cli("assess " + path.string() + " --formula gunning-fog");
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("--complex") != std::string::npos);
  const auto r2 = run_cli("assess " + path.string() + " --formula dale-chall");
  CHECK(r2.exit_code != 0);
  CHECK(r2.output.find("--familiar") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("assess rejects zero or two assessment modes") {
  const auto path = write_temp("cli_modes.txt", "یک دو.");
  const auto r = run_cli("assess " + path.string());
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("--formula") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("missing model files fail with the offending path") {
  const auto path = write_temp("cli_missing.txt", "یک دو.");
  const auto r = run_cli("assess " + path.string() +
                         " --model /nonexistent/model.bin --lm-dir /tmp "
                         "--tagger /nonexistent/tagger.bin");
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("error:") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("unknown subcommands and bad flags are rejected") {
  CHECK(run_cli("frobnicate").exit_code != 0);
  CHECK(run_cli("train-lm --order 9 --corpus x --out y").exit_code != 0);
  CHECK(run_cli("").exit_code != 0);  // a subcommand is required
}

TEST_CASE("train-tagger + train-lm on the bundled corpus are reproducible") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "cli_repro";
  fs::create_directories(dir);
  const std::string tagged = g_data + "/toy/tagged_corpus.txt";
  const std::string corpus = g_data + "/toy/corpus";

  const auto t1 = dir / "tagger1.bin";
  const auto t2 = dir / "tagger2.bin";
  CHECK(run_cli("train-tagger --corpus " + tagged + " --out " + t1.string())
            .exit_code == 0);
  CHECK(run_cli("train-tagger --corpus " + tagged + " --out " + t2.string())
            .exit_code == 0);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), {});
  };
  CHECK(slurp(t1) == slurp(t2));
  CHECK(!slurp(t1).empty());

  const auto m1 = dir / "lm1.bin";
  const auto m2 = dir / "lm2.bin";
  CHECK(run_cli("train-lm --unit word --order 2 --corpus " + corpus +
                " --out " + m1.string())
            .exit_code == 0);
  CHECK(run_cli("train-lm --unit word --order 2 --corpus " + corpus +
                " --out " + m2.string())
            .exit_code == 0);
  CHECK(slurp(m1) == slurp(m2));
  fs::remove_all(dir);
}

TEST_CASE("config file supplies defaults but flags win") {
  const auto path = write_temp("cli_cfg_input.txt", "یک دو سه.");
  const auto cfg =
      write_temp("cli_cfg.ini", "[assess]\nformula=flesch-dayani\n");
  const auto direct = run_cli("assess " + path.string() +
                              " --formula flesch-dayani");
  const auto via_config = run_cli("--config " + cfg.string() + " assess " +
                                  path.string());
  CHECK(via_config.exit_code == 0);
  CHECK(via_config.output == direct.output);
  const auto overridden = run_cli("--config " + cfg.string() + " assess " +
                                  path.string() + " --formula flesch-kincaid");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.output != direct.output);
  std::filesystem::remove(path);
  std::filesystem::remove(cfg);
}

int main(int argc, char** argv) {
  doctest::Context context;
  for (int i = 1; i + 1 < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli") g_cli = argv[i + 1];
    if (arg == "--data") g_data = argv[i + 1];
  }
  if (g_cli.empty() || g_data.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli <binary> --data <dir>\n");
    return 2;
  }
  context.applyCommandLine(1, argv);
  return context.run();
}
