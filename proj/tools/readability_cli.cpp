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

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "readability/binio.hpp"
#include "readability/classify.hpp"
#include "readability/curate.hpp"
#include "readability/error.hpp"
#include "readability/eval.hpp"
#include "readability/features.hpp"
#include "readability/formulas.hpp"
#include "readability/io.hpp"
#include "readability/ngram_lm.hpp"
#include "readability/pos.hpp"
#include "readability/text_core.hpp"

namespace {

using namespace readability;

constexpr const char* kVersion =
    "readability 1.0.0 (model formats: ngram v1, tagger v1, classifier v1)";

std::vector<TokenizedDocument> tokenize_corpus(
    const std::vector<RawDocument>& raws) {
  std::vector<TokenizedDocument> docs;
  docs.reserve(raws.size());
  for (const auto& raw : raws) {
    try {
      auto doc = tokenize_document(raw);
      if (!doc.empty()) docs.push_back(std::move(doc));
    } catch (const EmptyDocument&) {
      std::cerr << "warning: skipping empty document " << raw.id << "\n";
    }
  }
  return docs;
}

LanguageModelSet load_lm_set(const std::filesystem::path& dir) {
  LanguageModelSet lms;
  for (int n = 1; n <= 5; ++n) {
    lms.word.push_back(load_ngram(dir / ("word_" + std::to_string(n) + ".lm")));
    lms.character.push_back(
        load_ngram(dir / ("char_" + std::to_string(n) + ".lm")));
    lms.pos.push_back(load_ngram(dir / ("pos_" + std::to_string(n) + ".lm")));
  }
  lms.validate();
  return lms;
}

struct ExtractContext {
  LanguageModelSet lms;
  LexiconTagger tagger;
  WordSet stoplist;
  ExtractOptions opts;
};

FeatureTable extract_table(const ExtractContext& ctx,
                           const std::vector<DatasetRow>& rows) {
  FeatureTable table;
  table.schema = FeatureSchema::standard(ctx.tagger.tagset);
  for (const auto& row : rows) {
    try {
      const auto doc = tokenize_document({row.text_id, row.text});
      auto v = extract_features(doc, ctx.lms, ctx.tagger, row.reading,
                                ctx.stoplist, ctx.opts);
      table.ids.push_back(row.text_id);
      table.labels.push_back(row.label);
      table.features.push_back(std::move(v));
    } catch (const EmptyDocument& e) {
      std::cerr << "warning: skipping " << row.text_id << ": " << e.what()
                << "\n";
    }
  }
  return table;
}

ClassifierConfig make_classifier_config(const std::string& classifier,
                                        std::uint64_t seed, double lambda,
                                        int epochs, int estimators,
                                        int max_depth, std::size_t min_leaf) {
  ClassifierConfig cfg;
  cfg.kind = classifier_kind_from_string(classifier);
  cfg.seed = seed;
  cfg.svm_lambda = lambda;
  cfg.svm_epochs = epochs;
  cfg.forest_estimators = estimators;
  cfg.tree_max_depth = max_depth;
  cfg.tree_min_leaf = min_leaf;
  return cfg;
}

int run(int argc, char** argv) {
  CLI::App app{"Persian text readability toolkit"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Config file (key=value; flags win)");
  app.require_subcommand(1);

  // --- normalize ---
  std::string norm_input, norm_out;
  auto* cmd_normalize =
      app.add_subcommand("normalize", "Normalize a UTF-8 text file");
  cmd_normalize->add_option("file", norm_input, "Input text file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_normalize->add_option("--out", norm_out, "Output file (default stdout)");

  // --- train-lm ---
  std::string lm_unit = "word", lm_corpus, lm_out, lm_stopwords, lm_tagger;
  int lm_order = 1;
  bool lm_keep_stopwords = false;
  auto* cmd_train_lm =
      app.add_subcommand("train-lm", "Train an n-gram language model");
  cmd_train_lm->add_option("--unit", lm_unit, "word|char|pos")
      ->check(CLI::IsMember({"word", "char", "pos"}));
  cmd_train_lm->add_option("--order", lm_order, "n in [1,5]")
      ->required()
      ->check(CLI::Range(1, 5));
  cmd_train_lm->add_option("--corpus", lm_corpus, "Corpus dir or JSONL")
      ->required();
  cmd_train_lm->add_option("--out", lm_out, "Model output path")->required();
  cmd_train_lm->add_option("--stopwords", lm_stopwords, "Stopword list file");
  cmd_train_lm->add_flag("--keep-stopwords", lm_keep_stopwords,
                         "Skip stopword removal");
  cmd_train_lm->add_option("--tagger", lm_tagger,
                           "Tagger model (required for --unit pos)");

  // --- train-tagger ---
  std::string tg_corpus, tg_out;
  auto* cmd_train_tagger = app.add_subcommand(
      "train-tagger", "Train the lexicon tagger from a word/TAG corpus");
  cmd_train_tagger->add_option("--corpus", tg_corpus, "Tagged corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_train_tagger->add_option("--out", tg_out, "Model output path")
      ->required();

  // --- curate ---
  std::string cu_log, cu_gold, cu_docs, cu_out, cu_report;
  std::size_t cu_min_labels = 3;
  int cu_threshold = 80;
  double cu_z = 3.0, cu_gold_floor = 1.0 / 3.0;
  auto* cmd_curate = app.add_subcommand(
      "curate", "Turn a crowdsourced label log into a curated dataset");
  cmd_curate->add_option("--log", cu_log, "Label log JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_curate->add_option("--gold", cu_gold, "Gold standard JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_curate->add_option("--docs", cu_docs, "Document corpus dir or JSONL")
      ->required();
  cmd_curate->add_option("--out", cu_out, "Curated dataset JSONL")->required();
  cmd_curate->add_option("--report", cu_report, "Curation report JSON");
  cmd_curate->add_option("--min-labels", cu_min_labels,
                         "Minimum labels per text");
  cmd_curate->add_option("--threshold", cu_threshold,
                         "Agreement percent must exceed this");
  cmd_curate->add_option("--z-threshold", cu_z, "Outlier z-score threshold");
  cmd_curate->add_option("--gold-floor", cu_gold_floor,
                         "Minimum gold accuracy");

  // --- extract-features ---
  std::string ef_data, ef_lm_dir, ef_tagger, ef_out, ef_stopwords;
  bool ef_keep_stopwords = false;
  auto* cmd_extract = app.add_subcommand(
      "extract-features", "Extract feature vectors from a curated dataset");
  cmd_extract->add_option("--data", ef_data, "Curated dataset JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_extract->add_option("--lm-dir", ef_lm_dir, "Directory of trained LMs")
      ->required()
      ->check(CLI::ExistingDirectory);
  cmd_extract->add_option("--tagger", ef_tagger, "Tagger model")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_extract->add_option("--out", ef_out, "Feature table TSV")->required();
  cmd_extract->add_option("--stopwords", ef_stopwords, "Stopword list file");
  cmd_extract->add_flag("--keep-stopwords", ef_keep_stopwords,
                        "Skip stopword removal");

  // --- train ---
  std::string tr_classifier = "linear-svm", tr_data, tr_out;
  std::uint64_t tr_seed = 0;
  double tr_lambda = 1e-4;
  int tr_epochs = 100, tr_estimators = 50, tr_max_depth = -1;
  std::size_t tr_min_leaf = 1;
  auto* cmd_train = app.add_subcommand("train", "Train a classifier");
  cmd_train->add_option("--classifier", tr_classifier,
                        "gnb|linear-svm|tree|forest")
      ->check(CLI::IsMember({"gnb", "linear-svm", "tree", "forest"}));
  cmd_train->add_option("--data", tr_data, "Feature table TSV")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_train->add_option("--out", tr_out, "Model output path")->required();
  cmd_train->add_option("--seed", tr_seed, "Random seed");
  cmd_train->add_option("--lambda", tr_lambda, "SVM L2 regularization");
  cmd_train->add_option("--epochs", tr_epochs, "SVM epochs");
  cmd_train->add_option("--estimators", tr_estimators, "Forest size");
  cmd_train->add_option("--max-depth", tr_max_depth,
                        "Tree depth limit (-1 = unrestricted)");
  cmd_train->add_option("--min-leaf", tr_min_leaf, "Minimum samples per leaf");

  // --- evaluate ---
  std::string ev_classifier = "linear-svm", ev_data, ev_out;
  int ev_k = 10;
  std::uint64_t ev_seed = 0;
  double ev_lambda = 1e-4;
  int ev_epochs = 100, ev_estimators = 50, ev_max_depth = -1;
  std::size_t ev_min_leaf = 1;
  auto* cmd_evaluate =
      app.add_subcommand("evaluate", "Cross-validate a classifier");
  cmd_evaluate->add_option("--classifier", ev_classifier,
                           "gnb|linear-svm|tree|forest")
      ->check(CLI::IsMember({"gnb", "linear-svm", "tree", "forest"}));
  cmd_evaluate->add_option("--data", ev_data, "Feature table TSV")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_evaluate->add_option("--k", ev_k, "Number of folds");
  cmd_evaluate->add_option("--seed", ev_seed, "Random seed");
  cmd_evaluate->add_option("--out", ev_out, "Report JSON output path");
  cmd_evaluate->add_option("--lambda", ev_lambda, "SVM L2 regularization");
  cmd_evaluate->add_option("--epochs", ev_epochs, "SVM epochs");
  cmd_evaluate->add_option("--estimators", ev_estimators, "Forest size");
  cmd_evaluate->add_option("--max-depth", ev_max_depth,
                           "Tree depth limit (-1 = unrestricted)");
  cmd_evaluate->add_option("--min-leaf", ev_min_leaf,
                           "Minimum samples per leaf");

  // --- assess ---
  std::string as_formula, as_model, as_file, as_lm_dir, as_tagger,
      as_stopwords, as_complex, as_familiar, as_reading;
  bool as_classical_gunning = false, as_keep_stopwords = false;
  auto* cmd_assess =
      app.add_subcommand("assess", "Assess the readability of one text file");
  cmd_assess->add_option("file", as_file, "Text file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_assess->add_option("--formula", as_formula,
                         "flesch-dayani|flesch-kincaid|gunning-fog|dale-chall");
  cmd_assess->add_option("--model", as_model, "Trained classifier model");
  cmd_assess->add_option("--lm-dir", as_lm_dir,
                         "LM directory (model assessment)");
  cmd_assess->add_option("--tagger", as_tagger,
                         "Tagger model (model assessment)");
  cmd_assess->add_option("--stopwords", as_stopwords, "Stopword list file");
  cmd_assess->add_flag("--keep-stopwords", as_keep_stopwords,
                       "Skip stopword removal");
  cmd_assess->add_option("--complex", as_complex,
                         "Complex-word list (gunning-fog)");
  cmd_assess->add_option("--familiar", as_familiar,
                         "Familiar-word list (dale-chall)");
  cmd_assess->add_option("--reading", as_reading,
                         "Reader ability as easy,medium,hard fractions");
  cmd_assess->add_flag("--classical-gunning", as_classical_gunning,
                       "Classical Gunning Fog grouping (non-default)");

  // --- schema ---
  auto* cmd_schema =
      app.add_subcommand("schema", "Print the feature schema mapping");

  // --- export-features ---
  std::string xf_data, xf_out, xf_labels_out;
  auto* cmd_export = app.add_subcommand(
      "export-features", "Export a projector-compatible feature TSV");
  cmd_export->add_option("--data", xf_data, "Feature table TSV")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_export->add_option("--out", xf_out, "Feature TSV output")->required();
  cmd_export->add_option("--labels-out", xf_labels_out, "Label file output")
      ->required();

  // --- make-wordlists ---
  std::string wl_corpus, wl_complex_out, wl_familiar_out;
  std::size_t wl_familiar_top = 1000, wl_complex_syllables = 4;
  auto* cmd_wordlists = app.add_subcommand(
      "make-wordlists",
      "Derive default complex/familiar word lists from a corpus");
  cmd_wordlists->add_option("--corpus", wl_corpus, "Corpus dir or JSONL")
      ->required();
  cmd_wordlists->add_option("--complex-out", wl_complex_out,
                            "Complex-word list output")
      ->required();
  cmd_wordlists->add_option("--familiar-out", wl_familiar_out,
                            "Familiar-word list output")
      ->required();
  cmd_wordlists->add_option("--familiar-top", wl_familiar_top,
                            "Familiar list size");
  cmd_wordlists->add_option("--complex-syllables", wl_complex_syllables,
                            "Syllable threshold for complex words");

  CLI11_PARSE(app, argc, argv);

  if (cmd_normalize->parsed()) {
    const std::string out = normalize(binio::read_file(norm_input));
    if (norm_out.empty())
      std::cout << out << "\n";
    else
      binio::atomic_write(norm_out, out + "\n");
    return 0;
  }

  if (cmd_train_lm->parsed()) {
    const auto unit = ngram_unit_from_string(lm_unit);
    auto docs = tokenize_corpus(load_corpus(lm_corpus));
    if (unit == NgramUnit::pos) {
      if (lm_tagger.empty())
        throw ConfigError("--tagger is required for --unit pos");
      const auto tagger = load_tagger(lm_tagger);
      for (auto& doc : docs) doc = substitute_pos(tag(tagger, doc));
    } else if (!lm_stopwords.empty() && !lm_keep_stopwords) {
      const auto stoplist = load_word_list(lm_stopwords);
      std::vector<TokenizedDocument> kept;
      for (const auto& doc : docs) {
        auto filtered = remove_stopwords(doc, stoplist);
        if (!filtered.empty()) kept.push_back(std::move(filtered));
      }
      docs = std::move(kept);
    }
    save_ngram(train_ngram(docs, unit, lm_order), lm_out);
    return 0;
  }

  if (cmd_train_tagger->parsed()) {
    std::ifstream in(tg_corpus);
    const auto tagset = TagSet::default_set();
    const auto corpus = parse_tagged_corpus(in, tagset);
    save_tagger(
        train_tagger(corpus, tagset, default_suffix_rules(), "N"), tg_out);
    return 0;
  }

  if (cmd_curate->parsed()) {
    std::ifstream log_in(cu_log);
    const auto ingested = ingest(log_in);
    for (const auto& err : ingested.errors)
      std::cerr << "warning: " << err << "\n";
    std::ifstream gold_in(cu_gold);
    const auto gold = parse_gold_set(gold_in);
    CurationOptions opts;
    opts.min_labels = cu_min_labels;
    opts.threshold = cu_threshold;
    opts.z_threshold = cu_z;
    opts.gold_floor = cu_gold_floor;
    const auto result = curate(ingested, gold, opts);

    std::map<std::string, std::string> docs;
    for (const auto& raw : load_corpus(cu_docs)) docs[raw.id] = raw.text;
    std::ostringstream dataset;
    const auto missing = emit_dataset(result.curated, docs, dataset);
    for (const auto& id : missing)
      std::cerr << "warning: curated text missing from corpus: " << id << "\n";
    binio::atomic_write(cu_out, dataset.str());

    if (!cu_report.empty()) {
      nlohmann::json j;
      j["records_ingested"] = result.report.records_ingested;
      j["malformed_lines"] = result.report.malformed_lines;
      j["duplicates_dropped"] = result.report.duplicates_dropped;
      j["voters"] = result.report.voters;
      j["flagged_voters"] = result.report.flagged_voters;
      j["records_after_exclusion"] = result.report.records_after_exclusion;
      j["texts_seen"] = result.report.texts_seen;
      j["texts_curated"] = result.report.texts_curated;
      j["labels_per_text"] = result.report.labels_per_text;
      binio::atomic_write(cu_report, j.dump(2) + "\n");
    }
    std::cout << "curated " << result.curated.size() << " of "
              << result.report.texts_seen << " texts\n";
    return 0;
  }

  if (cmd_extract->parsed()) {
    ExtractContext ctx;
    ctx.lms = load_lm_set(ef_lm_dir);
    ctx.tagger = load_tagger(ef_tagger);
    if (!ef_stopwords.empty()) ctx.stoplist = load_word_list(ef_stopwords);
    ctx.opts.remove_stopwords = !ef_keep_stopwords;
    const auto table = extract_table(ctx, load_dataset(ef_data));
    save_feature_table(table, ef_out);
    std::cout << "extracted " << table.features.size() << " vectors of dim "
              << table.schema.size() << "\n";
    return 0;
  }

  if (cmd_train->parsed()) {
    const auto table = load_feature_table(tr_data);
    const auto cfg =
        make_classifier_config(tr_classifier, tr_seed, tr_lambda, tr_epochs,
                               tr_estimators, tr_max_depth, tr_min_leaf);
    ClassifierModel model;
    model.schema = table.schema;
    model.scaler = fit_scaler(table.features);
    Matrix x;
    for (const auto& v : table.features)
      x.push_back(transform(model.scaler, v).values);
    switch (cfg.kind) {
      case ClassifierKind::gnb:
        model.model = train_gnb(x, table.labels, kNumClasses,
                                cfg.gnb_var_floor);
        break;
      case ClassifierKind::linear_svm:
        model.model = train_linear_svm(x, table.labels, kNumClasses,
                                       cfg.svm_lambda, cfg.svm_epochs,
                                       cfg.seed);
        break;
      case ClassifierKind::tree:
        model.model =
            train_tree(x, table.labels, kNumClasses,
                       TreeConfig{cfg.tree_max_depth, cfg.tree_min_leaf});
        break;
      case ClassifierKind::forest:
        model.model = train_forest(
            x, table.labels, kNumClasses, cfg.forest_estimators, cfg.seed,
            TreeConfig{cfg.tree_max_depth, cfg.tree_min_leaf});
        break;
    }
    save_model(model, tr_out);
    return 0;
  }

  if (cmd_evaluate->parsed()) {
    const auto table = load_feature_table(ev_data);
    const auto cfg =
        make_classifier_config(ev_classifier, ev_seed, ev_lambda, ev_epochs,
                               ev_estimators, ev_max_depth, ev_min_leaf);
    const auto report =
        cross_validate(cfg, table.features, table.labels, ev_k, ev_seed);
    std::cout << render_report_table(report);
    if (!ev_out.empty()) binio::atomic_write(ev_out, report_to_json(report));
    return 0;
  }

  if (cmd_assess->parsed()) {
    if (as_formula.empty() == as_model.empty())
      throw ConfigError("assess needs exactly one of --formula or --model");
    const auto doc =
        tokenize_document({std::filesystem::path(as_file).stem().string(),
                           binio::read_file(as_file)});
    if (!as_formula.empty()) {
      const auto f = formula_from_string(as_formula);
      WordSet complex_list, familiar_list;
      if (!as_complex.empty()) complex_list = load_word_list(as_complex);
      if (!as_familiar.empty()) familiar_list = load_word_list(as_familiar);
      if (f == Formula::gunning_fog && as_complex.empty())
        throw ConfigError("gunning-fog needs --complex");
      if (f == Formula::dale_chall && as_familiar.empty())
        throw ConfigError("dale-chall needs --familiar");
      const auto stats = compute_statistics(doc, complex_list, familiar_list);
      std::cout << std::fixed << std::setprecision(4)
                << compute_formula(f, stats, as_classical_gunning) << "\n";
      return 0;
    }
    if (as_lm_dir.empty() || as_tagger.empty())
      throw ConfigError("--model assessment needs --lm-dir and --tagger");
    const auto model = load_model(as_model);
    ExtractContext ctx;
    ctx.lms = load_lm_set(as_lm_dir);
    ctx.tagger = load_tagger(as_tagger);
    if (!as_stopwords.empty()) ctx.stoplist = load_word_list(as_stopwords);
    ctx.opts.remove_stopwords = !as_keep_stopwords;
    ReadingAbility reading = ReadingAbility::population_prior();
    if (!as_reading.empty()) {
      std::istringstream rs(as_reading);
      char comma;
      if (!(rs >> reading.easy >> comma >> reading.medium >> comma >>
            reading.hard))
        throw ConfigError("--reading expects e,m,h fractions");
    }
    const auto v = extract_features(doc, ctx.lms, ctx.tagger, reading,
                                    ctx.stoplist, ctx.opts);
    const auto p = predict(model, v);
    std::cout << label_to_string(p.label);
    std::cout << std::setprecision(6) << std::fixed;
    for (const double s : p.scores) std::cout << " " << s;
    std::cout << "\n";
    return 0;
  }

  if (cmd_schema->parsed()) {
    const auto schema = FeatureSchema::standard(TagSet::default_set());
    for (std::size_t i = 0; i < schema.names.size(); ++i)
      std::cout << i << "\t" << schema.names[i] << "\n";
    return 0;
  }

  if (cmd_export->parsed()) {
    const auto table = load_feature_table(xf_data);
    std::vector<std::string> labels;
    labels.reserve(table.labels.size());
    for (const int l : table.labels) labels.push_back(label_to_string(l));
    export_tsv(table.schema, table.features, labels, xf_out, xf_labels_out);
    return 0;
  }

  if (cmd_wordlists->parsed()) {
    const auto docs = tokenize_corpus(load_corpus(wl_corpus));
    std::map<std::string, std::uint64_t> freq;
    for (const auto& doc : docs)
      for (const auto& sentence : doc.sentences)
        for (const auto& tok : sentence) ++freq[tok];
    std::ostringstream complex_out;
    complex_out << "# words with >= " << wl_complex_syllables
                << " syllables\n";
    for (const auto& [word, count] : freq) {
      if (count_syllables(word) >= wl_complex_syllables)
        complex_out << word << "\n";
    }
    binio::atomic_write(wl_complex_out, complex_out.str());

    std::vector<std::pair<std::uint64_t, std::string>> by_freq;
    for (const auto& [word, count] : freq) by_freq.emplace_back(count, word);
    std::sort(by_freq.begin(), by_freq.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
              });
    std::ostringstream familiar_out;
    familiar_out << "# top " << wl_familiar_top << " corpus words\n";
    for (std::size_t i = 0; i < by_freq.size() && i < wl_familiar_top; ++i)
      familiar_out << by_freq[i].second << "\n";
    binio::atomic_write(wl_familiar_out, familiar_out.str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const readability::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
