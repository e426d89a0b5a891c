// Copyright 2026 The OK-IE Authors.
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
//
// okie — batch command surface over the extraction library.
//
// Exit codes: 0 success, 2 input error, 3 environment/backend error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "okie/backend.h"
#include "okie/carb_eval.h"
#include "okie/codec.h"
#include "okie/data_harness.h"
#include "okie/error.h"
#include "okie/mock_backend.h"
#include "okie/pipeline.h"
#include "okie/plot.h"
#include "okie/text.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace okie;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitEnvironment = 3;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kBackendCapability:
    case Errc::kIoError:
      return kExitEnvironment;
    default:
      return kExitInput;
  }
}

std::vector<GenerationOrder> parse_order_spec(const std::string& spec) {
  std::vector<GenerationOrder> orders;
  for (const auto& part : split(spec, ',')) {
    orders.push_back(parse_order(trim(part)));
  }
  return orders;
}

AnchorScheme scheme_from_flag(const std::string& anchors) {
  if (anchors == "on") return AnchorScheme::anchored();
  if (anchors == "off") return AnchorScheme::plain();
  throw Error(Errc::kConfigError, "--anchors expects on|off, got " + anchors);
}

std::vector<Sentence> read_sentences(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::kIoError, "cannot open for reading: " + path.string());
  }
  std::vector<Sentence> sentences;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    sentences.emplace_back(trim(line));
  }
  return sentences;
}

std::ofstream must_open(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::kIoError, "cannot open for writing: " + path.string());
  }
  return out;
}

// ----------------------------------------------------------------- transform

struct TransformArgs {
  std::string input;
  std::string out;
  std::string order = "SPO";
  std::string anchors = "off";
  bool roundtrip = false;
};

int cmd_transform(const TransformArgs& args) {
  auto examples = import_corpus(args.input, CorpusFormat::kJsonl);
  auto scheme = scheme_from_flag(args.anchors);
  auto order_cycle = parse_order_spec(args.order);

  auto out = must_open(args.out);
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const auto& example = examples[i];
    std::vector<std::string> predicates;
    std::vector<GenerationOrder> orders;
    for (std::size_t k = 0; k < example.triples.size(); ++k) {
      predicates.push_back(trim(example.triples[k].predicate));
      orders.push_back(order_cycle[k % order_cycle.size()]);
    }
    EncodedInstance instance;
    std::string target;
    try {
      instance = build_stage2_input(Sentence{example.sentence}, predicates,
                                    scheme, orders);
      target = build_stage2_target(example.triples, instance);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " [line " +
                                std::to_string(i + 1) + "]");
    }

    if (args.roundtrip) {
      auto parsed = parse_stage2_output(target, instance);
      if (!parsed.warnings.empty() || parsed.triples != example.triples) {
        std::cerr << "error: round-trip self-check failed on line " << i + 1
                  << "\n";
        return 1;
      }
    }

    json orders_json = json::array();
    for (auto order : orders) orders_json.push_back(order_name(order));
    out << json{{"input", instance.input_text},
                {"target", target},
                {"orders", std::move(orders_json)}}
               .dump()
        << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- extract

struct ExtractArgs {
  std::string backend = "mock";
  std::string gold;
  std::string input;
  std::string out;
  std::string order = "SPO";
  std::string anchors = "on";
  bool vote = false;
  double threshold = 0.5;
  bool per_predicate = false;
};

int cmd_extract(const ExtractArgs& args) {
  ExtractConfig config;
  config.scheme = scheme_from_flag(args.anchors);
  config.per_predicate = args.per_predicate;
  config.policy = args.vote ? OrderPolicy::all_orders_vote(args.threshold)
                            : OrderPolicy::fixed(parse_order(args.order));

  BackendOptions options;
  options.gold_path = args.gold;
  options.scheme = config.scheme;
  if (const char* model_dir = std::getenv("OKIE_MODEL_DIR")) {
    options.model_dir = model_dir;
  }
  auto backend = make_backend(args.backend, options);
  if (config.scheme.anchored_mode()) {
    register_anchor_tokens(*backend, config.scheme);
  }

  auto sentences = read_sentences(args.input);
  auto records = extract_corpus(*backend, sentences, config);

  write_extraction_records(args.out, records);
  fs::path sidecar = args.out;
  sidecar.replace_extension(".diagnostics.jsonl");
  write_diagnostics_sidecar(sidecar, records);

  std::size_t triples = 0, flagged = 0;
  for (const auto& record : records) {
    triples += record.triples.size();
    if (!record.diagnostics.empty()) ++flagged;
  }
  std::cout << records.size() << " sentences, " << triples << " triples, "
            << flagged << " with diagnostics -> " << args.out << "\n";
  return 0;
}

// --------------------------------------------------------------------- score

struct ScoreArgs {
  std::string gold;
  std::string pred;
  std::string report;
  std::optional<double> f1_percent_denominator;
};

int cmd_score(const ScoreArgs& args) {
  auto golds = import_corpus_auto(args.gold);
  auto preds = import_corpus_auto(args.pred);

  std::map<std::string, const ExtractionExample*> pred_by_sentence;
  for (const auto& example : preds) {
    pred_by_sentence[example.sentence] = &example;
  }

  // The scored universe is the union of both files keyed by sentence;
  // the missing side of a pair counts as empty.
  std::vector<ScoredRecord> records;
  std::map<std::string, bool> seen;
  for (const auto& gold : golds) {
    ScoredRecord record;
    record.id = gold.sentence;
    record.golds = gold.triples;
    auto it = pred_by_sentence.find(gold.sentence);
    if (it != pred_by_sentence.end()) record.preds = it->second->triples;
    seen[gold.sentence] = true;
    records.push_back(std::move(record));
  }
  for (const auto& pred : preds) {
    if (seen.count(pred.sentence)) continue;
    records.push_back({pred.sentence, pred.triples, {}});
  }

  auto report = score_corpus(records);
  if (args.f1_percent_denominator) {
    // A denominator above 1 is percent-space; bring it to the f1 scale.
    double denominator = *args.f1_percent_denominator;
    if (denominator > 1.0) denominator /= 100.0;
    report.f1_percent = f1_percent(report.f1, denominator);
  }
  write_score_report(args.report, report);

  std::cout << "precision " << format_fixed(round1(100.0 * report.precision), 1)
            << "  recall " << format_fixed(round1(100.0 * report.recall), 1)
            << "  f1 " << format_fixed(round1(100.0 * report.f1), 1);
  if (report.f1_percent) {
    std::cout << "  f1% " << format_fixed(*report.f1_percent, 1);
  }
  std::cout << " -> " << args.report << "\n";
  return 0;
}

// -------------------------------------------------------------------- sample

struct SampleArgs {
  std::string input;
  std::string out;
  double fraction = 0.0;
  long seed = 0;
};

int cmd_sample(const SampleArgs& args) {
  auto corpus = import_corpus_auto(args.input);
  auto sample = sample_fraction(corpus, args.fraction, args.seed);
  export_corpus_jsonl(args.out, sample);
  std::cout << sample.size() << " of " << corpus.size() << " examples -> "
            << args.out << "\n";
  return 0;
}

// --------------------------------------------------------------------- train

AnchorScheme scheme_from_json(const json& value) {
  if (value.is_string()) {
    auto name = value.get<std::string>();
    if (name == "plain") return AnchorScheme::plain();
    if (name == "anchored") return AnchorScheme::anchored();
    throw Error(Errc::kConfigError, "unknown scheme: " + name);
  }
  AnchorScheme scheme = value.value("mode", "anchored") == "plain"
                            ? AnchorScheme::plain()
                            : AnchorScheme::anchored();
  if (value.contains("anchor_text")) {
    auto words = value["anchor_text"].get<std::vector<std::string>>();
    if (words.size() != 3) {
      throw Error(Errc::kConfigError, "anchor_text needs 3 entries (S, P, O)");
    }
    std::copy(words.begin(), words.end(), scheme.anchor_text.begin());
  }
  if (value.contains("tunable")) {
    auto tokens = value["tunable"].get<std::vector<std::string>>();
    if (tokens.size() != 3) {
      throw Error(Errc::kConfigError, "tunable needs 3 entries (S, P, O)");
    }
    std::copy(tokens.begin(), tokens.end(), scheme.tunable.begin());
  }
  scheme.validate();
  return scheme;
}

int cmd_train(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    throw Error(Errc::kIoError, "cannot open config: " + config_path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const std::exception& e) {
    throw Error(Errc::kConfigError, std::string("bad config: ") + e.what());
  }

  ExperimentConfig config;
  config.fraction = doc.value("fraction", 1.0);
  if (doc.contains("seeds")) {
    config.seeds = doc["seeds"].get<std::vector<long>>();
  }
  if (doc.contains("train_config")) {
    const auto& tc = doc["train_config"];
    config.train_config.batch_size =
        tc.value("batch_size", config.train_config.batch_size);
    config.train_config.learning_rate =
        tc.value("learning_rate", config.train_config.learning_rate);
    config.train_config.epochs = tc.value("epochs", config.train_config.epochs);
    config.train_config.optimizer =
        tc.value("optimizer", config.train_config.optimizer);
    config.train_config.loss = tc.value("loss", config.train_config.loss);
  }
  if (doc.contains("scheme")) config.scheme = scheme_from_json(doc["scheme"]);
  if (doc.contains("order_policy")) {
    const auto& policy = doc["order_policy"];
    if (policy.value("kind", "fixed") == "fixed") {
      config.order_policy =
          OrderPolicy::fixed(parse_order(policy.value("order", "SPO")));
    } else {
      config.order_policy =
          OrderPolicy::all_orders_vote(policy.value("threshold", 0.5));
    }
  }
  if (doc.contains("augmentation")) {
    const auto& augmentation = doc["augmentation"];
    if (augmentation.value("kind", "all_orders") == "all_orders") {
      config.augmentation = Augmentation::all_orders();
    } else {
      config.augmentation =
          Augmentation::fixed(parse_order(augmentation.value("order", "SPO")));
    }
  }
  config.label = doc.value("label", config.label);

  std::string backend_name = doc.value("backend", "mock");
  fs::path train_path = doc.value("train_corpus", "");
  fs::path eval_path = doc.value("eval_corpus", "");
  fs::path runs_dir = doc.value("runs_dir", "runs");
  if (train_path.empty() || eval_path.empty()) {
    throw Error(Errc::kConfigError,
                "config needs train_corpus and eval_corpus paths");
  }

  auto train = import_corpus_auto(train_path);
  auto eval = import_corpus_auto(eval_path);

  BackendFactory factory;
  if (backend_name == "mock") {
    // The oracle is bound to the union of both corpora, so evaluation
    // sentences always resolve.
    auto scheme = config.scheme;
    factory = [train, eval, scheme](long) {
      auto mock = std::make_shared<MockOracleBackend>(scheme);
      for (const auto& example : train) {
        mock->add_example(example.sentence, example.triples);
      }
      for (const auto& example : eval) {
        mock->add_example(example.sentence, example.triples);
      }
      return BackendPair{mock, mock};
    };
  } else {
    BackendOptions options;
    options.scheme = config.scheme;
    if (const char* model_dir = std::getenv("OKIE_MODEL_DIR")) {
      options.model_dir = model_dir;
    }
    factory = [backend_name, options](long) {
      std::shared_ptr<SeqBackend> stage1 = make_backend(backend_name, options);
      std::shared_ptr<SeqBackend> stage2 = make_backend(backend_name, options);
      return BackendPair{stage1, stage2};
    };
  }

  if (doc.value("ablation_grid", false)) {
    auto report = run_ablation_grid(config, factory, train, eval, runs_dir);
    write_ablation_json(runs_dir / "ablation.json", report);
    std::cout << render_ablation_table(report);
    return 0;
  }

  auto result = run_experiment(config, factory, train, eval, runs_dir);
  std::cout << "f1 " << format_fixed(round1(100.0 * result.f1), 1) << "  f1* "
            << format_fixed(round1(100.0 * result.f1_star), 1) << " over "
            << result.per_seed.size() << " seeds -> "
            << (runs_dir / result.config_hash / "aggregate.json").string()
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------- plot

bool glob_match(const std::string& pattern, const std::string& name) {
  // '*' wildcards only.
  std::size_t p = 0, n = 0, star = std::string::npos, match = 0;
  while (n < name.size()) {
    if (p < pattern.size() &&
        (pattern[p] == name[n] || pattern[p] == '?')) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      match = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++match;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

// Expands '*'/'?' in any path component ("runs/*/aggregate.json").
std::vector<fs::path> expand_report_patterns(
    const std::vector<std::string>& patterns) {
  std::vector<fs::path> paths;
  for (const auto& pattern : patterns) {
    if (pattern.find('*') == std::string::npos &&
        pattern.find('?') == std::string::npos) {
      paths.emplace_back(pattern);
      continue;
    }
    fs::path as_path(pattern);
    std::vector<fs::path> frontier{as_path.is_absolute() ? fs::path("/")
                                                         : fs::path(".")};
    for (const auto& component : as_path) {
      std::string part = component.string();
      if (part == "/" || part.empty()) continue;
      std::vector<fs::path> next;
      for (const auto& base : frontier) {
        if (part.find('*') == std::string::npos &&
            part.find('?') == std::string::npos) {
          if (fs::exists(base / part)) next.push_back(base / part);
        } else if (fs::is_directory(base)) {
          for (const auto& entry : fs::directory_iterator(base)) {
            if (glob_match(part, entry.path().filename().string())) {
              next.push_back(entry.path());
            }
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<fs::path> matched;
    for (const auto& path : frontier) {
      if (fs::is_regular_file(path)) matched.push_back(path);
    }
    std::sort(matched.begin(), matched.end());
    paths.insert(paths.end(), matched.begin(), matched.end());
  }
  return paths;
}

int cmd_plot(const std::vector<std::string>& patterns, const std::string& out) {
  auto paths = expand_report_patterns(patterns);
  if (paths.empty()) {
    throw Error(Errc::kEmptyCorpus, "no report files matched");
  }

  std::map<std::string, CurveSeries> by_label;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) {
      throw Error(Errc::kIoError, "cannot open for reading: " + path.string());
    }
    json doc;
    try {
      doc = json::parse(in);
    } catch (const std::exception& e) {
      throw Error(Errc::kParseError, path.string() + ": " + e.what());
    }
    if (!doc.contains("f1")) {
      throw Error(Errc::kParseError, path.string() + ": report has no f1");
    }
    if (!doc.contains("fraction")) {
      throw Error(Errc::kParseError,
                  path.string() +
                      ": report has no data fraction; plot needs experiment "
                      "aggregates");
    }
    std::string label = doc.value("label", path.stem().string());
    auto& series = by_label[label];
    series.label = label;
    series.points.push_back(
        {doc["fraction"].get<double>(), doc["f1"].get<double>()});
  }

  std::vector<CurveSeries> series;
  for (auto& [label, curve] : by_label) {
    std::sort(curve.points.begin(), curve.points.end(),
              [](const CurvePoint& a, const CurvePoint& b) {
                return a.fraction < b.fraction;
              });
    series.push_back(std::move(curve));
  }

  bool text_output = fs::path(out).extension() == ".txt";
  auto rendered =
      text_output ? render_curves_text(series) : render_curves_svg(series);
  must_open(out) << rendered;
  std::cout << series.size() << " series -> " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "okie — two-stage open information extraction with span-infilling "
      "encoding, generation-order control, scoring, and experiment tooling"};
  app.require_subcommand(1);

  TransformArgs transform_args;
  auto* transform = app.add_subcommand(
      "transform", "Encode gold examples into input/target training pairs");
  transform->add_option("--input", transform_args.input, "gold corpus (jsonl)")
      ->required();
  transform->add_option("--out", transform_args.out, "pair output (jsonl)")
      ->required();
  transform->add_option("--order", transform_args.order,
                        "generation order, or a comma list cycled over slots");
  transform->add_option("--anchors", transform_args.anchors, "on|off");
  transform->add_flag("--roundtrip", transform_args.roundtrip)->group("");

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "Run two-stage extraction");
  extract->add_option("--backend", extract_args.backend,
                      "engine name (mock|t5-base|...)");
  extract->add_option("--gold", extract_args.gold,
                      "gold corpus backing the mock backend");
  extract->add_option("--input", extract_args.input,
                      "sentences, one per line")
      ->required();
  extract->add_option("--out", extract_args.out, "extraction records (jsonl)")
      ->required();
  auto* order_option =
      extract->add_option("--order", extract_args.order, "fixed order");
  auto* vote_flag = extract->add_flag("--vote", extract_args.vote,
                                      "all orders with majority vote");
  vote_flag->excludes(order_option);
  extract->add_option("--threshold", extract_args.threshold,
                      "vote threshold (0, 1]");
  extract->add_option("--anchors", extract_args.anchors, "on|off");
  extract->add_flag("--per-predicate", extract_args.per_predicate,
                    "one generation pass per predicate");

  ScoreArgs score_args;
  double denominator = 0.0;
  auto* score = app.add_subcommand("score", "Score predictions against gold");
  score->add_option("--gold", score_args.gold, "gold corpus (jsonl or tsv)")
      ->required();
  score->add_option("--pred", score_args.pred, "extraction records (jsonl)")
      ->required();
  score->add_option("--report", score_args.report, "report output (json)")
      ->required();
  auto* denominator_option = score->add_option(
      "--f1-percent-denominator", denominator,
      "full-data reference F1 for the F1% column (same units as f1; values "
      "above 1 are read as percent)");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Draw a low-resource subsample");
  sample->add_option("--fraction", sample_args.fraction, "fraction in (0, 1]")
      ->required();
  sample->add_option("--seed", sample_args.seed, "sampling seed")->required();
  sample->add_option("--input", sample_args.input, "corpus (jsonl or tsv)")
      ->required();
  sample->add_option("--out", sample_args.out, "sample output (jsonl)")
      ->required();

  std::string train_config_path;
  auto* train = app.add_subcommand("train", "Run a training experiment");
  train->add_option("--config", train_config_path, "experiment config (json)")
      ->required();

  std::vector<std::string> plot_patterns;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "F1 vs data-fraction curves");
  plot->add_option("--reports", plot_patterns,
                   "aggregate report files or globs")
      ->required();
  plot->add_option("--out", plot_out, "chart output (.svg or .txt)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*transform) return cmd_transform(transform_args);
    if (*extract) return cmd_extract(extract_args);
    if (*score) {
      if (denominator_option->count() > 0) {
        score_args.f1_percent_denominator = denominator;
      }
      return cmd_score(score_args);
    }
    if (*sample) return cmd_sample(sample_args);
    if (*train) return cmd_train(train_config_path);
    if (*plot) return cmd_plot(plot_patterns, plot_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
