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

#include "okie/data_harness.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "okie/error.h"
#include "okie/text.h"

namespace okie {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::ifstream open_for_read(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::kIoError, "cannot open for reading: " + path.string());
  }
  return in;
}

std::ofstream open_for_write(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::kIoError, "cannot open for writing: " + path.string());
  }
  return out;
}

json triple_to_json(const Triple& triple) {
  return json{{"subject", triple.subject},
              {"predicate", triple.predicate},
              {"object", triple.object}};
}

Triple triple_from_json(const json& value) {
  Triple triple{value.at("subject").get<std::string>(),
                value.at("predicate").get<std::string>(),
                value.at("object").get<std::string>()};
  validate_triple(triple);
  return triple;
}

void validate_example(const ExtractionExample& example) {
  if (trim(example.sentence).empty()) {
    throw Error(Errc::kParseError, "empty sentence");
  }
  if (contains_sentinel(example.sentence)) {
    throw Error(Errc::kParseError, "sentence contains a sentinel token");
  }
}

std::vector<ExtractionExample> import_jsonl(const fs::path& path) {
  auto in = open_for_read(path);
  std::vector<ExtractionExample> examples;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    try {
      auto value = json::parse(line);
      ExtractionExample example;
      example.sentence = value.at("sentence").get<std::string>();
      for (const auto& item : value.at("triples")) {
        example.triples.push_back(triple_from_json(item));
      }
      validate_example(example);
      examples.push_back(std::move(example));
    } catch (const Error& e) {
      throw Error(Errc::kParseError, path.string() + " line " +
                                         std::to_string(line_number) + ": " +
                                         e.what());
    } catch (const std::exception& e) {
      throw Error(Errc::kParseError, path.string() + " line " +
                                         std::to_string(line_number) + ": " +
                                         e.what());
    }
  }
  return examples;
}

std::vector<ExtractionExample> import_tsv(const fs::path& path) {
  auto in = open_for_read(path);
  std::vector<ExtractionExample> examples;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    auto columns = split(line, '\t');
    if (columns.size() < 4) {
      throw Error(Errc::kParseError,
                  path.string() + " line " + std::to_string(line_number) +
                      ": expected sentence<TAB>predicate<TAB>subject<TAB>"
                      "object");
    }
    // Extra columns extend the object (multi-argument rows).
    std::string object = columns[3];
    for (std::size_t i = 4; i < columns.size(); ++i) {
      if (!trim(columns[i]).empty()) object += " " + columns[i];
    }
    Triple triple{columns[2], columns[1], object};
    try {
      validate_triple(triple);
    } catch (const Error& e) {
      throw Error(Errc::kParseError, path.string() + " line " +
                                         std::to_string(line_number) + ": " +
                                         e.what());
    }
    // Consecutive rows with the same sentence form one example.
    if (examples.empty() || examples.back().sentence != columns[0]) {
      ExtractionExample example;
      example.sentence = columns[0];
      validate_example(example);
      examples.push_back(std::move(example));
    }
    examples.back().triples.push_back(std::move(triple));
  }
  return examples;
}

json scheme_to_json(const AnchorScheme& scheme) {
  return json{{"mode", scheme.anchored_mode() ? "anchored" : "plain"},
              {"anchor_text", scheme.anchor_text},
              {"tunable", scheme.tunable}};
}

json policy_to_json(const OrderPolicy& policy) {
  if (policy.kind == OrderPolicy::Kind::kFixed) {
    return json{{"kind", "fixed"}, {"order", order_name(policy.order)}};
  }
  return json{{"kind", "all_orders_vote"}, {"threshold", policy.threshold}};
}

json augmentation_to_json(const Augmentation& augmentation) {
  if (augmentation.kind == Augmentation::Kind::kAllOrders) {
    return json{{"kind", "all_orders"}};
  }
  return json{{"kind", "fixed"}, {"order", order_name(augmentation.order)}};
}

json report_to_json(const ScoreReport& report) {
  json per_sentence = json::array();
  for (const auto& entry : report.per_sentence) {
    json matches = json::array();
    for (const auto& match : entry.matches) {
      matches.push_back(
          json::array({match.pred_index, match.gold_index,
                       match.precision_part}));
    }
    per_sentence.push_back(json{{"id", entry.id},
                                {"precision", entry.precision},
                                {"recall", entry.recall},
                                {"matches", std::move(matches)}});
  }
  json out{{"label", report_label_name(report.label)},
           {"precision", report.precision},
           {"recall", report.recall},
           {"f1", report.f1},
           {"percent",
            {{"precision", round1(100.0 * report.precision)},
             {"recall", round1(100.0 * report.recall)},
             {"f1", round1(100.0 * report.f1)}}},
           {"per_sentence", std::move(per_sentence)}};
  if (report.f1_percent) out["f1_percent"] = *report.f1_percent;
  return out;
}

ScoreReport evaluate_backends(const BackendPair& backends,
                              const ExperimentConfig& config,
                              const std::vector<ExtractionExample>& eval) {
  ExtractConfig extract_config;
  extract_config.scheme = config.scheme;
  extract_config.policy = config.order_policy;

  std::vector<Sentence> sentences;
  sentences.reserve(eval.size());
  for (const auto& example : eval) sentences.emplace_back(example.sentence);

  auto records = extract_corpus(*backends.stage1, *backends.stage2, sentences,
                                extract_config);
  std::vector<ScoredRecord> scored;
  scored.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    scored.push_back(
        {records[i].sentence, records[i].triples, eval[i].triples});
  }
  return score_corpus(scored);
}

}  // namespace

std::vector<std::string> ExtractionExample::predicates() const {
  std::vector<std::string> out;
  for (const auto& triple : triples) {
    std::string predicate = trim(triple.predicate);
    if (std::find(out.begin(), out.end(), predicate) == out.end()) {
      out.push_back(std::move(predicate));
    }
  }
  return out;
}

std::vector<ExtractionExample> import_corpus(const fs::path& path,
                                             CorpusFormat format) {
  auto examples =
      format == CorpusFormat::kJsonl ? import_jsonl(path) : import_tsv(path);
  if (examples.empty()) {
    throw Error(Errc::kEmptyCorpus, "no examples in " + path.string());
  }
  return examples;
}

std::vector<ExtractionExample> import_corpus_auto(const fs::path& path) {
  auto in = open_for_read(path);
  std::string line;
  while (std::getline(in, line)) {
    auto trimmed = trim(line);
    if (trimmed.empty()) continue;
    return import_corpus(path, trimmed.front() == '{' ? CorpusFormat::kJsonl
                                                      : CorpusFormat::kTsv);
  }
  throw Error(Errc::kEmptyCorpus, "no examples in " + path.string());
}

void export_corpus_jsonl(const fs::path& path,
                         const std::vector<ExtractionExample>& examples) {
  auto out = open_for_write(path);
  for (const auto& example : examples) {
    json triples = json::array();
    for (const auto& triple : example.triples) {
      triples.push_back(triple_to_json(triple));
    }
    out << json{{"sentence", example.sentence}, {"triples", std::move(triples)}}
               .dump()
        << "\n";
  }
}

std::vector<ExtractionExample> sample_fraction(
    const std::vector<ExtractionExample>& examples, double fraction,
    long seed) {
  if (fraction <= 0.0 || fraction > 1.0) {
    throw Error(Errc::kPrecondition, "fraction must be in (0, 1]");
  }
  auto size = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(examples.size())));
  if (size == 0) {
    throw Error(Errc::kEmptySample,
                "fraction " + format_fixed(fraction, 6) + " of " +
                    std::to_string(examples.size()) + " examples rounds to 0");
  }
  size = std::min(size, examples.size());

  // Partial Fisher-Yates with an explicit modulo draw: the sequence of
  // mt19937_64 outputs is pinned by the standard, so a (corpus, fraction,
  // seed) triple selects the same subset on every platform.
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::vector<std::size_t> indices(examples.size());
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t j = i + static_cast<std::size_t>(
                            rng() % static_cast<std::uint64_t>(
                                        indices.size() - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(size);
  std::sort(indices.begin(), indices.end());

  std::vector<ExtractionExample> sample;
  sample.reserve(size);
  for (std::size_t index : indices) sample.push_back(examples[index]);
  return sample;
}

Augmentation Augmentation::all_orders() { return Augmentation{}; }

Augmentation Augmentation::fixed(GenerationOrder order) {
  Augmentation augmentation;
  augmentation.kind = Kind::kFixed;
  augmentation.order = order;
  return augmentation;
}

std::vector<StagePair> build_training_pairs(
    const std::vector<ExtractionExample>& examples, const AnchorScheme& scheme,
    const Augmentation& augmentation) {
  std::vector<GenerationOrder> orders;
  if (augmentation.kind == Augmentation::Kind::kAllOrders) {
    orders.assign(kAllOrders.begin(), kAllOrders.end());
  } else {
    orders.push_back(augmentation.order);
  }

  std::vector<StagePair> pairs;
  pairs.reserve(examples.size() * (orders.size() + 1));
  for (std::size_t index = 0; index < examples.size(); ++index) {
    const auto& example = examples[index];
    Sentence sentence{example.sentence};

    // One slot per triple, so duplicated predicates keep their own slot.
    std::vector<std::string> slot_predicates;
    slot_predicates.reserve(example.triples.size());
    for (const auto& triple : example.triples) {
      slot_predicates.push_back(trim(triple.predicate));
    }

    try {
      for (auto order : orders) {
        StagePair pair;
        pair.stage = 2;
        pair.example_index = index;
        pair.order = order;
        auto instance =
            build_stage2_input(sentence, slot_predicates, scheme, {order});
        instance.target_text = build_stage2_target(example.triples, instance);
        pair.input = instance.input_text;
        pair.target = instance.target_text;
        pair.instance = std::move(instance);
        pairs.push_back(std::move(pair));
      }
      StagePair stage1;
      stage1.stage = 1;
      stage1.example_index = index;
      auto [input, target] = build_stage1_io(sentence, example.predicates());
      stage1.input = std::move(input);
      stage1.target = std::move(target);
      pairs.push_back(std::move(stage1));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " [example " +
                                std::to_string(index) + "]");
    }
  }
  return pairs;
}

void export_pairs_jsonl(const fs::path& path,
                        const std::vector<StagePair>& pairs) {
  auto out = open_for_write(path);
  for (const auto& pair : pairs) {
    json record{{"stage", pair.stage},
                {"example", pair.example_index},
                {"input", pair.input},
                {"target", pair.target}};
    if (pair.stage == 2) record["order"] = order_name(pair.order);
    out << record.dump() << "\n";
  }
}

std::string ExperimentConfig::config_hash() const {
  json doc{{"fraction", fraction},
           {"seeds", seeds},
           {"train_config",
            {{"batch_size", train_config.batch_size},
             {"learning_rate", train_config.learning_rate},
             {"epochs", train_config.epochs},
             {"optimizer", train_config.optimizer},
             {"loss", train_config.loss}}},
           {"scheme", scheme_to_json(scheme)},
           {"order_policy", policy_to_json(order_policy)},
           {"augmentation", augmentation_to_json(augmentation)},
           {"label", label}};
  return fnv1a_hex(doc.dump());
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const BackendFactory& factory,
                                const std::vector<ExtractionExample>& train,
                                const std::vector<ExtractionExample>& eval,
                                const fs::path& runs_dir) {
  if (config.seeds.empty()) {
    throw Error(Errc::kConfigError, "experiment needs at least one seed");
  }
  ExperimentResult result;
  result.config_hash = config.config_hash();
  result.fraction = config.fraction;
  result.label = config.label;

  fs::path base = runs_dir / result.config_hash;
  for (long seed : config.seeds) {
    fs::path seed_dir = base / std::to_string(seed);
    fs::create_directories(seed_dir);

    auto sample = sample_fraction(train, config.fraction, seed);
    export_corpus_jsonl(seed_dir / "sample.jsonl", sample);

    auto pairs = build_training_pairs(sample, config.scheme,
                                      config.augmentation);
    export_pairs_jsonl(seed_dir / "pairs.jsonl", pairs);

    auto backends = factory(seed);
    if (!backends.stage1 || !backends.stage2) {
      throw Error(Errc::kConfigError, "backend factory returned null engines");
    }
    if (config.scheme.anchored_mode()) {
      register_anchor_tokens(*backends.stage2, config.scheme);
    }

    std::vector<TrainingPair> stage1_pairs, stage2_pairs;
    for (const auto& pair : pairs) {
      (pair.stage == 1 ? stage1_pairs : stage2_pairs)
          .push_back({pair.input, pair.target});
    }

    TrainConfig train_config = config.train_config;
    train_config.seed = seed;

    SeedResult seed_result;
    seed_result.seed = seed;

    // The predicate extractor trains to completion first; convergence
    // tracking applies to the triple-infilling stage.
    backends.stage1->fine_tune(stage1_pairs, train_config);
    backends.stage2->fine_tune(
        stage2_pairs, train_config, [&](int epoch) {
          if (epoch != 1) return;
          seed_result.after_one_epoch = evaluate_backends(backends, config, eval);
          seed_result.after_one_epoch.label = ReportLabel::kAfterOneEpoch;
          write_score_report(seed_dir / "report_epoch1.json",
                             seed_result.after_one_epoch);
        });

    seed_result.final_report = evaluate_backends(backends, config, eval);
    seed_result.final_report.label = ReportLabel::kFinal;
    write_score_report(seed_dir / "report_final.json", seed_result.final_report);
    result.per_seed.push_back(std::move(seed_result));
  }

  double n = static_cast<double>(result.per_seed.size());
  for (const auto& seed_result : result.per_seed) {
    result.precision += seed_result.final_report.precision / n;
    result.recall += seed_result.final_report.recall / n;
    result.f1 += seed_result.final_report.f1 / n;
    result.f1_star += seed_result.after_one_epoch.f1 / n;
  }

  json per_seed = json::array();
  for (const auto& seed_result : result.per_seed) {
    per_seed.push_back(json{{"seed", seed_result.seed},
                            {"precision", seed_result.final_report.precision},
                            {"recall", seed_result.final_report.recall},
                            {"f1", seed_result.final_report.f1},
                            {"f1_star", seed_result.after_one_epoch.f1}});
  }
  json aggregate{{"config_hash", result.config_hash},
                 {"label", result.label},
                 {"fraction", result.fraction},
                 {"seeds", config.seeds},
                 {"precision", result.precision},
                 {"recall", result.recall},
                 {"f1", result.f1},
                 {"f1_star", result.f1_star},
                 {"per_seed", std::move(per_seed)}};
  open_for_write(base / "aggregate.json") << aggregate.dump(2) << "\n";
  return result;
}

AblationReport run_ablation_grid(const ExperimentConfig& base,
                                 const BackendFactory& factory,
                                 const std::vector<ExtractionExample>& train,
                                 const std::vector<ExtractionExample>& eval,
                                 const fs::path& runs_dir) {
  struct Cell {
    const char* name;
    AnchorScheme scheme;
    Augmentation augmentation;
  };
  const Cell cells[] = {
      {"plain+fixed", AnchorScheme::plain(),
       Augmentation::fixed(GenerationOrder::kSPO)},
      {"plain+all_orders", AnchorScheme::plain(), Augmentation::all_orders()},
      {"anchored+fixed", AnchorScheme::anchored(),
       Augmentation::fixed(GenerationOrder::kSPO)},
      {"anchored+all_orders", AnchorScheme::anchored(),
       Augmentation::all_orders()},
  };

  AblationReport report;
  for (const auto& cell : cells) {
    ExperimentConfig config = base;
    config.scheme = cell.scheme;
    config.augmentation = cell.augmentation;
    config.label = cell.name;
    auto result = run_experiment(config, factory, train, eval, runs_dir);
    report.rows.push_back({cell.name, result.f1_star, result.f1});
  }
  return report;
}

std::string render_ablation_table(const AblationReport& report) {
  std::ostringstream out;
  out << "configuration          F1*     F1\n";
  for (const auto& row : report.rows) {
    out << row.name;
    for (std::size_t i = row.name.size(); i < 21; ++i) out << ' ';
    out << "  " << format_fixed(round1(100.0 * row.f1_star), 1) << "  "
        << format_fixed(round1(100.0 * row.f1), 1) << "\n";
  }
  return out.str();
}

void write_ablation_json(const fs::path& path, const AblationReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back(
        json{{"name", row.name}, {"f1_star", row.f1_star}, {"f1", row.f1}});
  }
  open_for_write(path) << json{{"rows", std::move(rows)}}.dump(2) << "\n";
}

void write_score_report(const fs::path& path, const ScoreReport& report) {
  open_for_write(path) << report_to_json(report).dump(2) << "\n";
}

ScoreReport read_score_report(const fs::path& path) {
  auto in = open_for_read(path);
  json value = json::parse(in);
  ScoreReport report;
  report.precision = value.at("precision").get<double>();
  report.recall = value.at("recall").get<double>();
  report.f1 = value.at("f1").get<double>();
  if (value.contains("f1_percent")) {
    report.f1_percent = value["f1_percent"].get<double>();
  }
  report.label = value.value("label", "final") == "after_one_epoch"
                     ? ReportLabel::kAfterOneEpoch
                     : ReportLabel::kFinal;
  for (const auto& entry : value.value("per_sentence", json::array())) {
    PerSentenceEntry sentence;
    sentence.id = entry.at("id").get<std::string>();
    sentence.precision = entry.at("precision").get<double>();
    sentence.recall = entry.at("recall").get<double>();
    for (const auto& match : entry.value("matches", json::array())) {
      sentence.matches.push_back({match.at(0).get<int>(),
                                  match.at(1).get<int>(),
                                  match.at(2).get<double>()});
    }
    report.per_sentence.push_back(std::move(sentence));
  }
  return report;
}

void write_extraction_records(const fs::path& path,
                              const std::vector<ExtractionRecord>& records) {
  auto out = open_for_write(path);
  for (const auto& record : records) {
    json triples = json::array();
    for (const auto& triple : record.triples) {
      triples.push_back(triple_to_json(triple));
    }
    out << json{{"sentence", record.sentence}, {"triples", std::move(triples)}}
               .dump()
        << "\n";
  }
}

void write_diagnostics_sidecar(const fs::path& path,
                               const std::vector<ExtractionRecord>& records) {
  auto out = open_for_write(path);
  for (const auto& record : records) {
    out << json{{"sentence", record.sentence},
                {"triple_count", record.triples.size()},
                {"diagnostics", record.diagnostics}}
               .dump()
        << "\n";
  }
}

}  // namespace okie
