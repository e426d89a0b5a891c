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
// Corpus ingestion, low-resource subsampling, training-pair generation
// with all-orders augmentation, and the train/evaluate experiment loop
// with multi-seed aggregation.

#ifndef OKIE_DATA_HARNESS_H_
#define OKIE_DATA_HARNESS_H_

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "okie/backend.h"
#include "okie/carb_eval.h"
#include "okie/codec.h"
#include "okie/pipeline.h"
#include "okie/triple.h"

namespace okie {

// One gold sentence with its extractions. Training examples carry at
// least one triple; each triple's predicate is part of the sentence's
// predicate inventory by construction.
struct ExtractionExample {
  std::string sentence;
  std::vector<Triple> triples;

  // Unique predicates in first-occurrence order.
  std::vector<std::string> predicates() const;
};

enum class CorpusFormat { kJsonl, kTsv };

// Canonical JSON-lines: one {"sentence": ..., "triples": [...]} object
// per line. TSV rows are `sentence<TAB>predicate<TAB>subject<TAB>object`,
// grouped into examples by consecutive identical sentences. Malformed
// lines raise Error(kParseError) with the line number; an example-less
// file raises Error(kEmptyCorpus).
std::vector<ExtractionExample> import_corpus(const std::filesystem::path& path,
                                             CorpusFormat format);

// Detects the format from the first non-blank line ('{' starts JSONL).
std::vector<ExtractionExample> import_corpus_auto(
    const std::filesystem::path& path);

void export_corpus_jsonl(const std::filesystem::path& path,
                         const std::vector<ExtractionExample>& examples);

// Uniform sample without replacement of round(fraction * N) examples,
// in stable corpus order. Deterministic for a fixed seed (the draw does
// not depend on the platform's distribution implementation). Throws
// Error(kEmptySample) when the rounded size is zero and
// Error(kPrecondition) on a fraction outside (0, 1].
std::vector<ExtractionExample> sample_fraction(
    const std::vector<ExtractionExample>& examples, double fraction,
    long seed);

// Training augmentation: either every order applied uniformly to all
// slots (6 stage-2 pairs per example) or one fixed order (1 pair).
struct Augmentation {
  enum class Kind { kAllOrders, kFixed };

  Kind kind = Kind::kAllOrders;
  GenerationOrder order = GenerationOrder::kSPO;

  static Augmentation all_orders();
  static Augmentation fixed(GenerationOrder order);
};

struct StagePair {
  int stage = 2;  // 1 or 2
  std::size_t example_index = 0;
  GenerationOrder order = GenerationOrder::kSPO;  // stage-2 only
  std::string input;
  std::string target;
  // Present for stage-2 pairs; carries the slot bookkeeping needed to
  // parse the target back.
  std::optional<EncodedInstance> instance;
};

// Builds stage-2 pairs per the augmentation plus one stage-1 pair per
// example. Codec errors propagate with the example index attached.
std::vector<StagePair> build_training_pairs(
    const std::vector<ExtractionExample>& examples, const AnchorScheme& scheme,
    const Augmentation& augmentation);

void export_pairs_jsonl(const std::filesystem::path& path,
                        const std::vector<StagePair>& pairs);

struct ExperimentConfig {
  double fraction = 1.0;
  std::vector<long> seeds = {1, 2, 3};
  TrainConfig train_config;
  AnchorScheme scheme = AnchorScheme::anchored();
  OrderPolicy order_policy = OrderPolicy::fixed(GenerationOrder::kSPO);
  Augmentation augmentation = Augmentation::all_orders();
  std::string label = "okie";

  // Stable hash of the full configuration, used to name run directories.
  std::string config_hash() const;
};

// Fresh engines for one seeded run. stage1 and stage2 may alias when one
// model serves both stages.
struct BackendPair {
  std::shared_ptr<SeqBackend> stage1;
  std::shared_ptr<SeqBackend> stage2;
};

using BackendFactory = std::function<BackendPair(long seed)>;

struct SeedResult {
  long seed = 0;
  ScoreReport after_one_epoch;  // F1 measured right after epoch 1
  ScoreReport final_report;
};

struct ExperimentResult {
  std::string config_hash;
  double fraction = 0.0;
  std::string label;
  std::vector<SeedResult> per_seed;
  // Arithmetic means across seeds.
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double f1_star = 0.0;
};

// One experiment: per seed — sample the train corpus, build pairs,
// register anchors, fine-tune (scoring the eval corpus after epoch 1 and
// after the final epoch), then aggregate per-metric means across seeds.
// Artifacts land under runs_dir/<config-hash>/<seed>/{sample.jsonl,
// pairs.jsonl, report_epoch1.json, report_final.json} with the aggregate
// at runs_dir/<config-hash>/aggregate.json. A failing seed aborts the
// experiment; artifacts written so far stay on disk.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const BackendFactory& factory,
                                const std::vector<ExtractionExample>& train,
                                const std::vector<ExtractionExample>& eval,
                                const std::filesystem::path& runs_dir);

struct AblationRow {
  std::string name;
  double f1_star = 0.0;
  double f1 = 0.0;
};

struct AblationReport {
  std::vector<AblationRow> rows;
};

// The 2x2 grid {plain, anchored} x {fixed-order, all-orders} over one
// base configuration; emits one row per cell with F1* and F1 columns.
AblationReport run_ablation_grid(const ExperimentConfig& base,
                                 const BackendFactory& factory,
                                 const std::vector<ExtractionExample>& train,
                                 const std::vector<ExtractionExample>& eval,
                                 const std::filesystem::path& runs_dir);

std::string render_ablation_table(const AblationReport& report);
void write_ablation_json(const std::filesystem::path& path,
                         const AblationReport& report);

// Score-report JSON I/O (raw [0,1] metrics plus a one-decimal percent
// rendering block).
void write_score_report(const std::filesystem::path& path,
                        const ScoreReport& report);
ScoreReport read_score_report(const std::filesystem::path& path);

// Extraction records as canonical JSONL plus a diagnostics sidecar.
void write_extraction_records(const std::filesystem::path& path,
                              const std::vector<ExtractionRecord>& records);
void write_diagnostics_sidecar(const std::filesystem::path& path,
                               const std::vector<ExtractionRecord>& records);

}  // namespace okie

#endif  // OKIE_DATA_HARNESS_H_
