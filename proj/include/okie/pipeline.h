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
// Two-stage extraction: stage 1 generates the sentence's predicates,
// stage 2 fills sentinel-marked subject/predicate/object spans for each
// predicate, optionally across all generation orders with voting.

#ifndef OKIE_PIPELINE_H_
#define OKIE_PIPELINE_H_

#include <string>
#include <vector>

#include "okie/anchor.h"
#include "okie/backend.h"
#include "okie/codec.h"
#include "okie/triple.h"

namespace okie {

// Either one fixed generation order, or all six orders aggregated by
// majority vote at the given threshold.
struct OrderPolicy {
  enum class Kind { kFixed, kAllOrdersVote };

  Kind kind = Kind::kFixed;
  GenerationOrder order = GenerationOrder::kSPO;
  double threshold = 0.5;

  static OrderPolicy fixed(GenerationOrder order);
  static OrderPolicy all_orders_vote(double threshold = 0.5);
};

struct ExtractConfig {
  AnchorScheme scheme = AnchorScheme::anchored();
  OrderPolicy policy = OrderPolicy::fixed(GenerationOrder::kSPO);
  // One encoded instance per predicate instead of all predicates in one
  // pass (the one-triple-at-a-time comparison mode).
  bool per_predicate = false;
};

// Per-sentence result. Diagnostics are first-class output: decode
// warnings, empty-predicate notes, and backend failures land here rather
// than in logs, so malformed-generation rates can be quantified.
struct ExtractionRecord {
  std::string sentence;
  std::vector<Triple> triples;
  std::vector<std::string> diagnostics;
};

// Stage 1 only: the backend's predicate generation, parsed, de-duplicated,
// order-preserving. Backend failures are rethrown with the sentence
// attached.
std::vector<std::string> extract_predicates(SeqBackend& stage1,
                                            const Sentence& sentence);

// Full two-stage extraction for one sentence. Sentences with zero
// extracted predicates return an empty record. Malformed generations
// never abort: they surface as diagnostics.
ExtractionRecord extract(SeqBackend& stage1, SeqBackend& stage2,
                         const Sentence& sentence, const ExtractConfig& config);

// Single-backend convenience: one engine serves both stages.
ExtractionRecord extract(SeqBackend& backend, const Sentence& sentence,
                         const ExtractConfig& config);

// Extraction over a corpus. Output order matches input order exactly;
// stage-1 calls are batched internally. Per-sentence failures are
// recorded in that record's diagnostics and never stop the run.
std::vector<ExtractionRecord> extract_corpus(SeqBackend& stage1,
                                             SeqBackend& stage2,
                                             const std::vector<Sentence>& sentences,
                                             const ExtractConfig& config);

std::vector<ExtractionRecord> extract_corpus(SeqBackend& backend,
                                             const std::vector<Sentence>& sentences,
                                             const ExtractConfig& config);

}  // namespace okie

#endif  // OKIE_PIPELINE_H_
