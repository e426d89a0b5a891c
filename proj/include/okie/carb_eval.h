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
// CaRB-style tuple-match scoring. Tokens are compared slot-wise after
// normalization; per-sentence precision uses an exclusive one-to-one
// pred-gold assignment while recall takes each gold's best match. All
// metrics are carried in [0, 1] and rendered in percent only at report
// boundaries.

#ifndef OKIE_CARB_EVAL_H_
#define OKIE_CARB_EVAL_H_

#include <optional>
#include <string>
#include <vector>

#include "okie/triple.h"

namespace okie {

struct MatchParts {
  double precision_part = 0.0;  // matched pred tokens / total pred tokens
  double recall_part = 0.0;     // matched gold tokens / total gold tokens
};

// Slot-wise token match between one predicted and one gold triple.
// Tokens are lowercased with punctuation stripped at token edges; each
// slot is compared only against its corresponding slot (multiset
// intersection). Two token-less triples match vacuously as (1, 1); a
// token-less side against a non-empty one scores (0, 0).
MatchParts tuple_match(const Triple& pred, const Triple& gold);

struct MatchPair {
  int pred_index = 0;
  int gold_index = 0;
  double precision_part = 0.0;
};

struct SentenceScore {
  double precision = 0.0;
  double recall = 0.0;
  std::vector<MatchPair> matches;
};

// Precision: mean over preds of their part in the one-to-one assignment
// maximizing total precision_part (exact for grids up to 8x8, greedy
// beyond). Recall: mean over golds of the best recall_part against any
// pred. Empty golds and empty preds score (1, 1); empty preds against
// non-empty golds score (1, 0) — the vacuous precision carries zero
// weight in corpus aggregation.
SentenceScore score_sentence(const std::vector<Triple>& preds,
                             const std::vector<Triple>& golds);

struct PerSentenceEntry {
  std::string id;
  double precision = 0.0;
  double recall = 0.0;
  std::vector<MatchPair> matches;
};

enum class ReportLabel { kFinal, kAfterOneEpoch };

std::string report_label_name(ReportLabel label);

struct ScoreReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> f1_percent;
  ReportLabel label = ReportLabel::kFinal;
  std::vector<PerSentenceEntry> per_sentence;
};

struct ScoredRecord {
  std::string id;  // usually the sentence text
  std::vector<Triple> preds;
  std::vector<Triple> golds;
};

// Micro-averaged corpus score: precision weighted by pred counts, recall
// by gold counts, f1 from the aggregates. Throws Error(kEmptyCorpus) on
// an empty record stream.
ScoreReport score_corpus(const std::vector<ScoredRecord>& records);

// 100 * f1 / sota_full_data_f1, rounded to one decimal. Both arguments
// must share units (either both in [0, 1] or both percent). Throws
// Error(kDomainError) on a non-positive denominator.
double f1_percent(double f1, double sota_full_data_f1);

double f1_from(double precision, double recall);

}  // namespace okie

#endif  // OKIE_CARB_EVAL_H_
