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

#include "okie/carb_eval.h"

#include <algorithm>
#include <map>

#include "okie/anchor.h"
#include "okie/error.h"
#include "okie/text.h"

namespace okie {

namespace {

// Grids up to this size get the exact assignment; larger ones fall back
// to a greedy pairing.
constexpr std::size_t kExactAssignmentLimit = 8;

int multiset_overlap(const std::vector<std::string>& a,
                     const std::vector<std::string>& b) {
  std::map<std::string, int> counts;
  for (const auto& token : a) counts[token] += 1;
  int overlap = 0;
  for (const auto& token : b) {
    auto it = counts.find(token);
    if (it != counts.end() && it->second > 0) {
      it->second -= 1;
      ++overlap;
    }
  }
  return overlap;
}

struct Assignment {
  double total = 0.0;
  std::vector<int> gold_for_pred;  // -1 when unassigned
};

// Exact maximum-total one-to-one assignment by subset DP over golds.
Assignment assign_exact(const std::vector<std::vector<double>>& parts) {
  std::size_t n_pred = parts.size();
  std::size_t n_gold = parts.empty() ? 0 : parts[0].size();
  std::size_t n_masks = std::size_t{1} << n_gold;

  constexpr double kUnreachable = -1.0;
  std::vector<std::vector<double>> best(n_pred + 1,
                                        std::vector<double>(n_masks, kUnreachable));
  // choice[i][mask]: gold assigned to pred i on the best path, -1 = skip.
  std::vector<std::vector<int>> choice(n_pred,
                                       std::vector<int>(n_masks, -1));
  best[0][0] = 0.0;
  for (std::size_t i = 0; i < n_pred; ++i) {
    for (std::size_t mask = 0; mask < n_masks; ++mask) {
      double current = best[i][mask];
      if (current == kUnreachable) continue;
      if (current > best[i + 1][mask]) {
        best[i + 1][mask] = current;  // pred i stays unassigned
        choice[i][mask] = -1;
      }
      for (std::size_t j = 0; j < n_gold; ++j) {
        if (mask & (std::size_t{1} << j)) continue;
        std::size_t next = mask | (std::size_t{1} << j);
        double value = current + parts[i][j];
        if (value > best[i + 1][next]) {
          best[i + 1][next] = value;
          choice[i][next] = static_cast<int>(j);
        }
      }
    }
  }

  std::size_t best_mask = 0;
  for (std::size_t mask = 0; mask < n_masks; ++mask) {
    if (best[n_pred][mask] > best[n_pred][best_mask]) best_mask = mask;
  }

  Assignment result;
  result.total = best[n_pred][best_mask];
  result.gold_for_pred.assign(n_pred, -1);
  std::size_t mask = best_mask;
  for (std::size_t i = n_pred; i-- > 0;) {
    int j = choice[i][mask];
    result.gold_for_pred[i] = j;
    if (j >= 0) mask &= ~(std::size_t{1} << j);
  }
  return result;
}

Assignment assign_greedy(const std::vector<std::vector<double>>& parts) {
  std::size_t n_pred = parts.size();
  std::size_t n_gold = parts.empty() ? 0 : parts[0].size();
  struct Cell {
    double value;
    std::size_t pred;
    std::size_t gold;
  };
  std::vector<Cell> cells;
  cells.reserve(n_pred * n_gold);
  for (std::size_t i = 0; i < n_pred; ++i) {
    for (std::size_t j = 0; j < n_gold; ++j) {
      cells.push_back({parts[i][j], i, j});
    }
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& a, const Cell& b) { return a.value > b.value; });

  Assignment result;
  result.gold_for_pred.assign(n_pred, -1);
  std::vector<bool> gold_used(n_gold, false);
  for (const auto& cell : cells) {
    if (cell.value <= 0.0) break;
    if (result.gold_for_pred[cell.pred] != -1 || gold_used[cell.gold]) continue;
    result.gold_for_pred[cell.pred] = static_cast<int>(cell.gold);
    gold_used[cell.gold] = true;
    result.total += cell.value;
  }
  return result;
}

}  // namespace

MatchParts tuple_match(const Triple& pred, const Triple& gold) {
  int matched = 0;
  int pred_total = 0;
  int gold_total = 0;
  for (auto role : kAllRoles) {
    auto pred_tokens = normalized_tokens(triple_field(pred, role));
    auto gold_tokens = normalized_tokens(triple_field(gold, role));
    matched += multiset_overlap(gold_tokens, pred_tokens);
    pred_total += static_cast<int>(pred_tokens.size());
    gold_total += static_cast<int>(gold_tokens.size());
  }
  if (pred_total == 0 && gold_total == 0) return {1.0, 1.0};
  if (pred_total == 0 || gold_total == 0) return {0.0, 0.0};
  return {static_cast<double>(matched) / pred_total,
          static_cast<double>(matched) / gold_total};
}

SentenceScore score_sentence(const std::vector<Triple>& preds,
                             const std::vector<Triple>& golds) {
  SentenceScore score;
  if (preds.empty() && golds.empty()) {
    score.precision = 1.0;
    score.recall = 1.0;
    return score;
  }
  if (preds.empty()) {
    score.precision = 1.0;  // vacuous; carries zero weight when aggregated
    score.recall = 0.0;
    return score;
  }
  if (golds.empty()) {
    score.precision = 0.0;
    score.recall = 1.0;  // vacuous
    return score;
  }

  std::vector<std::vector<double>> precision_parts(
      preds.size(), std::vector<double>(golds.size()));
  std::vector<double> best_recall(golds.size(), 0.0);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    for (std::size_t j = 0; j < golds.size(); ++j) {
      auto parts = tuple_match(preds[i], golds[j]);
      precision_parts[i][j] = parts.precision_part;
      best_recall[j] = std::max(best_recall[j], parts.recall_part);
    }
  }

  Assignment assignment =
      preds.size() <= kExactAssignmentLimit &&
              golds.size() <= kExactAssignmentLimit
          ? assign_exact(precision_parts)
          : assign_greedy(precision_parts);

  score.precision = assignment.total / static_cast<double>(preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    int j = assignment.gold_for_pred[i];
    if (j >= 0 && precision_parts[i][j] > 0.0) {
      score.matches.push_back(
          {static_cast<int>(i), j, precision_parts[i][j]});
    }
  }
  double recall_sum = 0.0;
  for (double r : best_recall) recall_sum += r;
  score.recall = recall_sum / static_cast<double>(golds.size());
  return score;
}

std::string report_label_name(ReportLabel label) {
  return label == ReportLabel::kFinal ? "final" : "after_one_epoch";
}

ScoreReport score_corpus(const std::vector<ScoredRecord>& records) {
  if (records.empty()) {
    throw Error(Errc::kEmptyCorpus, "no records to score");
  }
  ScoreReport report;
  double precision_weighted = 0.0;
  double recall_weighted = 0.0;
  std::size_t total_preds = 0;
  std::size_t total_golds = 0;
  for (const auto& record : records) {
    auto score = score_sentence(record.preds, record.golds);
    precision_weighted += score.precision * static_cast<double>(record.preds.size());
    recall_weighted += score.recall * static_cast<double>(record.golds.size());
    total_preds += record.preds.size();
    total_golds += record.golds.size();
    report.per_sentence.push_back(
        {record.id, score.precision, score.recall, std::move(score.matches)});
  }
  report.precision =
      total_preds > 0 ? precision_weighted / static_cast<double>(total_preds)
                      : (total_golds == 0 ? 1.0 : 0.0);
  report.recall = total_golds > 0
                      ? recall_weighted / static_cast<double>(total_golds)
                      : 1.0;
  report.f1 = f1_from(report.precision, report.recall);
  return report;
}

double f1_percent(double f1, double sota_full_data_f1) {
  if (sota_full_data_f1 <= 0.0) {
    throw Error(Errc::kDomainError,
                "the full-data reference F1 must be positive");
  }
  return round1(100.0 * f1 / sota_full_data_f1);
}

double f1_from(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace okie
