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

#include "okie/mock_backend.h"

#include <algorithm>

#include "okie/error.h"
#include "okie/text.h"

namespace okie {

MockOracleBackend::MockOracleBackend(AnchorScheme scheme)
    : scheme_(std::move(scheme)) {
  scheme_.validate();
}

void MockOracleBackend::add_example(const std::string& sentence,
                                    const std::vector<Triple>& triples) {
  GoldEntry entry;
  entry.triples = triples;
  for (const auto& triple : triples) {
    validate_triple(triple);
    std::string predicate = trim(triple.predicate);
    if (std::find(entry.predicates.begin(), entry.predicates.end(),
                  predicate) == entry.predicates.end()) {
      entry.predicates.push_back(std::move(predicate));
    }
  }
  gold_[sentence] = std::move(entry);
}

std::vector<std::string> MockOracleBackend::generate(
    const std::vector<std::string>& inputs) {
  std::vector<std::string> outputs;
  outputs.reserve(inputs.size());
  for (const auto& input : inputs) outputs.push_back(answer(input));
  return outputs;
}

std::string MockOracleBackend::answer(const std::string& input) const {
  // Stage 1: the input is a known sentence verbatim.
  auto exact = gold_.find(input);
  if (exact != gold_.end()) {
    std::string target;
    for (const auto& predicate : exact->second.predicates) {
      if (!target.empty()) target += "; ";
      target += predicate;
    }
    return target;
  }

  // Stage 2: the longest gold sentence that strictly prefixes the input.
  const std::string* sentence = nullptr;
  const GoldEntry* entry = nullptr;
  for (const auto& [gold_sentence, gold_entry] : gold_) {
    if (input.size() > gold_sentence.size() &&
        input.compare(0, gold_sentence.size(), gold_sentence) == 0) {
      if (sentence == nullptr || gold_sentence.size() > sentence->size()) {
        sentence = &gold_sentence;
        entry = &gold_entry;
      }
    }
  }
  if (sentence == nullptr) return "";
  return answer_stage2(*sentence, *entry, input);
}

std::string MockOracleBackend::answer_stage2(const std::string& sentence,
                                             const GoldEntry& entry,
                                             const std::string& input) const {
  // Recover the encoding the caller used by re-encoding candidates and
  // matching byte for byte: all-predicates-in-one-pass and per-predicate
  // instances, under each uniform order, under the configured scheme and
  // the plain fallback. Plain groups carry no order information, so a
  // plain match settles on the canonical SPO candidate first.
  std::vector<AnchorScheme> schemes = {scheme_};
  if (scheme_.anchored_mode()) schemes.push_back(AnchorScheme::plain());

  std::vector<std::vector<std::string>> predicate_lists;
  predicate_lists.push_back(entry.predicates);
  if (entry.predicates.size() > 1) {
    for (const auto& predicate : entry.predicates) {
      predicate_lists.push_back({predicate});
    }
  }

  Sentence carrier{sentence};
  for (const auto& scheme : schemes) {
    for (const auto& predicates : predicate_lists) {
      for (auto order : kAllOrders) {
        EncodedInstance candidate;
        try {
          candidate = build_stage2_input(carrier, predicates, scheme, {order});
        } catch (const Error&) {
          continue;
        }
        if (candidate.input_text != input) continue;

        // First unconsumed gold triple per slot predicate; slots whose
        // predicate has no triple left are skipped rather than failing,
        // mirroring a model that simply fills what it can.
        std::vector<bool> consumed(entry.triples.size(), false);
        std::vector<Triple> aligned;
        std::vector<PredicateSlot> slots;
        for (const auto& slot : candidate.predicate_slots) {
          for (std::size_t t = 0; t < entry.triples.size(); ++t) {
            if (!consumed[t] &&
                trim(entry.triples[t].predicate) == slot.predicate) {
              consumed[t] = true;
              aligned.push_back(entry.triples[t]);
              slots.push_back(slot);
              break;
            }
          }
        }
        EncodedInstance filled = candidate;
        filled.predicate_slots = std::move(slots);
        return build_stage2_target(aligned, filled);
      }
    }
  }
  return "";
}

TrainReport MockOracleBackend::fine_tune(const std::vector<TrainingPair>& pairs,
                                         const TrainConfig& config,
                                         const EpochCallback& on_epoch_end) {
  // The oracle never learns; the report and callbacks exist so that
  // harness plumbing runs end to end.
  TrainReport report;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    report.epochs_completed = epoch;
    report.pairs_seen += static_cast<long>(pairs.size());
    if (on_epoch_end) on_epoch_end(epoch);
  }
  report.final_loss = 0.0;
  return report;
}

int MockOracleBackend::register_special_tokens(
    const std::vector<std::string>& tokens) {
  for (const auto& token : tokens) registered_tokens_.insert(token);
  return static_cast<int>(registered_tokens_.size());
}

}  // namespace okie
