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

#ifndef OKIE_MOCK_BACKEND_H_
#define OKIE_MOCK_BACKEND_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "okie/backend.h"
#include "okie/codec.h"
#include "okie/triple.h"

namespace okie {

// A deterministic oracle backend: its answers are exactly the codec
// applied to a gold corpus. Stage-1 inputs (a known sentence verbatim)
// yield the gold predicates joined by the stage-1 separator; stage-2
// inputs (a known sentence plus predicate clauses) yield the encoded
// gold triples.
//
// Stage-2 inputs are recognized by re-encoding: for the gold sentence
// prefixing the input, candidate encodings are rebuilt over the uniform
// orders (and each single predicate, for per-predicate mode) and matched
// byte-for-byte, so the emitted target follows the orders the caller
// actually asked for. Plain-mode groups carry no order information by
// construction, so they re-encode under the canonical SPO order — the
// behavior of a model whose plain training data was ordered SPO.
//
// Unknown inputs produce "" (and so exercise the decode-warning paths).
class MockOracleBackend : public SeqBackend {
 public:
  explicit MockOracleBackend(AnchorScheme scheme = AnchorScheme::anchored());

  // Registers a gold sentence. Predicates are derived from the triples
  // in first-occurrence order. Re-adding a sentence replaces its entry.
  void add_example(const std::string& sentence,
                   const std::vector<Triple>& triples);

  std::vector<std::string> generate(
      const std::vector<std::string>& inputs) override;

  // Training-free: returns a synthetic report and fires the epoch
  // callback once per configured epoch so harness hooks run end to end.
  TrainReport fine_tune(const std::vector<TrainingPair>& pairs,
                        const TrainConfig& config,
                        const EpochCallback& on_epoch_end = {}) override;

  int register_special_tokens(const std::vector<std::string>& tokens) override;

  std::string name() const override { return "mock"; }

  const std::set<std::string>& registered_tokens() const {
    return registered_tokens_;
  }
  std::size_t gold_size() const { return gold_.size(); }

 private:
  struct GoldEntry {
    std::vector<std::string> predicates;
    std::vector<Triple> triples;
  };

  std::string answer(const std::string& input) const;
  std::string answer_stage2(const std::string& sentence,
                            const GoldEntry& entry,
                            const std::string& input) const;

  AnchorScheme scheme_;
  std::map<std::string, GoldEntry> gold_;
  std::set<std::string> registered_tokens_;
};

}  // namespace okie

#endif  // OKIE_MOCK_BACKEND_H_
