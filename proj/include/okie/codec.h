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
// The span-infilling codec: transforms (sentence, predicates, triples)
// into input/target string pairs whose corrupted spans are the triple
// fields, and parses generated output back into triples.
//
// Builders (training side) fail hard; parse_stage2_output (generation
// side) never throws and degrades to partial results plus DecodeWarnings.

#ifndef OKIE_CODEC_H_
#define OKIE_CODEC_H_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "okie/anchor.h"
#include "okie/triple.h"

namespace okie {

// A span placeholder `<id_K>`. Within one EncodedInstance, indices start
// at 0, are consecutive, and each appears exactly once in the input and
// exactly once in a well-formed target.
struct SentinelId {
  int index = 0;

  std::string render() const;

  bool operator==(const SentinelId&) const = default;
};

// One predicate's sentinel allocation inside an encoded instance.
struct PredicateSlot {
  std::string predicate;
  std::array<SentinelId, 3> ids;
  GenerationOrder order = GenerationOrder::kSPO;
};

// The encoded task pair for one sentence. target_text is empty until a
// training target has been attached (inference instances never get one).
struct EncodedInstance {
  std::string input_text;
  std::string target_text;
  int sentinel_count = 0;
  std::vector<PredicateSlot> predicate_slots;
};

// A non-fatal problem met while decoding generated text. slot_index is
// the offending slot, or -1 for problems not tied to a slot.
struct DecodeWarning {
  int slot_index = -1;
  std::string message;
};

struct ParseResult {
  std::vector<Triple> triples;
  std::vector<DecodeWarning> warnings;
};

// Builds the stage-2 input: the sentence followed, for each predicate
// with a fresh sentinel group, by ". With predicate {p}, {group}".
// Sentinel ids are allocated left to right from 0. `orders` must have one
// entry per predicate, or exactly one entry broadcast to all.
// Throws Error(kEmptyPredicates) on an empty predicate list and
// Error(kMalformedPredicate) on a predicate that is empty or contains a
// sentinel token.
EncodedInstance build_stage2_input(const Sentence& sentence,
                                   const std::vector<std::string>& predicates,
                                   const AnchorScheme& scheme,
                                   const std::vector<GenerationOrder>& orders);

// Builds the training target for an instance: per slot, the slot's
// sentinels interleaved with the aligned triple's fields permuted by the
// slot's order, all separated by single spaces. Triples are aligned to
// slots by exact predicate match, ties broken by position.
// Throws Error(kAlignmentError) on a count mismatch or an unmatched
// triple.
std::string build_stage2_target(const std::vector<Triple>& triples,
                                const EncodedInstance& instance);

// Inverse of build_stage2_target over possibly malformed generated text.
// Splits the output on sentinel tokens and assigns each inter-sentinel
// span to the role dictated by its slot's order. Slots with a missing
// sentinel, an empty span, or only duplicate/out-of-range sentinels yield
// a DecodeWarning instead of a triple; the call never throws.
ParseResult parse_stage2_output(const std::string& output,
                                const EncodedInstance& instance);

// Stage-1 task pair: input is the sentence itself, target is the
// predicates joined by "; ". An empty predicate list gives an empty
// target.
std::pair<std::string, std::string> build_stage1_io(
    const Sentence& sentence, const std::vector<std::string>& predicates);

// Splits generated stage-1 text on ';', trims, drops empties, and
// de-duplicates preserving first occurrence.
std::vector<std::string> parse_stage1_output(const std::string& output);

}  // namespace okie

#endif  // OKIE_CODEC_H_
