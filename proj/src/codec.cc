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

#include "okie/codec.h"

#include <map>
#include <optional>

#include "okie/error.h"
#include "okie/text.h"

namespace okie {

namespace {

constexpr const char* kPredicateClause = ". With predicate ";
constexpr const char* kStage1Separator = "; ";

}  // namespace

std::string SentinelId::render() const {
  return "<id_" + std::to_string(index) + ">";
}

EncodedInstance build_stage2_input(const Sentence& sentence,
                                   const std::vector<std::string>& predicates,
                                   const AnchorScheme& scheme,
                                   const std::vector<GenerationOrder>& orders) {
  if (predicates.empty()) {
    throw Error(Errc::kEmptyPredicates, "no predicates for sentence: " +
                                            sentence.text());
  }
  if (orders.size() != predicates.size() && orders.size() != 1) {
    throw Error(Errc::kPrecondition,
                "orders list must match the predicate count or broadcast "
                "a single order");
  }
  scheme.validate();

  EncodedInstance instance;
  instance.input_text = sentence.text();
  int next_id = 0;
  for (std::size_t i = 0; i < predicates.size(); ++i) {
    std::string predicate = trim(predicates[i]);
    if (predicate.empty()) {
      throw Error(Errc::kMalformedPredicate, "empty predicate");
    }
    if (contains_sentinel(predicate)) {
      throw Error(Errc::kMalformedPredicate,
                  "predicate contains a sentinel token: " + predicate);
    }
    GenerationOrder order = orders.size() == 1 ? orders[0] : orders[i];
    PredicateSlot slot;
    slot.predicate = predicate;
    slot.order = order;
    std::array<int, 3> ids{};
    for (int j = 0; j < 3; ++j) {
      slot.ids[j] = SentinelId{next_id};
      ids[j] = next_id;
      ++next_id;
    }
    instance.input_text += kPredicateClause;
    instance.input_text += predicate;
    instance.input_text += ", ";
    instance.input_text += render_group(ids, order, scheme);
    instance.predicate_slots.push_back(std::move(slot));
  }
  instance.sentinel_count = next_id;
  return instance;
}

std::string build_stage2_target(const std::vector<Triple>& triples,
                                const EncodedInstance& instance) {
  const auto& slots = instance.predicate_slots;
  if (triples.size() != slots.size()) {
    throw Error(Errc::kAlignmentError,
                "triple count " + std::to_string(triples.size()) +
                    " does not match slot count " +
                    std::to_string(slots.size()));
  }

  // Align by exact predicate string, ties broken by position.
  std::vector<const Triple*> by_slot(slots.size(), nullptr);
  for (const auto& triple : triples) {
    validate_triple(triple);
    std::string predicate = trim(triple.predicate);
    bool placed = false;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (by_slot[k] == nullptr && slots[k].predicate == predicate) {
        by_slot[k] = &triple;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw Error(Errc::kAlignmentError,
                  "triple predicate matches no unconsumed slot: " + predicate);
    }
  }

  std::string target;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    auto roles = order_roles(slots[k].order);
    for (int i = 0; i < 3; ++i) {
      if (!target.empty()) target += ' ';
      target += slots[k].ids[i].render();
      target += ' ';
      target += trim(triple_field(*by_slot[k], roles[i]));
    }
  }
  return target;
}

ParseResult parse_stage2_output(const std::string& output,
                                const EncodedInstance& instance) {
  ParseResult result;

  // Spans between consecutive sentinels, keyed by sentinel id. First
  // occurrence wins; later duplicates and out-of-range ids only warn.
  std::map<int, std::string> spans;
  auto hits = find_sentinels(output);
  for (std::size_t i = 0; i < hits.size(); ++i) {
    std::size_t span_end =
        i + 1 < hits.size() ? hits[i + 1].begin : output.size();
    std::string span =
        trim(std::string_view(output).substr(hits[i].end, span_end - hits[i].end));
    if (hits[i].id < 0 || hits[i].id >= instance.sentinel_count) {
      result.warnings.push_back(
          {-1, "sentinel <id_" + std::to_string(hits[i].id) +
                   "> outside instance range; span ignored"});
      continue;
    }
    if (!spans.emplace(hits[i].id, std::move(span)).second) {
      result.warnings.push_back(
          {-1, "duplicate sentinel <id_" + std::to_string(hits[i].id) +
                   ">; later span ignored"});
    }
  }

  for (std::size_t k = 0; k < instance.predicate_slots.size(); ++k) {
    const auto& slot = instance.predicate_slots[k];
    auto roles = order_roles(slot.order);
    Triple triple;
    std::optional<std::string> problem;
    for (int i = 0; i < 3 && !problem; ++i) {
      auto it = spans.find(slot.ids[i].index);
      if (it == spans.end()) {
        problem = "missing sentinel " + slot.ids[i].render();
      } else if (it->second.empty()) {
        problem = "empty span after " + slot.ids[i].render();
      } else {
        triple_field(triple, roles[i]) = it->second;
      }
    }
    if (problem) {
      result.warnings.push_back(
          {static_cast<int>(k), "slot " + std::to_string(k) + " (predicate '" +
                                    slot.predicate + "') incomplete: " +
                                    *problem});
    } else {
      result.triples.push_back(std::move(triple));
    }
  }
  return result;
}

std::pair<std::string, std::string> build_stage1_io(
    const Sentence& sentence, const std::vector<std::string>& predicates) {
  std::string target;
  for (const auto& predicate : predicates) {
    if (!target.empty()) target += kStage1Separator;
    target += trim(predicate);
  }
  return {sentence.text(), target};
}

std::vector<std::string> parse_stage1_output(const std::string& output) {
  std::vector<std::string> predicates;
  for (const auto& part : split(output, ';')) {
    std::string predicate = trim(part);
    if (predicate.empty()) continue;
    bool duplicate = false;
    for (const auto& seen : predicates) {
      if (seen == predicate) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) predicates.push_back(std::move(predicate));
  }
  return predicates;
}

}  // namespace okie
