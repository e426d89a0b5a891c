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

#include "okie/pipeline.h"

#include <map>

#include "okie/error.h"

namespace okie {

namespace {

// One stage-2 pass under a single uniform order; appends decode warnings
// to diagnostics.
std::vector<Triple> run_stage2(SeqBackend& stage2, const Sentence& sentence,
                               const std::vector<std::string>& predicates,
                               const ExtractConfig& config,
                               GenerationOrder order,
                               std::vector<std::string>& diagnostics) {
  std::vector<EncodedInstance> instances;
  if (config.per_predicate) {
    for (const auto& predicate : predicates) {
      instances.push_back(
          build_stage2_input(sentence, {predicate}, config.scheme, {order}));
    }
  } else {
    instances.push_back(
        build_stage2_input(sentence, predicates, config.scheme, {order}));
  }

  std::vector<std::string> inputs;
  inputs.reserve(instances.size());
  for (const auto& instance : instances) inputs.push_back(instance.input_text);
  auto outputs = stage2.generate(inputs);
  if (outputs.size() != inputs.size()) {
    throw Error(Errc::kBackendCapability,
                "backend broke batch length preservation");
  }

  std::vector<Triple> triples;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto parsed = parse_stage2_output(outputs[i], instances[i]);
    for (auto& triple : parsed.triples) triples.push_back(std::move(triple));
    for (const auto& warning : parsed.warnings) {
      diagnostics.push_back("order " + order_name(order) + ": " +
                            warning.message);
    }
  }
  return triples;
}

// Stage 2 under the configured policy, given already-extracted
// predicates.
void fill_triples(SeqBackend& stage2, const Sentence& sentence,
                  const std::vector<std::string>& predicates,
                  const ExtractConfig& config, ExtractionRecord& record) {
  if (predicates.empty()) {
    record.diagnostics.push_back("no predicates extracted");
    return;
  }
  if (config.policy.kind == OrderPolicy::Kind::kFixed) {
    record.triples = run_stage2(stage2, sentence, predicates, config,
                                config.policy.order, record.diagnostics);
    return;
  }
  std::map<GenerationOrder, std::vector<Triple>> per_order;
  for (auto order : kAllOrders) {
    per_order[order] = run_stage2(stage2, sentence, predicates, config, order,
                                  record.diagnostics);
  }
  record.triples = majority_vote(per_order, config.policy.threshold);
}

}  // namespace

OrderPolicy OrderPolicy::fixed(GenerationOrder order) {
  OrderPolicy policy;
  policy.kind = Kind::kFixed;
  policy.order = order;
  return policy;
}

OrderPolicy OrderPolicy::all_orders_vote(double threshold) {
  OrderPolicy policy;
  policy.kind = Kind::kAllOrdersVote;
  policy.threshold = threshold;
  return policy;
}

std::vector<std::string> extract_predicates(SeqBackend& stage1,
                                            const Sentence& sentence) {
  std::vector<std::string> outputs;
  try {
    outputs = stage1.generate({sentence.text()});
  } catch (const std::exception& e) {
    throw Error(Errc::kBackendCapability,
                std::string(e.what()) + " [sentence: " + sentence.text() + "]");
  }
  if (outputs.size() != 1) {
    throw Error(Errc::kBackendCapability,
                "backend broke batch length preservation");
  }
  return parse_stage1_output(outputs[0]);
}

ExtractionRecord extract(SeqBackend& stage1, SeqBackend& stage2,
                         const Sentence& sentence,
                         const ExtractConfig& config) {
  ExtractionRecord record;
  record.sentence = sentence.text();
  fill_triples(stage2, sentence, extract_predicates(stage1, sentence), config,
               record);
  return record;
}

ExtractionRecord extract(SeqBackend& backend, const Sentence& sentence,
                         const ExtractConfig& config) {
  return extract(backend, backend, sentence, config);
}

std::vector<ExtractionRecord> extract_corpus(SeqBackend& stage1,
                                             SeqBackend& stage2,
                                             const std::vector<Sentence>& sentences,
                                             const ExtractConfig& config) {
  std::vector<ExtractionRecord> records(sentences.size());
  if (sentences.empty()) return records;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    records[i].sentence = sentences[i].text();
  }

  // All stage-1 requests go out as one batch; stage-2 runs per sentence.
  std::vector<std::string> stage1_inputs;
  stage1_inputs.reserve(sentences.size());
  for (const auto& sentence : sentences) stage1_inputs.push_back(sentence.text());

  std::vector<std::string> stage1_outputs;
  try {
    stage1_outputs = stage1.generate(stage1_inputs);
    if (stage1_outputs.size() != stage1_inputs.size()) {
      throw Error(Errc::kBackendCapability,
                  "backend broke batch length preservation");
    }
  } catch (const std::exception& e) {
    for (auto& record : records) {
      record.diagnostics.push_back(std::string("failed: ") + e.what());
    }
    return records;
  }

  for (std::size_t i = 0; i < sentences.size(); ++i) {
    try {
      fill_triples(stage2, sentences[i],
                   parse_stage1_output(stage1_outputs[i]), config, records[i]);
    } catch (const std::exception& e) {
      records[i].triples.clear();
      records[i].diagnostics.push_back(std::string("failed: ") + e.what());
    }
  }
  return records;
}

std::vector<ExtractionRecord> extract_corpus(SeqBackend& backend,
                                             const std::vector<Sentence>& sentences,
                                             const ExtractConfig& config) {
  return extract_corpus(backend, backend, sentences, config);
}

}  // namespace okie
