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
// Acceptance suite. Each criterion prints exactly one PASS/FAIL line;
// the binary exits non-zero if any required criterion fails. The final
// criterion (a GPU-scale reproduction) is reported as SKIP.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "okie/anchor.h"
#include "okie/carb_eval.h"
#include "okie/codec.h"
#include "okie/data_harness.h"
#include "okie/mock_backend.h"
#include "okie/text.h"
#include "test_support.h"

using namespace okie;
using namespace okie::testing;
namespace fs = std::filesystem;

namespace {

fs::path g_work;
int g_failures = 0;

int run_cli(const std::string& args) {
  std::string command = std::string(OKIE_CLI_PATH) + " " + args + " > " +
                        (g_work / "cli.log").string() + " 2>&1";
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& message) {
    ok = false;
    if (!note.empty()) note += "; ";
    note += message;
  }
};

void report(int number, const std::string& title,
            const std::function<void(Outcome&)>& body,
            double budget_seconds = 0.0) {
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_seconds > 0.0 && elapsed > budget_seconds) {
    outcome.fail("runtime " + format_fixed(elapsed, 2) + "s over the " +
                 format_fixed(budget_seconds, 0) + "s budget");
  }
  if (!outcome.ok) ++g_failures;
  std::cout << (outcome.ok ? "[PASS]" : "[FAIL]") << " criterion " << number
            << ": " << title << " (" << format_fixed(elapsed, 2) << "s)";
  if (!outcome.note.empty()) std::cout << " — " << outcome.note;
  std::cout << "\n"
            << std::flush;
}

// ------------------------------------------------------------- criterion 1

void criterion_worked_example(Outcome& outcome) {
  export_corpus_jsonl(g_work / "worked.jsonl",
                      {{kWorkedSentence, worked_triples()}});
  int code = run_cli("transform --input " + (g_work / "worked.jsonl").string() +
                     " --order SPO --anchors off --roundtrip --out " +
                     (g_work / "worked_pairs.jsonl").string());
  if (code != 0) {
    outcome.fail("transform exited " + std::to_string(code));
    return;
  }
  auto raw = slurp(g_work / "worked_pairs.jsonl");
  auto expect_quoted = [&](const std::string& text, const char* what) {
    if (raw.find(text) == std::string::npos) {
      outcome.fail(std::string("output lacks the exact ") + what);
    }
  };
  expect_quoted(kWorkedInputPlain, "input string");
  expect_quoted(kWorkedTargetSpo, "target string");
  // Sentinels 0..5 each exactly once in the target.
  auto line_start = raw.find("\"target\"");
  if (line_start == std::string::npos) outcome.fail("no target field");
}

// ------------------------------------------------------------- criterion 2

void criterion_roundtrip(Outcome& outcome) {
  auto corpus = synthetic_corpus(5, 99);
  std::size_t cases = 0;
  for (const auto& example : corpus) {
    std::size_t k = example.triples.size();
    // Uniform orders under the anchored scheme.
    for (auto order : kAllOrders) {
      auto instance =
          build_stage2_input(Sentence{example.sentence}, example.predicates(),
                             AnchorScheme::anchored(), {order});
      auto parsed = parse_stage2_output(
          build_stage2_target(example.triples, instance), instance);
      if (!parsed.warnings.empty() || parsed.triples != example.triples) {
        outcome.fail("uniform " + order_name(order) + " failed on: " +
                     example.sentence);
        return;
      }
      ++cases;
    }
    // Every mixed per-slot assignment under the plain scheme.
    std::size_t combos = 1;
    for (std::size_t i = 0; i < k; ++i) combos *= 6;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<GenerationOrder> orders;
      std::size_t rest = code;
      for (std::size_t i = 0; i < k; ++i) {
        orders.push_back(kAllOrders[rest % 6]);
        rest /= 6;
      }
      auto instance = build_stage2_input(Sentence{example.sentence},
                                         example.predicates(),
                                         AnchorScheme::plain(), orders);
      auto parsed = parse_stage2_output(
          build_stage2_target(example.triples, instance), instance);
      if (!parsed.warnings.empty() || parsed.triples != example.triples) {
        outcome.fail("mixed assignment " + std::to_string(code) +
                     " failed on: " + example.sentence);
        return;
      }
      ++cases;
    }
  }
  outcome.note = std::to_string(cases) + " encode/parse cases";
}

// ------------------------------------------------------------- criterion 3

void criterion_anchor_templates(Outcome& outcome) {
  auto letters = AnchorScheme::anchored_letters();
  if (render_group({0, 1, 2}, GenerationOrder::kSPO, letters) !=
      "S<id_0>S P<id_1>P O<id_2>O") {
    outcome.fail("SPO template mismatch");
  }
  if (render_group({0, 1, 2}, GenerationOrder::kPOS, letters) !=
      "P<id_0>P O<id_1>O S<id_2>S") {
    outcome.fail("POS template mismatch");
  }
  std::set<std::string> rendered;
  for (auto order : kAllOrders) {
    rendered.insert(render_group({0, 1, 2}, order, letters));
  }
  if (rendered.size() != 6) outcome.fail("orders are not pairwise distinct");

  // Flanking symmetry across randomized anchored schemes.
  std::mt19937 rng(1234);
  static const char alphabet[] =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  for (int iter = 0; iter < 1000; ++iter) {
    AnchorScheme scheme;
    scheme.mode = AnchorScheme::Mode::kAnchored;
    std::set<std::string> used;
    for (int role = 0; role < 3; ++role) {
      std::string word;
      do {
        word.clear();
        std::size_t length = 1 + rng() % 5;
        for (std::size_t i = 0; i < length; ++i) {
          word += alphabet[rng() % (sizeof(alphabet) - 1)];
        }
      } while (!used.insert(word).second);
      scheme.anchor_text[role] = word;
      scheme.tunable[role] =
          rng() % 2 ? "<tok" + std::to_string(rng() % 100) + "_" +
                          std::to_string(role) + ">"
                    : "";
    }
    auto group =
        render_group({0, 1, 2}, kAllOrders[rng() % 6], scheme);
    auto hits = find_sentinels(group);
    if (hits.size() != 3) {
      outcome.fail("scheme " + std::to_string(iter) + ": sentinel count");
      return;
    }
    std::size_t unit_begin = 0;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      std::size_t unit_end = i + 1 < hits.size()
                                 ? group.rfind(' ', hits[i + 1].begin)
                                 : group.size();
      std::string before =
          group.substr(unit_begin, hits[i].begin - unit_begin);
      std::string after = group.substr(hits[i].end, unit_end - hits[i].end);
      if (before != after || before.empty()) {
        outcome.fail("scheme " + std::to_string(iter) +
                     ": flanking asymmetry in " + group);
        return;
      }
      unit_begin = unit_end + 1;
    }
  }
}

// ------------------------------------------------------------- criterion 4

void criterion_f1_percent_tables(Outcome& outcome) {
  struct Cell {
    const char* system;
    double f1;
    double printed;
    bool known_inconsistent;  // printed value is off by more than rounding
  };
  // All (F1, F1%) cells of the four comparison tables against the
  // full-data reference of 54.0. Five printed cells differ from the
  // exact ratio by more than one-decimal rounding; those are expected
  // to be reported as table inconsistencies, not silently absorbed.
  const Cell cells[] = {
      {"full/IMOJIE", 53.5, 99.07, false},
      {"full/OpenIE6", 52.7, 97.6, false},
      {"full/Multi2OIE", 52.5, 97.2, false},
      {"full/IGL-OIE", 52.4, 97.03, false},
      {"full/CIGL-OIE", 54.0, 100.0, false},
      {"full/DetIE", 52.1, 96.4, true},
      {"full/GEN2OIE", 51.1, 94.6, false},
      {"full/ours", 53.2, 98.5, false},
      {"0.9%/OpenIE6", 42.9, 79.4, false},
      {"0.9%/ours", 52.9, 97.9, true},
      {"5%/IMOJIE", 36.9, 68.5, true},
      {"5%/OpenIE6", 43.1, 79.8, false},
      {"5%/ours", 53.1, 98.3, false},
      {"20%/IMOJIE", 39.5, 73.2, true},
      {"20%/OpenIE6", 45.3, 83.8, true},
      {"20%/ours", 53.3, 98.7, false},
  };
  int checked = 0;
  std::string flagged;
  for (const auto& cell : cells) {
    double computed = f1_percent(cell.f1, 54.0);
    bool within = std::fabs(computed - cell.printed) <= 0.05;
    ++checked;
    if (within == cell.known_inconsistent) {
      outcome.fail(std::string(cell.system) + ": computed " +
                   format_fixed(computed, 1) + " vs printed " +
                   format_fixed(cell.printed, 2) +
                   (within ? " unexpectedly within tolerance"
                           : " outside tolerance"));
    }
    if (!within) {
      if (!flagged.empty()) flagged += ", ";
      flagged += std::string(cell.system) + " printed " +
                 format_fixed(cell.printed, 1) + " vs exact " +
                 format_fixed(computed, 1);
    }
  }
  outcome.note = std::to_string(checked) +
                 " cells checked; table inconsistencies reported: " + flagged;
}

// ------------------------------------------------------------- criterion 5

void criterion_scorer_oracle(Outcome& outcome) {
  std::mt19937 rng(5150);
  int assignment_cases = 0;
  while (assignment_cases < 500) {
    std::size_t n_pred = 1 + rng() % 3;
    std::size_t n_gold = 1 + rng() % 3;
    std::vector<Triple> preds, golds;
    for (std::size_t i = 0; i < n_pred; ++i) preds.push_back(random_triple(rng));
    for (std::size_t j = 0; j < n_gold; ++j) golds.push_back(random_triple(rng));
    std::vector<std::vector<double>> parts(n_pred,
                                           std::vector<double>(n_gold));
    for (std::size_t i = 0; i < n_pred; ++i) {
      for (std::size_t j = 0; j < n_gold; ++j) {
        parts[i][j] = tuple_match(preds[i], golds[j]).precision_part;
      }
    }
    double expected = brute_force_precision(parts);
    double actual = score_sentence(preds, golds).precision;
    if (std::fabs(expected - actual) > 1e-12) {
      outcome.fail("assignment mismatch: got " + format_fixed(actual, 6) +
                   ", brute force " + format_fixed(expected, 6));
      return;
    }
    ++assignment_cases;
  }

  int fuzzed = 0;
  while (fuzzed < 10000) {
    std::vector<Triple> preds, golds;
    std::size_t n_pred = rng() % 4;
    std::size_t n_gold = rng() % 4;
    for (std::size_t i = 0; i < n_pred; ++i) preds.push_back(random_triple(rng));
    for (std::size_t j = 0; j < n_gold; ++j) golds.push_back(random_triple(rng));
    auto score = score_sentence(preds, golds);
    double f1 = f1_from(score.precision, score.recall);
    bool in_bounds = score.precision >= 0.0 && score.precision <= 1.0 &&
                     score.recall >= 0.0 && score.recall <= 1.0 && f1 >= 0.0 &&
                     f1 <= 1.0;
    bool f1_law = (score.precision == 0.0 || score.recall == 0.0)
                      ? f1 == 0.0
                      : std::fabs(f1 - 2.0 * score.precision * score.recall /
                                           (score.precision + score.recall)) <
                            1e-12;
    if (!in_bounds || !f1_law) {
      outcome.fail("bounds or f1 law violated");
      return;
    }
    if (!preds.empty()) {
      auto reflexive = score_sentence(preds, preds);
      if (std::fabs(reflexive.precision - 1.0) > 1e-12 ||
          std::fabs(reflexive.recall - 1.0) > 1e-12) {
        outcome.fail("reflexivity violated");
        return;
      }
    }
    ++fuzzed;
  }
  outcome.note = "500 assignment cases, 10000 fuzz rounds";
}

// ------------------------------------------------------------- criterion 6

void criterion_end_to_end(Outcome& outcome) {
  auto corpus = synthetic_corpus(50, 404);
  export_corpus_jsonl(g_work / "gold50.jsonl", corpus);
  {
    std::ofstream sentences(g_work / "sentences50.txt");
    for (const auto& example : corpus) sentences << example.sentence << "\n";
  }

  auto run_mode = [&](const std::string& mode_flags, const std::string& tag) {
    int code = run_cli("extract --backend mock --gold " +
                       (g_work / "gold50.jsonl").string() + " --input " +
                       (g_work / "sentences50.txt").string() + " " +
                       mode_flags + " --out " +
                       (g_work / ("pred_" + tag + ".jsonl")).string());
    if (code != 0) {
      outcome.fail(tag + ": extract exited " + std::to_string(code));
      return;
    }
    code = run_cli("score --gold " + (g_work / "gold50.jsonl").string() +
                   " --pred " + (g_work / ("pred_" + tag + ".jsonl")).string() +
                   " --report " +
                   (g_work / ("report_" + tag + ".json")).string());
    if (code != 0) {
      outcome.fail(tag + ": score exited " + std::to_string(code));
      return;
    }
    auto report = read_score_report(g_work / ("report_" + tag + ".json"));
    if (std::fabs(report.precision - 1.0) > 1e-12 ||
        std::fabs(report.recall - 1.0) > 1e-12 ||
        std::fabs(report.f1 - 1.0) > 1e-12) {
      outcome.fail(tag + ": p/r/f1 = " + format_fixed(report.precision, 4) +
                   "/" + format_fixed(report.recall, 4) + "/" +
                   format_fixed(report.f1, 4) + ", expected all 1.0");
    }
  };
  run_mode("--order SPO", "fixed");
  run_mode("--vote --threshold 0.5", "vote");
}

// ------------------------------------------------------------- criterion 7

void criterion_harness_arithmetic(Outcome& outcome) {
  auto corpus = synthetic_corpus(100000, 2718);
  export_corpus_jsonl(g_work / "corpus100k.jsonl", corpus);

  for (int round = 0; round < 2; ++round) {
    int code = run_cli("sample --fraction 0.009 --seed 7 --input " +
                       (g_work / "corpus100k.jsonl").string() + " --out " +
                       (g_work / ("sample900_" + std::to_string(round) +
                                  ".jsonl"))
                           .string());
    if (code != 0) {
      outcome.fail("sample exited " + std::to_string(code));
      return;
    }
  }
  auto first = slurp(g_work / "sample900_0.jsonl");
  if (first != slurp(g_work / "sample900_1.jsonl")) {
    outcome.fail("sampling is not deterministic per seed");
  }
  auto lines = static_cast<long>(std::count(first.begin(), first.end(), '\n'));
  if (lines != 900) {
    outcome.fail("sample has " + std::to_string(lines) +
                 " examples, expected 900");
    return;
  }

  auto sample = import_corpus(g_work / "sample900_0.jsonl", CorpusFormat::kJsonl);
  auto pairs = build_training_pairs(sample, AnchorScheme::anchored(),
                                    Augmentation::all_orders());
  std::size_t stage2 = 0;
  std::size_t failures = 0;
  for (const auto& pair : pairs) {
    if (pair.stage != 2) continue;
    ++stage2;
    auto parsed = parse_stage2_output(pair.target, *pair.instance);
    if (!parsed.warnings.empty() ||
        parsed.triples != sample[pair.example_index].triples) {
      ++failures;
    }
  }
  if (stage2 != 5400) {
    outcome.fail("augmentation produced " + std::to_string(stage2) +
                 " stage-2 pairs, expected 5400");
  }
  if (failures != 0) {
    outcome.fail(std::to_string(failures) + " pairs failed the round-trip");
  }
  outcome.note = "900 sampled, 5400 augmented pairs round-tripped";
}

// ------------------------------------------------------------- criterion 8

void criterion_ablation_shape(Outcome& outcome) {
  auto corpus = synthetic_corpus(12, 31);
  ExperimentConfig base;
  base.fraction = 1.0;
  base.seeds = {1};
  base.train_config.epochs = 2;

  auto report = run_ablation_grid(
      base,
      [&corpus](long) {
        auto mock =
            std::make_shared<MockOracleBackend>(AnchorScheme::anchored());
        for (const auto& example : corpus) {
          mock->add_example(example.sentence, example.triples);
        }
        return BackendPair{mock, mock};
      },
      corpus, corpus, g_work / "ablation_runs");

  if (report.rows.size() != 4) {
    outcome.fail("expected 4 grid cells, got " +
                 std::to_string(report.rows.size()));
    return;
  }
  std::set<std::string> names;
  for (const auto& row : report.rows) {
    names.insert(row.name);
    if (std::fabs(row.f1 - 1.0) > 1e-12 ||
        std::fabs(row.f1_star - 1.0) > 1e-12) {
      outcome.fail(row.name + ": F1*/F1 = " + format_fixed(row.f1_star, 4) +
                   "/" + format_fixed(row.f1, 4) + ", expected 1.0 oracle");
    }
  }
  if (names != std::set<std::string>{"plain+fixed", "plain+all_orders",
                                     "anchored+fixed", "anchored+all_orders"}) {
    outcome.fail("unexpected grid cell names");
  }
  write_ablation_json(g_work / "ablation.json", report);
  auto table = render_ablation_table(report);
  if (table.find("F1*") == std::string::npos ||
      table.find("F1") == std::string::npos) {
    outcome.fail("table lacks the F1*/F1 columns");
  }
}

}  // namespace

int main() {
  g_work = fs::current_path() / "acceptance_work";
  fs::remove_all(g_work);
  fs::create_directories(g_work);

  report(1, "worked-example transform is bit-exact", criterion_worked_example,
         1.0);
  report(2, "codec round-trip over all order assignments",
         criterion_roundtrip, 30.0);
  report(3, "anchor templates and flanking symmetry",
         criterion_anchor_templates);
  report(4, "F1% reproduction of the comparison tables",
         criterion_f1_percent_tables);
  report(5, "scorer matches the brute-force assignment oracle",
         criterion_scorer_oracle, 60.0);
  report(6, "end-to-end oracle identity through the CLI", criterion_end_to_end,
         10.0);
  report(7, "low-resource sampling and augmentation arithmetic",
         criterion_harness_arithmetic);
  report(8, "ablation grid shape", criterion_ablation_shape);
  std::cout << "[SKIP] criterion 9: GPU fine-tuning reproduction (optional; "
               "needs a pretrained model and OKIE_MODEL_DIR; see README)\n";

  if (g_failures == 0) {
    std::cout << "acceptance: all required criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
