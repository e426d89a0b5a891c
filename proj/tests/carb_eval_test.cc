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

#include <cmath>
#include <random>

#include "doctest.h"
#include "okie/error.h"
#include "test_support.h"

using namespace okie;
using namespace okie::testing;

TEST_SUITE("carb_eval") {

TEST_CASE("tuple_match on identical and disjoint triples") {
  Triple a{"Elon Musk", "founded", "SpaceX"};
  auto exact = tuple_match(a, a);
  CHECK(exact.precision_part == doctest::Approx(1.0));
  CHECK(exact.recall_part == doctest::Approx(1.0));

  Triple b{"the committee", "rejected", "the budget"};
  auto none = tuple_match(a, b);
  CHECK(none.precision_part == doctest::Approx(0.0));
  CHECK(none.recall_part == doctest::Approx(0.0));
}

TEST_CASE("tuple_match counts slot-wise token overlap") {
  // Hand count: pred tokens 2+1+1 all appear in their gold slots, so
  // precision_part = 4/4. Gold tokens 2+1+3 with the object matching
  // only "SpaceX" (1 of 3), so recall_part = (2+1+1)/6 = 4/6.
  Triple pred{"Elon Musk", "founded", "SpaceX"};
  Triple gold{"Elon Musk", "founded", "SpaceX in 2002"};
  auto parts = tuple_match(pred, gold);
  CHECK(parts.precision_part == doctest::Approx(1.0));
  CHECK(parts.recall_part == doctest::Approx(4.0 / 6.0));

  // Slots are compared only to their corresponding slots: a subject
  // token hiding in the gold object contributes nothing.
  Triple crossed{"SpaceX", "founded", "Elon Musk"};
  auto crossed_parts = tuple_match(crossed, gold);
  CHECK(crossed_parts.precision_part == doctest::Approx(1.0 / 4.0));
  CHECK(crossed_parts.recall_part == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("tuple_match normalizes case and edge punctuation") {
  Triple pred{"elon musk,", "FOUNDED", "(SpaceX)"};
  Triple gold{"Elon Musk", "founded", "SpaceX"};
  auto parts = tuple_match(pred, gold);
  CHECK(parts.precision_part == doctest::Approx(1.0));
  CHECK(parts.recall_part == doctest::Approx(1.0));

  // Duplicate tokens match as a multiset, not a set.
  Triple dup_pred{"very very", "big", "deal"};
  Triple dup_gold{"very", "big", "deal"};
  auto dup = tuple_match(dup_pred, dup_gold);
  CHECK(dup.precision_part == doctest::Approx(3.0 / 4.0));
  CHECK(dup.recall_part == doctest::Approx(1.0));
}

TEST_CASE("score_sentence reflexivity and empty-side conventions") {
  auto golds = worked_triples();
  auto self = score_sentence(golds, golds);
  CHECK(self.precision == doctest::Approx(1.0));
  CHECK(self.recall == doctest::Approx(1.0));

  auto empty_preds = score_sentence({}, golds);
  CHECK(empty_preds.precision == doctest::Approx(1.0));
  CHECK(empty_preds.recall == doctest::Approx(0.0));

  auto empty_both = score_sentence({}, {});
  CHECK(empty_both.precision == doctest::Approx(1.0));
  CHECK(empty_both.recall == doctest::Approx(1.0));

  auto empty_golds = score_sentence(golds, {});
  CHECK(empty_golds.precision == doctest::Approx(0.0));
}

TEST_CASE("score_sentence precision equals the brute-force assignment") {
  // A hand 2x2 with crossed partial matches: pred0 matches gold0 fully
  // and gold1 partially; a greedy pairing starting from pred1's best
  // choice would be suboptimal.
  std::vector<Triple> golds = {{"a b", "r", "x"}, {"a", "r", "y"}};
  std::vector<Triple> preds = {{"a b", "r", "x"}, {"a b", "r", "y"}};
  auto score = score_sentence(preds, golds);

  std::vector<std::vector<double>> parts(preds.size(),
                                         std::vector<double>(golds.size()));
  for (std::size_t i = 0; i < preds.size(); ++i) {
    for (std::size_t j = 0; j < golds.size(); ++j) {
      parts[i][j] = tuple_match(preds[i], golds[j]).precision_part;
    }
  }
  CHECK(score.precision == doctest::Approx(brute_force_precision(parts)));

  // Randomized sweep across every grid shape up to 3x3.
  std::mt19937 rng(909);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t n_pred = 1 + rng() % 3;
    std::size_t n_gold = 1 + rng() % 3;
    std::vector<Triple> p, g;
    for (std::size_t i = 0; i < n_pred; ++i) p.push_back(random_triple(rng));
    for (std::size_t j = 0; j < n_gold; ++j) g.push_back(random_triple(rng));
    std::vector<std::vector<double>> m(n_pred, std::vector<double>(n_gold));
    for (std::size_t i = 0; i < n_pred; ++i) {
      for (std::size_t j = 0; j < n_gold; ++j) {
        m[i][j] = tuple_match(p[i], g[j]).precision_part;
      }
    }
    auto s = score_sentence(p, g);
    CHECK(s.precision == doctest::Approx(brute_force_precision(m)));
  }
}

TEST_CASE("mid-size grids still match the brute-force oracle") {
  std::mt19937 rng(1618);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t n_pred = 4 + rng() % 2;
    std::size_t n_gold = 4 + rng() % 2;
    std::vector<Triple> p, g;
    for (std::size_t i = 0; i < n_pred; ++i) p.push_back(random_triple(rng));
    for (std::size_t j = 0; j < n_gold; ++j) g.push_back(random_triple(rng));
    std::vector<std::vector<double>> m(n_pred, std::vector<double>(n_gold));
    for (std::size_t i = 0; i < n_pred; ++i) {
      for (std::size_t j = 0; j < n_gold; ++j) {
        m[i][j] = tuple_match(p[i], g[j]).precision_part;
      }
    }
    CHECK(score_sentence(p, g).precision ==
          doctest::Approx(brute_force_precision(m)));
  }
}

TEST_CASE("grids beyond the exact limit fall back to a sane greedy pairing") {
  // Nine preds over disjoint vocabulary plus one exact copy of the gold:
  // only the copy can match, so precision is exactly 1/10.
  std::vector<Triple> golds = {{"quartz harbor", "signals", "the buoy"}};
  std::vector<Triple> preds;
  for (int i = 0; i < 9; ++i) {
    auto tag = std::to_string(i);
    preds.push_back({"u" + tag + "a", "u" + tag + "b", "u" + tag + "c"});
  }
  preds.push_back(golds[0]);
  auto score = score_sentence(preds, golds);
  CHECK(score.precision == doctest::Approx(0.1));
  CHECK(score.recall == doctest::Approx(1.0));
  REQUIRE(score.matches.size() == 1);
  CHECK(score.matches[0].pred_index == 9);
}

TEST_CASE("score_sentence recall takes each gold's best match") {
  std::vector<Triple> preds = {{"Elon Musk", "founded", "SpaceX"}};
  std::vector<Triple> golds = {{"Elon Musk", "founded", "SpaceX"},
                               {"Elon Musk", "founded", "SpaceX in 2002"}};
  auto score = score_sentence(preds, golds);
  // gold0 matches fully, gold1 at 4/6 (hand count above).
  CHECK(score.recall == doctest::Approx((1.0 + 4.0 / 6.0) / 2.0));
}

TEST_CASE("score_corpus micro-averages with count weights") {
  Triple t1{"a", "b", "c"};
  Triple t2{"d", "e", "f"};
  Triple miss{"zz", "qq", "ww"};
  std::vector<ScoredRecord> records;
  // s1: two preds, one perfect and one disjoint, against one gold.
  records.push_back({"s1", {t1, miss}, {t1}});
  // s2: one perfect pred against three golds, two unmatched.
  records.push_back({"s2", {t2}, {t2, {"g", "h", "i"}, {"j", "k", "l"}}});

  auto report = score_corpus(records);
  // P = (1 + 0 + 1) / 3, R = (1 + 1 + 0 + 0) / 4, f1 = 2PR/(P+R) = 4/7.
  CHECK(report.precision == doctest::Approx(2.0 / 3.0));
  CHECK(report.recall == doctest::Approx(0.5));
  CHECK(report.f1 == doctest::Approx(4.0 / 7.0));
  REQUIRE(report.per_sentence.size() == 2);
  CHECK(report.per_sentence[0].id == "s1");

  // Degenerate single-sentence corpus equals the sentence score.
  std::vector<ScoredRecord> single = {{"only", {t1}, {t1}}};
  auto single_report = score_corpus(single);
  CHECK(single_report.precision == doctest::Approx(1.0));
  CHECK(single_report.recall == doctest::Approx(1.0));
  CHECK(single_report.f1 == doctest::Approx(1.0));

  // All-empty predictions: recall 0, so f1 0.
  std::vector<ScoredRecord> empties = {{"s", {}, {t1}}, {"t", {}, {t2}}};
  CHECK(score_corpus(empties).f1 == doctest::Approx(0.0));

  CHECK_THROWS_WITH_AS(score_corpus({}), doctest::Contains("EmptyCorpus"),
                       Error);
}

TEST_CASE("f1_percent arithmetic") {
  CHECK(f1_percent(53.2, 54.0) == doctest::Approx(98.5));
  CHECK(f1_percent(42.9, 54.0) == doctest::Approx(79.4));
  CHECK(f1_percent(54.0, 54.0) == doctest::Approx(100.0));
  // Unit-agnostic as long as numerator and denominator agree.
  CHECK(f1_percent(0.532, 0.540) == doctest::Approx(98.5));
  CHECK_THROWS_WITH_AS(f1_percent(50.0, 0.0), doctest::Contains("DomainError"),
                       Error);
  CHECK_THROWS_AS(f1_percent(50.0, -1.0), Error);
}

TEST_CASE("metric bounds and f1 law on fuzzed inputs") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<Triple> preds, golds;
    std::size_t n_pred = rng() % 4;
    std::size_t n_gold = rng() % 4;
    for (std::size_t i = 0; i < n_pred; ++i) preds.push_back(random_triple(rng));
    for (std::size_t j = 0; j < n_gold; ++j) golds.push_back(random_triple(rng));
    auto s = score_sentence(preds, golds);
    CHECK(s.precision >= 0.0);
    CHECK(s.precision <= 1.0);
    CHECK(s.recall >= 0.0);
    CHECK(s.recall <= 1.0);
    double f1 = f1_from(s.precision, s.recall);
    CHECK(f1 >= 0.0);
    CHECK(f1 <= 1.0);
    if (s.precision == 0.0 || s.recall == 0.0) {
      CHECK(f1 == 0.0);
    } else {
      CHECK(f1 == doctest::Approx(2.0 * s.precision * s.recall /
                                  (s.precision + s.recall)));
    }
    if (!preds.empty()) {
      auto reflexive = score_sentence(preds, preds);
      CHECK(reflexive.precision == doctest::Approx(1.0));
      CHECK(reflexive.recall == doctest::Approx(1.0));
    }
  }
}

}  // TEST_SUITE
