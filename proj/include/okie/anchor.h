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
// Role anchors and generation-order control: rendering anchored sentinel
// groups, allocating sentinels across slots, and aggregating multi-order
// extraction results by majority vote.

#ifndef OKIE_ANCHOR_H_
#define OKIE_ANCHOR_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "okie/triple.h"

namespace okie {

enum class Role { kSubject = 0, kPredicate = 1, kObject = 2 };

constexpr std::array<Role, 3> kAllRoles = {Role::kSubject, Role::kPredicate,
                                           Role::kObject};

// The six role permutations, in canonical enumeration order. Voting and
// per-order iteration always walk them in this sequence.
enum class GenerationOrder {
  kSPO = 0,
  kSOP = 1,
  kPSO = 2,
  kPOS = 3,
  kOSP = 4,
  kOPS = 5,
};

constexpr std::array<GenerationOrder, 6> kAllOrders = {
    GenerationOrder::kSPO, GenerationOrder::kSOP, GenerationOrder::kPSO,
    GenerationOrder::kPOS, GenerationOrder::kOSP, GenerationOrder::kOPS};

// The role emitted at each of the three positions of the order.
std::array<Role, 3> order_roles(GenerationOrder order);

// "SPO", "POS", ... and the inverse. parse_order throws
// Error(kConfigError) on anything that is not one of the six names.
std::string order_name(GenerationOrder order);
GenerationOrder parse_order(const std::string& name);

const std::string& triple_field(const Triple& triple, Role role);
std::string& triple_field(Triple& triple, Role role);

// How sentinel groups are decorated. In plain mode a group is the bare
// sentinels. In anchored mode every sentinel is flanked on both sides by
// its role's anchor: the meaning word immediately followed by the role's
// tunable special token, treated as one unit. The tunable token names are
// what register_anchor_tokens() hands to the backend; a role's tunable
// part may be empty, in which case the anchor is the meaning word alone.
struct AnchorScheme {
  enum class Mode { kPlain, kAnchored };

  Mode mode = Mode::kPlain;
  // Indexed by Role. Meaning words (word-table part of the anchor).
  std::array<std::string, 3> anchor_text = {"[S]", "[P]", "[O]"};
  // Indexed by Role. Trainable special-token names.
  std::array<std::string, 3> tunable = {"<anchor_s>", "<anchor_p>",
                                        "<anchor_o>"};

  static AnchorScheme plain();
  static AnchorScheme anchored();
  // Anchors are the bare letters S / P / O with no tunable part; renders
  // the exact group surface used throughout the worked examples.
  static AnchorScheme anchored_letters();

  bool anchored_mode() const { return mode == Mode::kAnchored; }

  // Full rendered anchor unit for a role (meaning word + tunable token).
  std::string anchor_unit(Role role) const;

  // Throws Error(kInvalidScheme) if anchored and the anchor units are not
  // pairwise distinct, are empty, or contain sentinel tokens.
  void validate() const;
};

// Renders one three-sentinel group under the scheme.
// Plain:    "<id_0><id_1><id_2>"
// Anchored: "S<id_0>S P<id_1>P O<id_2>O" (units joined by single spaces,
// each sentinel flanked by the identical anchor unit of its role).
// Throws Error(kInvalidGroup) on duplicate ids.
std::string render_group(const std::array<int, 3>& ids, GenerationOrder order,
                         const AnchorScheme& scheme);

// Renders one group per slot, allocating sentinel ids sequentially from
// start_id: slot k uses ids start_id + 3k .. start_id + 3k + 2.
std::vector<std::string> mixed_order_template(
    const std::vector<GenerationOrder>& orders, const AnchorScheme& scheme,
    int start_id = 0);

// Keeps a triple iff it appears in strictly more than
// threshold * |orders| of the per-order result sets. Triples are compared
// after normalization (ASCII case-fold, whitespace collapse); the output
// is ordered by first appearance under the canonical order enumeration
// and keeps the un-normalized representative from the earliest order.
// Throws Error(kEmptyVote) on an empty map and Error(kPrecondition) on a
// threshold outside (0, 1].
std::vector<Triple> majority_vote(
    const std::map<GenerationOrder, std::vector<Triple>>& per_order_results,
    double threshold = 0.5);

}  // namespace okie

#endif  // OKIE_ANCHOR_H_
