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

#include "okie/anchor.h"

#include <algorithm>
#include <set>

#include "okie/error.h"
#include "okie/text.h"

namespace okie {

namespace {

constexpr std::array<std::array<Role, 3>, 6> kOrderRoles = {{
    {Role::kSubject, Role::kPredicate, Role::kObject},    // SPO
    {Role::kSubject, Role::kObject, Role::kPredicate},    // SOP
    {Role::kPredicate, Role::kSubject, Role::kObject},    // PSO
    {Role::kPredicate, Role::kObject, Role::kSubject},    // POS
    {Role::kObject, Role::kSubject, Role::kPredicate},    // OSP
    {Role::kObject, Role::kPredicate, Role::kSubject},    // OPS
}};

constexpr std::array<const char*, 6> kOrderNames = {"SPO", "SOP", "PSO",
                                                    "POS", "OSP", "OPS"};

std::string render_sentinel(int id) {
  return "<id_" + std::to_string(id) + ">";
}

// Normalization used when comparing triples across order runs.
std::string vote_key(const Triple& triple) {
  auto norm = [](const std::string& field) {
    return to_lower_ascii(collapse_whitespace(field));
  };
  return norm(triple.subject) + '\x1f' + norm(triple.predicate) + '\x1f' +
         norm(triple.object);
}

}  // namespace

std::array<Role, 3> order_roles(GenerationOrder order) {
  return kOrderRoles[static_cast<int>(order)];
}

std::string order_name(GenerationOrder order) {
  return kOrderNames[static_cast<int>(order)];
}

GenerationOrder parse_order(const std::string& name) {
  for (std::size_t i = 0; i < kOrderNames.size(); ++i) {
    if (name == kOrderNames[i]) return kAllOrders[i];
  }
  throw Error(Errc::kConfigError, "unknown generation order: " + name);
}

const std::string& triple_field(const Triple& triple, Role role) {
  switch (role) {
    case Role::kSubject: return triple.subject;
    case Role::kPredicate: return triple.predicate;
    default: return triple.object;
  }
}

std::string& triple_field(Triple& triple, Role role) {
  switch (role) {
    case Role::kSubject: return triple.subject;
    case Role::kPredicate: return triple.predicate;
    default: return triple.object;
  }
}

AnchorScheme AnchorScheme::plain() {
  AnchorScheme scheme;
  scheme.mode = Mode::kPlain;
  return scheme;
}

AnchorScheme AnchorScheme::anchored() {
  AnchorScheme scheme;
  scheme.mode = Mode::kAnchored;
  return scheme;
}

AnchorScheme AnchorScheme::anchored_letters() {
  AnchorScheme scheme;
  scheme.mode = Mode::kAnchored;
  scheme.anchor_text = {"S", "P", "O"};
  scheme.tunable = {"", "", ""};
  return scheme;
}

std::string AnchorScheme::anchor_unit(Role role) const {
  auto index = static_cast<std::size_t>(role);
  return anchor_text[index] + tunable[index];
}

void AnchorScheme::validate() const {
  if (mode == Mode::kPlain) return;
  std::set<std::string> words, units;
  for (auto role : kAllRoles) {
    auto index = static_cast<std::size_t>(role);
    const auto& word = anchor_text[index];
    auto unit = anchor_unit(role);
    if (word.empty()) {
      throw Error(Errc::kInvalidScheme, "empty anchor text");
    }
    if (contains_sentinel(unit)) {
      throw Error(Errc::kInvalidScheme,
                  "anchor contains a sentinel pattern: " + unit);
    }
    words.insert(word);
    units.insert(unit);
  }
  if (words.size() != 3 || units.size() != 3) {
    throw Error(Errc::kInvalidScheme, "anchors are not pairwise distinct");
  }
}

std::string render_group(const std::array<int, 3>& ids, GenerationOrder order,
                         const AnchorScheme& scheme) {
  if (ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2]) {
    throw Error(Errc::kInvalidGroup, "duplicate sentinel ids in group");
  }
  scheme.validate();
  if (!scheme.anchored_mode()) {
    return render_sentinel(ids[0]) + render_sentinel(ids[1]) +
           render_sentinel(ids[2]);
  }
  auto roles = order_roles(order);
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i > 0) out += ' ';
    auto unit = scheme.anchor_unit(roles[i]);
    out += unit + render_sentinel(ids[i]) + unit;
  }
  return out;
}

std::vector<std::string> mixed_order_template(
    const std::vector<GenerationOrder>& orders, const AnchorScheme& scheme,
    int start_id) {
  std::vector<std::string> groups;
  groups.reserve(orders.size());
  for (std::size_t slot = 0; slot < orders.size(); ++slot) {
    int base = start_id + static_cast<int>(3 * slot);
    groups.push_back(
        render_group({base, base + 1, base + 2}, orders[slot], scheme));
  }
  return groups;
}

std::vector<Triple> majority_vote(
    const std::map<GenerationOrder, std::vector<Triple>>& per_order_results,
    double threshold) {
  if (per_order_results.empty()) {
    throw Error(Errc::kEmptyVote, "no per-order results to vote on");
  }
  if (threshold <= 0.0 || threshold > 1.0) {
    throw Error(Errc::kPrecondition, "vote threshold must be in (0, 1]");
  }

  struct Tally {
    int count = 0;
    std::size_t rank = 0;   // first appearance in canonical enumeration
    Triple representative;  // surface form from the earliest order
  };
  std::map<std::string, Tally> tallies;
  std::size_t next_rank = 0;

  // std::map iterates orders in canonical enum order already.
  for (const auto& [order, triples] : per_order_results) {
    std::set<std::string> seen_this_order;
    for (const auto& triple : triples) {
      auto key = vote_key(triple);
      auto [it, inserted] = tallies.try_emplace(key);
      if (inserted) {
        it->second.rank = next_rank++;
        it->second.representative = triple;
      }
      if (seen_this_order.insert(key).second) {
        it->second.count += 1;
      }
    }
  }

  double cutoff = threshold * static_cast<double>(per_order_results.size());
  std::vector<const Tally*> kept;
  for (const auto& [key, tally] : tallies) {
    if (static_cast<double>(tally.count) > cutoff) kept.push_back(&tally);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Tally* a, const Tally* b) { return a->rank < b->rank; });

  std::vector<Triple> out;
  out.reserve(kept.size());
  for (const auto* tally : kept) out.push_back(tally->representative);
  return out;
}

}  // namespace okie
