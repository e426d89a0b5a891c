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

#ifndef OKIE_TRIPLE_H_
#define OKIE_TRIPLE_H_

#include <compare>
#include <string>

namespace okie {

// One (subject, predicate, object) extraction. Fields are plain text
// spans: non-empty after trimming, free of sentinel and anchor tokens.
struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;

  auto operator<=>(const Triple&) const = default;
};

// Throws Error(kMalformedPredicate / kPrecondition) if a field is empty
// after trimming or contains a sentinel token.
void validate_triple(const Triple& triple);

// An input sentence. Non-empty after trimming, no sentinel tokens.
class Sentence {
 public:
  // Throws Error(kPrecondition) on an invalid sentence.
  explicit Sentence(std::string text);

  const std::string& text() const { return text_; }

  bool operator==(const Sentence&) const = default;

 private:
  std::string text_;
};

}  // namespace okie

#endif  // OKIE_TRIPLE_H_
