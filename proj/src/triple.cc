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

#include "okie/triple.h"

#include "okie/error.h"
#include "okie/text.h"

namespace okie {

namespace {

const char* errc_names[] = {
    "EmptyPredicates", "MalformedPredicate", "AlignmentError", "InvalidGroup",
    "InvalidScheme",   "EmptyVote",          "BackendCapability",
    "EmptyCorpus",     "EmptySample",        "DomainError",
    "ParseError",      "ConfigError",        "IoError",
    "Precondition",
};

}  // namespace

const char* errc_name(Errc code) {
  return errc_names[static_cast<int>(code)];
}

void validate_triple(const Triple& triple) {
  const struct {
    const char* name;
    const std::string& value;
  } fields[] = {{"subject", triple.subject},
                {"predicate", triple.predicate},
                {"object", triple.object}};
  for (const auto& field : fields) {
    if (trim(field.value).empty()) {
      throw Error(Errc::kPrecondition,
                  std::string("triple ") + field.name + " is empty");
    }
    if (contains_sentinel(field.value)) {
      throw Error(Errc::kPrecondition, std::string("triple ") + field.name +
                                           " contains a sentinel token: " +
                                           field.value);
    }
  }
}

Sentence::Sentence(std::string text) : text_(std::move(text)) {
  if (trim(text_).empty()) {
    throw Error(Errc::kPrecondition, "sentence is empty");
  }
  if (contains_sentinel(text_)) {
    throw Error(Errc::kPrecondition,
                "sentence contains a sentinel token: " + text_);
  }
}

}  // namespace okie
