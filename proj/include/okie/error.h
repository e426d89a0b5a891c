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

#ifndef OKIE_ERROR_H_
#define OKIE_ERROR_H_

#include <stdexcept>
#include <string>

namespace okie {

// Error categories surfaced by the library. Training-side builders fail
// hard with one of these; generation-side parsers never throw and report
// DecodeWarnings instead (see codec.h).
enum class Errc {
  kEmptyPredicates,
  kMalformedPredicate,
  kAlignmentError,
  kInvalidGroup,
  kInvalidScheme,
  kEmptyVote,
  kBackendCapability,
  kEmptyCorpus,
  kEmptySample,
  kDomainError,
  kParseError,
  kConfigError,
  kIoError,
  kPrecondition,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace okie

#endif  // OKIE_ERROR_H_
