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

#include "okie/backend.h"

#include "okie/data_harness.h"
#include "okie/error.h"
#include "okie/mock_backend.h"

namespace okie {

int register_anchor_tokens(SeqBackend& backend, const AnchorScheme& scheme) {
  if (!scheme.anchored_mode()) {
    throw Error(Errc::kPrecondition,
                "anchor registration requires an anchored scheme");
  }
  scheme.validate();
  std::vector<std::string> tokens;
  for (auto role : kAllRoles) {
    const auto& token = scheme.tunable[static_cast<std::size_t>(role)];
    if (!token.empty()) tokens.push_back(token);
  }
  return backend.register_special_tokens(tokens);
}

std::unique_ptr<SeqBackend> make_backend(const std::string& name,
                                         const BackendOptions& options) {
  if (name == "mock") {
    if (options.gold_path.empty()) {
      throw Error(Errc::kConfigError,
                  "the mock backend needs a gold corpus (--gold)");
    }
    auto mock = std::make_unique<MockOracleBackend>(options.scheme);
    for (const auto& example : import_corpus_auto(options.gold_path)) {
      mock->add_example(example.sentence, example.triples);
    }
    return mock;
  }
  if (name.rfind("t5-", 0) == 0 || name.rfind("flan-t5-", 0) == 0) {
    throw Error(Errc::kBackendCapability,
                "backend '" + name +
                    "' is an optional real-model adapter not present in this "
                    "build; set OKIE_MODEL_DIR and install the adapter to "
                    "use it");
  }
  throw Error(Errc::kBackendCapability, "unknown backend: " + name);
}

}  // namespace okie
