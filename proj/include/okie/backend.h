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
// The abstract text-to-text engine contract used by both pipeline
// stages. Real model adapters live behind this interface out of tree;
// the in-tree MockOracleBackend (mock_backend.h) is enough to exercise
// every code path deterministically.

#ifndef OKIE_BACKEND_H_
#define OKIE_BACKEND_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "okie/anchor.h"

namespace okie {

struct TrainingPair {
  std::string input;
  std::string target;
};

struct TrainConfig {
  int batch_size = 4;
  double learning_rate = 5e-5;
  int epochs = 7;
  std::string optimizer = "adam";
  std::string loss = "cross-entropy";
  long seed = 0;
};

struct TrainReport {
  int epochs_completed = 0;
  long pairs_seen = 0;
  double final_loss = 0.0;
};

// Invoked at each epoch boundary with the 1-based epoch just finished.
// This is the sanctioned point to run evaluation while a fine-tune holds
// the backend; outside of it, fine_tune owns the instance exclusively.
using EpochCallback = std::function<void(int epoch)>;

class SeqBackend {
 public:
  virtual ~SeqBackend() = default;

  // Length-preserving over batches: exactly one output per input.
  virtual std::vector<std::string> generate(
      const std::vector<std::string>& inputs) = 0;

  virtual TrainReport fine_tune(const std::vector<TrainingPair>& pairs,
                                const TrainConfig& config,
                                const EpochCallback& on_epoch_end = {}) = 0;

  // Registers token names that must survive a generate round-trip
  // un-split. Idempotent. Returns the number of distinct tokens known
  // after the call. Throws Error(kBackendCapability) if the backend
  // cannot register tokens.
  virtual int register_special_tokens(
      const std::vector<std::string>& tokens) = 0;

  virtual std::string name() const = 0;
};

// Registers the scheme's tunable anchor tokens with the backend.
// Idempotent. Requires an anchored scheme; throws Error(kPrecondition)
// for a plain one. Returns the backend's token count acknowledgment.
int register_anchor_tokens(SeqBackend& backend, const AnchorScheme& scheme);

// Options a backend adapter may need at construction time.
struct BackendOptions {
  // Gold corpus path, required by the mock backend.
  std::string gold_path;
  // Scheme the pipeline will use; the mock needs it to mirror encodings.
  AnchorScheme scheme = AnchorScheme::anchored();
  // Where real-model assets are resolved from (OKIE_MODEL_DIR).
  std::string model_dir;
};

// Creates a backend by name ("mock", "t5-base", ...). Real-model
// adapters are an optional install; when the named adapter is not
// present in this build, throws Error(kBackendCapability).
std::unique_ptr<SeqBackend> make_backend(const std::string& name,
                                         const BackendOptions& options);

}  // namespace okie

#endif  // OKIE_BACKEND_H_
