/*
 * Copyright 2026 The xmodal Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

#include "xmodal/schema.hpp"

namespace xmodal {

// Deterministic two-modality benchmark with a planted, recoverable signal:
// each shared categorical feature reserves one positive- and one
// negative-indicative token (present in its class with probability
// signal_strength, never in the other), plus class-tilted background
// tokens; image points carry an extra embedding whose mean shifts with the
// class. Image-side tokens are corrupted with probability modality_noise.
struct SynthConfig {
  uint64_t seed = 1;
  size_t n_text = 2000;
  size_t n_image_unlabeled = 1000;
  size_t n_image_test = 500;
  size_t n_image_gold_pool = 500;
  double positive_rate = 0.1;      // in (0,1)
  size_t n_shared_categorical = 4;
  size_t vocab_size = 12;          // per feature, >= 4
  size_t n_image_only_embedding_dims = 8;
  double signal_strength = 0.8;    // in [0,1]
  double modality_noise = 0.0;     // in [0,1]
  size_t n_noise_categorical = 0;  // class-independent features, set "D"

  void check() const;
};

struct SynthOutput {
  FeatureSchema schema;
  Dataset text_labeled;     // split train_labeled, gold labels
  Dataset image_unlabeled;  // split train_unlabeled, no labels
  Dataset image_test;       // split test, gold labels
  Dataset image_gold_pool;  // split train_labeled, gold labels
};

SynthOutput generate(const SynthConfig& config);

}  // namespace xmodal
