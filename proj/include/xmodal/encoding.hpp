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

#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "xmodal/schema.hpp"

namespace xmodal {

// Dense encoding fitted from data: categorical features get a stable sorted
// vocabulary (multi-hot slots), numerics a min/max for [0,1] scaling,
// embeddings pass through. Missing features encode to zeros.
struct Encoding {
  struct Slot {
    std::string feature_id;
    FeatureKind kind = FeatureKind::numeric;
    size_t offset = 0;
    size_t width = 0;
    std::vector<std::string> vocab;  // categorical, sorted
    double min = 0.0;                // numeric
    double max = 0.0;
    bool constant = false;  // numeric with min == max
  };

  std::vector<Slot> slots;
  size_t width = 0;

  const Slot* find(const std::string& feature_id) const;
};

// `feature_subset` must be a subset of schema ids; slot order follows
// schema order. An optional per-modality mask restricts which features of
// which modality's records contribute observations (used by factor
// analysis); records still validate against the shared schema.
using ModalityFeatureMask =
    std::unordered_map<std::string, std::set<std::string>>;

Encoding fit_encoding(const std::vector<const Dataset*>& datasets,
                      const std::set<std::string>& feature_subset,
                      const ModalityFeatureMask* mask = nullptr);

std::vector<double> encode(const DataPoint& point, const Encoding& encoding);

// Writes into a caller-provided buffer of encoding.width doubles. When a
// mask is supplied, features not enabled for the point's modality encode
// as missing.
void encode_into(const DataPoint& point, const Encoding& encoding,
                 std::span<double> out,
                 const ModalityFeatureMask* mask = nullptr);

}  // namespace xmodal
