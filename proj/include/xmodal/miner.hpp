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

#include <vector>

#include "xmodal/lf.hpp"

namespace xmodal {

struct MinerConfig {
  double min_precision = 0.9;  // in (0,1]
  double min_recall = 0.1;     // in (0,1]
  int max_order = 1;
  // Minimum fired count on points of the emit class; also the level-wise
  // survival gate (anti-monotone, so Apriori pruning stays exact).
  size_t min_support = 5;
  bool mine_negatives = true;
  size_t numeric_split_candidates = 32;

  void check() const;
};

// Frequent-itemset LF mining over the dev set. Positive pass first; each LF
// is a value-set conjunction within a single categorical feature, extended
// level-wise to max_order; numeric features get equi-quantile threshold
// sweeps. Output is sorted by descending dev F1, ties by
// (feature_id, params, emit_label).
std::vector<std::pair<LabelingFunction, LFStats>> mine_lfs(
    const Dataset& dev, const MinerConfig& config);

}  // namespace xmodal
