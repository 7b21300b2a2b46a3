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

#include <string>
#include <unordered_map>
#include <vector>

#include "xmodal/schema.hpp"

namespace xmodal {

enum class LfKind { value_match, numeric_threshold, propagation_threshold };
enum class Comparator { ge, le };

std::string to_string(LfKind k);
LfKind lf_kind_from_string(const std::string& s);

// Node id -> propagation score, consumed by propagation_threshold LFs.
using ScoreMap = std::unordered_map<std::string, double>;

// Single-feature predicate emitting +1, -1 or abstain (0).
//  value_match:           emit_label iff `values` is a subset of the
//                         point's token set for feature_id.
//  numeric_threshold:     emit_label iff the comparison holds.
//  propagation_threshold: +1 iff score >= theta_pos, -1 iff
//                         score <= theta_neg, else abstain. Nonservable;
//                         scores_ref names the score table it was built
//                         from.
// A Missing feature (or a node absent from the score table) abstains.
struct LabelingFunction {
  std::string lf_id;
  LfKind kind = LfKind::value_match;
  std::string feature_id;
  int emit_label = 1;

  std::vector<std::string> values;  // value_match; sorted, non-empty

  Comparator comparator = Comparator::ge;  // numeric_threshold
  double threshold = 0.0;

  double theta_pos = 1.0;  // propagation_threshold
  double theta_neg = 0.0;
  std::string scores_ref;

  bool servable = true;

  // Canonical parameter rendering; used for deduplication and for the
  // deterministic tie-break ordering of miner output.
  std::string params_key() const;
};

struct LFStats {
  double precision = 0.0;
  double recall = 0.0;
  double coverage = 0.0;
  size_t n_fired = 0;
  bool degenerate = false;  // zero fires; precision reported as 1.0

  double f1() const {
    return (precision + recall) > 0
               ? 2.0 * precision * recall / (precision + recall)
               : 0.0;
  }
};

int apply_lf(const LabelingFunction& lf, const DataPoint& point,
             const ScoreMap* scores = nullptr);

LFStats evaluate_lf(const LabelingFunction& lf, const Dataset& dev,
                    const ScoreMap* scores = nullptr);

std::string lfs_to_jsonl(const std::vector<LabelingFunction>& lfs,
                         const std::vector<LFStats>& stats);
void save_lfs(const std::vector<LabelingFunction>& lfs,
              const std::vector<LFStats>& stats, const std::string& path);
std::pair<std::vector<LabelingFunction>, std::vector<LFStats>> load_lfs(
    const std::string& path);

}  // namespace xmodal
