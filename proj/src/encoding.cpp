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

#include "xmodal/encoding.hpp"

#include <algorithm>
#include <cmath>

namespace xmodal {

const Encoding::Slot* Encoding::find(const std::string& feature_id) const {
  for (const Slot& s : slots)
    if (s.feature_id == feature_id) return &s;
  return nullptr;
}

namespace {

bool feature_enabled(const ModalityFeatureMask* mask,
                     const std::string& modality,
                     const std::string& feature_id) {
  if (!mask) return true;
  auto it = mask->find(modality);
  if (it == mask->end()) return false;
  return it->second.count(feature_id) > 0;
}

}  // namespace

Encoding fit_encoding(const std::vector<const Dataset*>& datasets,
                      const std::set<std::string>& feature_subset,
                      const ModalityFeatureMask* mask) {
  if (datasets.empty()) throw Error("fit_encoding: no datasets");
  const FeatureSchema& schema = datasets.front()->schema;
  for (const std::string& fid : feature_subset)
    if (!schema.find(fid))
      throw Error("fit_encoding: feature '" + fid + "' not in schema");

  Encoding enc;
  for (const FeatureDef& def : schema.features()) {
    if (!feature_subset.count(def.feature_id)) continue;
    Encoding::Slot slot;
    slot.feature_id = def.feature_id;
    slot.kind = def.kind;
    if (def.kind == FeatureKind::categorical) {
      std::set<std::string> vocab;
      for (const Dataset* ds : datasets)
        for (const DataPoint& p : ds->points) {
          if (!feature_enabled(mask, p.modality, def.feature_id)) continue;
          const FeatureValue& v = p.feature(def.feature_id);
          if (v.is_categorical())
            vocab.insert(v.tokens().begin(), v.tokens().end());
        }
      slot.vocab.assign(vocab.begin(), vocab.end());
      slot.width = slot.vocab.size();
    } else if (def.kind == FeatureKind::numeric) {
      bool any = false;
      double lo = 0.0, hi = 0.0;
      for (const Dataset* ds : datasets)
        for (const DataPoint& p : ds->points) {
          if (!feature_enabled(mask, p.modality, def.feature_id)) continue;
          const FeatureValue& v = p.feature(def.feature_id);
          if (!v.is_numeric()) continue;
          if (!any) {
            lo = hi = v.num();
            any = true;
          } else {
            lo = std::min(lo, v.num());
            hi = std::max(hi, v.num());
          }
        }
      slot.min = lo;
      slot.max = hi;
      slot.constant = !any || lo == hi;
      slot.width = 1;
    } else {
      slot.width = static_cast<size_t>(def.embedding_dim);
    }
    slot.offset = enc.width;
    enc.width += slot.width;
    enc.slots.push_back(std::move(slot));
  }
  return enc;
}

void encode_into(const DataPoint& point, const Encoding& encoding,
                 std::span<double> out, const ModalityFeatureMask* mask) {
  if (out.size() != encoding.width)
    throw Error("encode: buffer width " + std::to_string(out.size()) +
                " != encoding width " + std::to_string(encoding.width));
  std::fill(out.begin(), out.end(), 0.0);
  for (const Encoding::Slot& slot : encoding.slots) {
    if (!feature_enabled(mask, point.modality, slot.feature_id)) continue;
    const FeatureValue& v = point.feature(slot.feature_id);
    if (v.is_missing()) continue;
    switch (slot.kind) {
      case FeatureKind::categorical: {
        if (!v.is_categorical()) continue;
        // Tokens unseen at fit time encode to nothing for this feature.
        for (const std::string& tok : v.tokens()) {
          auto it = std::lower_bound(slot.vocab.begin(), slot.vocab.end(), tok);
          if (it != slot.vocab.end() && *it == tok)
            out[slot.offset + static_cast<size_t>(it - slot.vocab.begin())] =
                1.0;
        }
        break;
      }
      case FeatureKind::numeric: {
        if (!v.is_numeric()) continue;
        double x = 0.0;
        if (!slot.constant) {
          x = (v.num() - slot.min) / (slot.max - slot.min);
          x = std::clamp(x, 0.0, 1.0);
        }
        out[slot.offset] = x;
        break;
      }
      case FeatureKind::embedding: {
        if (!v.is_embedding()) continue;
        const auto& e = v.emb();
        size_t n = std::min(e.size(), slot.width);
        std::copy(e.begin(), e.begin() + static_cast<long>(n),
                  out.begin() + static_cast<long>(slot.offset));
        break;
      }
    }
  }
}

std::vector<double> encode(const DataPoint& point, const Encoding& encoding) {
  std::vector<double> out(encoding.width, 0.0);
  encode_into(point, encoding, out);
  return out;
}

}  // namespace xmodal
