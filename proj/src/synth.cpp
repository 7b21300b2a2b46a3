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

#include "xmodal/synth.hpp"

#include <cmath>
#include <cstdio>

namespace xmodal {

namespace {

constexpr double kEmbeddingShift = 2.0;  // total mean separation, in sigma
constexpr double kBackgroundTilt = 0.80;  // geometric ratio of the tilt
constexpr size_t kBackgroundDraws = 2;

std::string token_name(size_t feature, size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "f%zu_v%02zu", feature, index);
  return std::string(buf);
}

std::string point_id(const char* prefix, size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%06zu", prefix, i);
  return std::string(buf);
}

// Background token distribution over vocab indices [2, V): positives favor
// low indices, negatives high, geometrically tilted so the classes overlap
// but similarity search can still separate them.
class BackgroundDist {
 public:
  BackgroundDist(size_t vocab_size, bool reversed) {
    size_t n = vocab_size - 2;
    cdf_.resize(n);
    double w = 1.0, total = 0.0;
    std::vector<double> weights(n);
    for (size_t i = 0; i < n; ++i) {
      weights[i] = w;
      total += w;
      w *= kBackgroundTilt;
    }
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
      size_t idx = reversed ? n - 1 - i : i;
      acc += weights[idx] / total;
      cdf_[i] = acc;
    }
    cdf_.back() = 1.0;
  }

  size_t sample(Rng& rng) const {
    double u = rng.uniform();
    for (size_t i = 0; i < cdf_.size(); ++i)
      if (u < cdf_[i]) return i + 2;
    return cdf_.size() + 1;
  }

 private:
  std::vector<double> cdf_;
};

}  // namespace

void SynthConfig::check() const {
  if (positive_rate <= 0.0 || positive_rate >= 1.0)
    throw ConfigError("synth.positive_rate must be in (0,1)");
  if (signal_strength < 0.0 || signal_strength > 1.0)
    throw ConfigError("synth.signal_strength must be in [0,1]");
  if (modality_noise < 0.0 || modality_noise > 1.0)
    throw ConfigError("synth.modality_noise must be in [0,1]");
  if (n_shared_categorical > 0 && vocab_size < 4)
    throw ConfigError("synth.vocab_size must be >= 4");
}

SynthOutput generate(const SynthConfig& config) {
  config.check();

  std::vector<FeatureDef> defs;
  for (size_t f = 0; f < config.n_shared_categorical; ++f) {
    FeatureDef d;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "cat_%zu", f);
    d.feature_id = buf;
    d.name = "shared categorical " + std::to_string(f);
    d.kind = FeatureKind::categorical;
    d.modalities = {"text", "image"};
    d.feature_set = (f % 2 == 0) ? "A" : "B";
    defs.push_back(std::move(d));
  }
  for (size_t f = 0; f < config.n_noise_categorical; ++f) {
    FeatureDef d;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "noise_%zu", f);
    d.feature_id = buf;
    d.name = "noise categorical " + std::to_string(f);
    d.kind = FeatureKind::categorical;
    d.modalities = {"text", "image"};
    d.feature_set = "D";
    defs.push_back(std::move(d));
  }
  if (config.n_image_only_embedding_dims > 0) {
    FeatureDef d;
    d.feature_id = "img_emb";
    d.name = "image embedding";
    d.kind = FeatureKind::embedding;
    d.embedding_dim = static_cast<int>(config.n_image_only_embedding_dims);
    d.modalities = {"image"};
    d.feature_set = "C";
    defs.push_back(std::move(d));
  }
  FeatureSchema schema(std::move(defs));

  BackgroundDist bg_pos(config.vocab_size, false);
  BackgroundDist bg_neg(config.vocab_size, true);

  auto draw_point = [&](Rng& rng, const std::string& id, bool image,
                        bool with_label) {
    DataPoint p;
    p.id = id;
    p.modality = image ? "image" : "text";
    bool positive = rng.bernoulli(config.positive_rate);
    if (with_label) p.gold_label = positive ? 1 : -1;

    for (size_t f = 0; f < config.n_shared_categorical; ++f) {
      std::vector<std::string> toks;
      // Indicative token: index 0 for positives, 1 for negatives.
      if (rng.bernoulli(config.signal_strength))
        toks.push_back(token_name(f, positive ? 0 : 1));
      const BackgroundDist& bg = positive ? bg_pos : bg_neg;
      for (size_t d = 0; d < kBackgroundDraws; ++d)
        toks.push_back(token_name(f, bg.sample(rng)));
      if (image && config.modality_noise > 0.0) {
        for (auto& t : toks)
          if (rng.bernoulli(config.modality_noise))
            t = token_name(f, rng.uniform_int(config.vocab_size));
      }
      char buf[32];
      std::snprintf(buf, sizeof(buf), "cat_%zu", f);
      p.features.emplace(buf, FeatureValue::categorical(std::move(toks)));
    }

    for (size_t f = 0; f < config.n_noise_categorical; ++f) {
      std::vector<std::string> toks;
      for (size_t d = 0; d < kBackgroundDraws; ++d)
        toks.push_back(
            token_name(100 + f, 2 + rng.uniform_int(config.vocab_size - 2)));
      char buf[32];
      std::snprintf(buf, sizeof(buf), "noise_%zu", f);
      p.features.emplace(buf, FeatureValue::categorical(std::move(toks)));
    }

    if (image && config.n_image_only_embedding_dims > 0) {
      size_t dim = config.n_image_only_embedding_dims;
      double shift = kEmbeddingShift / (2.0 * std::sqrt(static_cast<double>(dim)));
      std::vector<double> e(dim);
      for (size_t d = 0; d < dim; ++d)
        e[d] = rng.normal(positive ? shift : -shift, 1.0);
      p.features.emplace("img_emb", FeatureValue::embedding(std::move(e)));
    }
    return p;
  };

  auto make_dataset = [&](const char* prefix, size_t n, bool image,
                          bool with_label, Split split, const char* stream) {
    Dataset ds;
    ds.schema = schema;
    ds.split = split;
    Rng rng(Rng::derive_seed(config.seed, stream));
    ds.points.reserve(n);
    for (size_t i = 0; i < n; ++i)
      ds.points.push_back(draw_point(rng, point_id(prefix, i), image,
                                     with_label));
    return ds;
  };

  SynthOutput out;
  out.schema = schema;
  out.text_labeled = make_dataset("tx", config.n_text, false, true,
                                  Split::train_labeled, "text_labeled");
  out.image_unlabeled =
      make_dataset("iu", config.n_image_unlabeled, true, false,
                   Split::train_unlabeled, "image_unlabeled");
  out.image_test = make_dataset("it", config.n_image_test, true, true,
                                Split::test, "image_test");
  out.image_gold_pool =
      make_dataset("ig", config.n_image_gold_pool, true, true,
                   Split::train_labeled, "image_gold_pool");
  return out;
}

}  // namespace xmodal
