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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "xmodal/common.hpp"

namespace xmodal {

enum class FeatureKind { numeric, categorical, embedding };

std::string to_string(FeatureKind k);
FeatureKind feature_kind_from_string(const std::string& s);

struct FeatureDef {
  std::string feature_id;
  std::string name;
  FeatureKind kind = FeatureKind::numeric;
  int embedding_dim = 0;  // embedding kind only, >= 1
  bool servable = true;
  std::set<std::string> modalities;  // non-empty
  std::string feature_set;           // optional group tag ("A", "B", ...)

  bool available_for(const std::string& modality) const {
    return modalities.count(modality) > 0;
  }
};

// Ordered feature definitions shared by every modality. Construction
// validates id uniqueness, embedding dims and non-empty modality sets.
class FeatureSchema {
 public:
  FeatureSchema() = default;
  explicit FeatureSchema(std::vector<FeatureDef> features);

  const std::vector<FeatureDef>& features() const { return features_; }
  size_t size() const { return features_.size(); }
  const FeatureDef* find(const std::string& feature_id) const;
  const FeatureDef& at(const std::string& feature_id) const;

 private:
  std::vector<FeatureDef> features_;
  std::unordered_map<std::string, size_t> index_;
};

FeatureSchema load_schema(const std::string& path);
void save_schema(const FeatureSchema& schema, const std::string& path);
std::string schema_to_json_string(const FeatureSchema& schema);
FeatureSchema schema_from_json_string(const std::string& text);

// Tagged union over the value kinds. Categorical token lists are kept
// sorted and deduplicated; an empty categorical set is not representable
// (use missing()).
class FeatureValue {
 public:
  FeatureValue() = default;  // missing

  static FeatureValue missing() { return FeatureValue(); }
  static FeatureValue numeric(double v);
  static FeatureValue categorical(std::vector<std::string> tokens);
  static FeatureValue embedding(std::vector<double> values);

  bool is_missing() const { return value_.index() == 0; }
  bool is_numeric() const { return value_.index() == 1; }
  bool is_categorical() const { return value_.index() == 2; }
  bool is_embedding() const { return value_.index() == 3; }

  double num() const { return std::get<1>(value_); }
  const std::vector<std::string>& tokens() const { return std::get<2>(value_); }
  const std::vector<double>& emb() const { return std::get<3>(value_); }

  bool contains_all(const std::vector<std::string>& sorted_subset) const;

  bool operator==(const FeatureValue& other) const {
    return value_ == other.value_;
  }

 private:
  std::variant<std::monostate, double, std::vector<std::string>,
               std::vector<double>>
      value_;
};

struct DataPoint {
  std::string id;
  std::string modality;
  std::map<std::string, FeatureValue> features;
  std::optional<int> gold_label;  // +1 / -1

  // Missing when the feature is absent from the map.
  const FeatureValue& feature(const std::string& feature_id) const;
};

enum class Split { dev, train_labeled, train_unlabeled, test };

std::string to_string(Split s);
Split split_from_string(const std::string& s);

struct Dataset {
  FeatureSchema schema;
  std::vector<DataPoint> points;
  Split split = Split::train_labeled;
};

// One validation finding. Warnings (e.g. a point with every feature
// missing) are flagged so they can be reported without counting as
// invariant violations.
struct Violation {
  std::string point_id;
  std::string field;
  std::string message;
  bool warning = false;
};

Dataset load_dataset(const std::string& path, const FeatureSchema& schema,
                     Split split);
void save_dataset(const Dataset& dataset, const std::string& path);
std::string dataset_to_jsonl(const Dataset& dataset);
Dataset dataset_from_jsonl(const std::string& text, const FeatureSchema& schema,
                           Split split, const std::string& origin = "<memory>");

std::vector<Violation> validate(const Dataset& dataset);

}  // namespace xmodal
