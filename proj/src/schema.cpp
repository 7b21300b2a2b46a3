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

#include "xmodal/schema.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace xmodal {

using nlohmann::json;

std::string to_string(FeatureKind k) {
  switch (k) {
    case FeatureKind::numeric:
      return "numeric";
    case FeatureKind::categorical:
      return "categorical_multivalent";
    case FeatureKind::embedding:
      return "embedding";
  }
  throw Error("unknown feature kind");
}

FeatureKind feature_kind_from_string(const std::string& s) {
  if (s == "numeric") return FeatureKind::numeric;
  if (s == "categorical_multivalent" || s == "categorical")
    return FeatureKind::categorical;
  if (s == "embedding") return FeatureKind::embedding;
  throw Error("unknown feature kind: " + s);
}

std::string to_string(Split s) {
  switch (s) {
    case Split::dev:
      return "dev";
    case Split::train_labeled:
      return "train_labeled";
    case Split::train_unlabeled:
      return "train_unlabeled";
    case Split::test:
      return "test";
  }
  throw Error("unknown split");
}

Split split_from_string(const std::string& s) {
  if (s == "dev") return Split::dev;
  if (s == "train_labeled") return Split::train_labeled;
  if (s == "train_unlabeled") return Split::train_unlabeled;
  if (s == "test") return Split::test;
  throw Error("unknown split: " + s);
}

FeatureSchema::FeatureSchema(std::vector<FeatureDef> features)
    : features_(std::move(features)) {
  for (size_t i = 0; i < features_.size(); ++i) {
    const FeatureDef& f = features_[i];
    if (f.feature_id.empty()) throw Error("schema: empty feature_id");
    if (!index_.emplace(f.feature_id, i).second)
      throw Error("schema: duplicate feature_id '" + f.feature_id + "'");
    if (f.kind == FeatureKind::embedding && f.embedding_dim < 1)
      throw Error("schema: feature '" + f.feature_id +
                  "' embedding_dim must be >= 1");
    if (f.modalities.empty())
      throw Error("schema: feature '" + f.feature_id +
                  "' must list at least one modality");
  }
}

const FeatureDef* FeatureSchema::find(const std::string& feature_id) const {
  auto it = index_.find(feature_id);
  return it == index_.end() ? nullptr : &features_[it->second];
}

const FeatureDef& FeatureSchema::at(const std::string& feature_id) const {
  const FeatureDef* f = find(feature_id);
  if (!f) throw Error("schema: unknown feature '" + feature_id + "'");
  return *f;
}

FeatureValue FeatureValue::numeric(double v) {
  if (!std::isfinite(v)) throw Error("numeric feature value must be finite");
  FeatureValue out;
  out.value_ = v;
  return out;
}

FeatureValue FeatureValue::categorical(std::vector<std::string> tokens) {
  if (tokens.empty())
    throw Error("categorical feature value must be non-empty");
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  FeatureValue out;
  out.value_ = std::move(tokens);
  return out;
}

FeatureValue FeatureValue::embedding(std::vector<double> values) {
  for (double v : values)
    if (!std::isfinite(v)) throw Error("embedding values must be finite");
  FeatureValue out;
  out.value_ = std::move(values);
  return out;
}

bool FeatureValue::contains_all(
    const std::vector<std::string>& sorted_subset) const {
  if (!is_categorical()) return false;
  const auto& have = tokens();
  return std::includes(have.begin(), have.end(), sorted_subset.begin(),
                       sorted_subset.end());
}

const FeatureValue& DataPoint::feature(const std::string& feature_id) const {
  static const FeatureValue kMissing;
  auto it = features.find(feature_id);
  return it == features.end() ? kMissing : it->second;
}

namespace {

json feature_def_to_json(const FeatureDef& f) {
  json j;
  j["feature_id"] = f.feature_id;
  j["name"] = f.name;
  j["kind"] = to_string(f.kind);
  if (f.kind == FeatureKind::embedding) j["embedding_dim"] = f.embedding_dim;
  j["servable"] = f.servable;
  j["modalities"] = std::vector<std::string>(f.modalities.begin(),
                                             f.modalities.end());
  if (!f.feature_set.empty()) j["feature_set"] = f.feature_set;
  return j;
}

FeatureDef feature_def_from_json(const json& j) {
  FeatureDef f;
  f.feature_id = j.at("feature_id").get<std::string>();
  f.name = j.value("name", f.feature_id);
  f.kind = feature_kind_from_string(j.at("kind").get<std::string>());
  f.embedding_dim = j.value("embedding_dim", 0);
  f.servable = j.value("servable", true);
  for (const auto& m : j.at("modalities"))
    f.modalities.insert(m.get<std::string>());
  f.feature_set = j.value("feature_set", std::string());
  return f;
}

FeatureValue feature_value_from_json(const json& j) {
  if (j.contains("num")) return FeatureValue::numeric(j.at("num").get<double>());
  if (j.contains("cat"))
    return FeatureValue::categorical(
        j.at("cat").get<std::vector<std::string>>());
  if (j.contains("emb"))
    return FeatureValue::embedding(j.at("emb").get<std::vector<double>>());
  throw Error("feature value must have one of num/cat/emb");
}

json feature_value_to_json(const FeatureValue& v) {
  json j;
  if (v.is_numeric())
    j["num"] = v.num();
  else if (v.is_categorical())
    j["cat"] = v.tokens();
  else if (v.is_embedding())
    j["emb"] = v.emb();
  return j;
}

void check_value_against_schema(const FeatureDef& def, const FeatureValue& v,
                                const std::string& context) {
  switch (def.kind) {
    case FeatureKind::numeric:
      if (!v.is_numeric())
        throw Error(context + ": feature '" + def.feature_id +
                    "' must be numeric");
      break;
    case FeatureKind::categorical:
      if (!v.is_categorical())
        throw Error(context + ": feature '" + def.feature_id +
                    "' must be categorical");
      break;
    case FeatureKind::embedding:
      if (!v.is_embedding())
        throw Error(context + ": feature '" + def.feature_id +
                    "' must be an embedding");
      if (static_cast<int>(v.emb().size()) != def.embedding_dim)
        throw Error(context + ": feature '" + def.feature_id +
                    "' embedding length " + std::to_string(v.emb().size()) +
                    " != declared dim " + std::to_string(def.embedding_dim));
      break;
  }
}

}  // namespace

std::string schema_to_json_string(const FeatureSchema& schema) {
  json j;
  j["format_version"] = kFormatVersion;
  json feats = json::array();
  for (const FeatureDef& f : schema.features())
    feats.push_back(feature_def_to_json(f));
  j["features"] = feats;
  return j.dump(2) + "\n";
}

FeatureSchema schema_from_json_string(const std::string& text) {
  json j = json::parse(text);
  if (j.value("format_version", 0) != kFormatVersion)
    throw Error("schema file: unsupported or missing format_version");
  std::vector<FeatureDef> defs;
  for (const auto& fj : j.at("features"))
    defs.push_back(feature_def_from_json(fj));
  return FeatureSchema(std::move(defs));
}

FeatureSchema load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingArtifactError("cannot open schema file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return schema_from_json_string(ss.str());
  } catch (const json::exception& e) {
    throw Error("schema file " + path + ": " + e.what());
  }
}

void save_schema(const FeatureSchema& schema, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write schema file: " + path);
  out << schema_to_json_string(schema);
}

Dataset dataset_from_jsonl(const std::string& text, const FeatureSchema& schema,
                           Split split, const std::string& origin) {
  Dataset ds;
  ds.schema = schema;
  ds.split = split;
  std::unordered_set<std::string> seen_ids;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(where + ": parse error: " + e.what());
    }
    try {
      DataPoint p;
      p.id = j.at("id").get<std::string>();
      p.modality = j.at("modality").get<std::string>();
      if (j.contains("gold_label") && !j.at("gold_label").is_null()) {
        int g = j.at("gold_label").get<int>();
        if (g != 1 && g != -1)
          throw Error("gold_label must be +1 or -1, got " + std::to_string(g));
        p.gold_label = g;
      }
      if (j.contains("features")) {
        for (const auto& [fid, fj] : j.at("features").items()) {
          const FeatureDef* def = schema.find(fid);
          if (!def) throw Error("unknown feature '" + fid + "'");
          FeatureValue v = feature_value_from_json(fj);
          check_value_against_schema(*def, v, "point '" + p.id + "'");
          p.features.emplace(fid, std::move(v));
        }
      }
      if (!seen_ids.insert(p.id).second)
        throw Error("duplicate id '" + p.id + "'");
      ds.points.push_back(std::move(p));
    } catch (const json::exception& e) {
      throw Error(where + ": " + e.what());
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
  }
  return ds;
}

Dataset load_dataset(const std::string& path, const FeatureSchema& schema,
                     Split split) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingArtifactError("cannot open dataset file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return dataset_from_jsonl(ss.str(), schema, split, path);
}

std::string dataset_to_jsonl(const Dataset& dataset) {
  std::string out;
  for (const DataPoint& p : dataset.points) {
    json j;
    j["format_version"] = kFormatVersion;
    j["id"] = p.id;
    j["modality"] = p.modality;
    if (p.gold_label) j["gold_label"] = *p.gold_label;
    json feats = json::object();
    for (const auto& [fid, v] : p.features) {
      if (v.is_missing()) continue;
      feats[fid] = feature_value_to_json(v);
    }
    j["features"] = feats;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void save_dataset(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write dataset file: " + path);
  out << dataset_to_jsonl(dataset);
}

std::vector<Violation> validate(const Dataset& dataset) {
  std::vector<Violation> out;
  std::unordered_set<std::string> seen_ids;
  const bool labels_required = dataset.split != Split::train_unlabeled;
  for (const DataPoint& p : dataset.points) {
    if (!seen_ids.insert(p.id).second)
      out.push_back({p.id, "id", "duplicate point id", false});
    if (labels_required && !p.gold_label)
      out.push_back({p.id, "gold_label",
                     "split " + to_string(dataset.split) +
                         " requires a gold label",
                     false});
    if (!labels_required && p.gold_label)
      out.push_back({p.id, "gold_label",
                     "train_unlabeled points must not carry gold labels",
                     false});
    if (p.gold_label && *p.gold_label != 1 && *p.gold_label != -1)
      out.push_back({p.id, "gold_label", "gold label must be +1 or -1", false});
    size_t present = 0;
    for (const auto& [fid, v] : p.features) {
      const FeatureDef* def = dataset.schema.find(fid);
      if (!def) {
        out.push_back({p.id, fid, "feature not in schema", false});
        continue;
      }
      if (!v.is_missing() && !def->available_for(p.modality))
        out.push_back({p.id, fid,
                       "feature '" + fid + "' is not available for modality '" +
                           p.modality + "'",
                       false});
      if (!v.is_missing()) {
        ++present;
        try {
          check_value_against_schema(*def, v, "point '" + p.id + "'");
        } catch (const Error& e) {
          out.push_back({p.id, fid, e.what(), false});
        }
      }
    }
    if (present == 0)
      out.push_back({p.id, "features", "every feature is missing", true});
  }
  return out;
}

}  // namespace xmodal
