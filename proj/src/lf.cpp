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

#include "xmodal/lf.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace xmodal {

using nlohmann::json;

std::string to_string(LfKind k) {
  switch (k) {
    case LfKind::value_match:
      return "value_match";
    case LfKind::numeric_threshold:
      return "numeric_threshold";
    case LfKind::propagation_threshold:
      return "propagation_threshold";
  }
  throw Error("unknown lf kind");
}

LfKind lf_kind_from_string(const std::string& s) {
  if (s == "value_match") return LfKind::value_match;
  if (s == "numeric_threshold") return LfKind::numeric_threshold;
  if (s == "propagation_threshold") return LfKind::propagation_threshold;
  throw Error("unknown lf kind: " + s);
}

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace

std::string LabelingFunction::params_key() const {
  switch (kind) {
    case LfKind::value_match: {
      std::string out = "vm:";
      for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i];
      }
      return out;
    }
    case LfKind::numeric_threshold:
      return std::string("nt:") + (comparator == Comparator::ge ? ">=" : "<=") +
             fmt_double(threshold);
    case LfKind::propagation_threshold:
      return "pt:" + fmt_double(theta_pos) + "," + fmt_double(theta_neg);
  }
  throw Error("unknown lf kind");
}

int apply_lf(const LabelingFunction& lf, const DataPoint& point,
             const ScoreMap* scores) {
  switch (lf.kind) {
    case LfKind::value_match: {
      const FeatureValue& v = point.feature(lf.feature_id);
      if (!v.is_categorical()) return 0;
      return v.contains_all(lf.values) ? lf.emit_label : 0;
    }
    case LfKind::numeric_threshold: {
      const FeatureValue& v = point.feature(lf.feature_id);
      if (!v.is_numeric()) return 0;
      bool fires = lf.comparator == Comparator::ge ? v.num() >= lf.threshold
                                                   : v.num() <= lf.threshold;
      return fires ? lf.emit_label : 0;
    }
    case LfKind::propagation_threshold: {
      if (!scores)
        throw Error(
            "propagation_threshold LF applied without propagation scores; "
            "run the propagate stage first");
      auto it = scores->find(point.id);
      if (it == scores->end()) return 0;
      if (it->second >= lf.theta_pos) return 1;
      if (it->second <= lf.theta_neg) return -1;
      return 0;
    }
  }
  throw Error("unknown lf kind");
}

LFStats evaluate_lf(const LabelingFunction& lf, const Dataset& dev,
                    const ScoreMap* scores) {
  // For band LFs (propagation) correct fires of either sign count toward
  // precision, but recall stays anchored to emit_label's class.
  size_t fires = 0, correct = 0, correct_in_class = 0, class_points = 0;
  for (const DataPoint& p : dev.points) {
    if (!p.gold_label)
      throw Error("evaluate_lf: dev point '" + p.id + "' lacks a gold label");
    if (*p.gold_label == lf.emit_label) ++class_points;
    int out = apply_lf(lf, p, scores);
    if (out == 0) continue;
    ++fires;
    if (out == *p.gold_label) {
      ++correct;
      if (*p.gold_label == lf.emit_label) ++correct_in_class;
    }
  }
  if (class_points == 0)
    throw Error("evaluate_lf: dev has no points of class " +
                std::to_string(lf.emit_label) + "; recall is undefined");
  LFStats s;
  s.n_fired = fires;
  s.degenerate = fires == 0;
  s.precision = fires == 0 ? 1.0
                           : static_cast<double>(correct) /
                                 static_cast<double>(fires);
  s.recall = static_cast<double>(correct_in_class) /
             static_cast<double>(class_points);
  s.coverage = dev.points.empty()
                   ? 0.0
                   : static_cast<double>(fires) /
                         static_cast<double>(dev.points.size());
  return s;
}

namespace {

json lf_to_json(const LabelingFunction& lf, const LFStats& st) {
  json j;
  j["lf_id"] = lf.lf_id;
  j["kind"] = to_string(lf.kind);
  j["feature_id"] = lf.feature_id;
  j["emit_label"] = lf.emit_label;
  json params;
  switch (lf.kind) {
    case LfKind::value_match:
      params["values"] = lf.values;
      break;
    case LfKind::numeric_threshold:
      params["comparator"] = lf.comparator == Comparator::ge ? ">=" : "<=";
      params["threshold"] = lf.threshold;
      break;
    case LfKind::propagation_threshold:
      params["theta_pos"] = lf.theta_pos;
      params["theta_neg"] = lf.theta_neg;
      params["scores_ref"] = lf.scores_ref;
      break;
  }
  j["params"] = params;
  j["servable"] = lf.servable;
  j["stats"] = {{"precision", st.precision},
                {"recall", st.recall},
                {"coverage", st.coverage},
                {"n_fired", st.n_fired},
                {"degenerate", st.degenerate}};
  return j;
}

std::pair<LabelingFunction, LFStats> lf_from_json(const json& j) {
  LabelingFunction lf;
  lf.lf_id = j.at("lf_id").get<std::string>();
  lf.kind = lf_kind_from_string(j.at("kind").get<std::string>());
  lf.feature_id = j.at("feature_id").get<std::string>();
  lf.emit_label = j.at("emit_label").get<int>();
  if (lf.emit_label != 1 && lf.emit_label != -1)
    throw Error("lf emit_label must be +1 or -1");
  const json& params = j.at("params");
  switch (lf.kind) {
    case LfKind::value_match:
      lf.values = params.at("values").get<std::vector<std::string>>();
      if (lf.values.empty()) throw Error("value_match needs tokens");
      std::sort(lf.values.begin(), lf.values.end());
      break;
    case LfKind::numeric_threshold:
      lf.comparator = params.at("comparator").get<std::string>() == ">="
                          ? Comparator::ge
                          : Comparator::le;
      lf.threshold = params.at("threshold").get<double>();
      break;
    case LfKind::propagation_threshold:
      lf.theta_pos = params.at("theta_pos").get<double>();
      lf.theta_neg = params.at("theta_neg").get<double>();
      lf.scores_ref = params.value("scores_ref", std::string());
      break;
  }
  lf.servable = j.value("servable", true);
  LFStats st;
  if (j.contains("stats")) {
    const json& s = j.at("stats");
    st.precision = s.value("precision", 0.0);
    st.recall = s.value("recall", 0.0);
    st.coverage = s.value("coverage", 0.0);
    st.n_fired = s.value("n_fired", size_t{0});
    st.degenerate = s.value("degenerate", false);
  }
  return {lf, st};
}

}  // namespace

std::string lfs_to_jsonl(const std::vector<LabelingFunction>& lfs,
                         const std::vector<LFStats>& stats) {
  if (lfs.size() != stats.size())
    throw Error("lfs_to_jsonl: lf/stats length mismatch");
  std::string out;
  for (size_t i = 0; i < lfs.size(); ++i) {
    out += lf_to_json(lfs[i], stats[i]).dump();
    out += '\n';
  }
  return out;
}

void save_lfs(const std::vector<LabelingFunction>& lfs,
              const std::vector<LFStats>& stats, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write lf file: " + path);
  out << lfs_to_jsonl(lfs, stats);
}

std::pair<std::vector<LabelingFunction>, std::vector<LFStats>> load_lfs(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingArtifactError("cannot open lf file: " + path);
  std::vector<LabelingFunction> lfs;
  std::vector<LFStats> stats;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      auto [lf, st] = lf_from_json(json::parse(line));
      lfs.push_back(std::move(lf));
      stats.push_back(st);
    } catch (const json::exception& e) {
      throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return {std::move(lfs), std::move(stats)};
}

}  // namespace xmodal
