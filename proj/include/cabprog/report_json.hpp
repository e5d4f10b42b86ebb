// Copyright 2026 The cabprog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON serialization of evaluation reports (schema "cabprog.report/1") and
// corpus statistics ("cabprog.stats/1"). Field names mirror the C++ structs;
// undefined ratios are null.

#include <map>
#include <optional>
#include <string>

#include <json.hpp>  // nlohmann, vendored

#include "cabprog/geometry.hpp"
#include "cabprog/metrics.hpp"
#include "cabprog/synth.hpp"

namespace cabprog {

inline constexpr std::string_view kReportSchema = "cabprog.report/1";
inline constexpr std::string_view kStatsSchema = "cabprog.stats/1";

namespace detail {

inline nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline nlohmann::ordered_json sample_json(const SampleResult& s) {
  const SampleReport& r = s.report;
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["status"] = std::string(to_string(s.status));
  if (!s.errors.empty()) j["errors"] = s.errors;
  if (s.status == SampleStatus::kGtFailed) return j;
  j["num_pred"] = r.num_pred;
  j["num_gt"] = r.num_gt;
  j["tp"] = r.tp;
  j["fp"] = r.fp;
  j["fn"] = r.fn;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["retrieval_correct"] = r.retrieval_correct;
  j["retrieval_total"] = r.retrieval_total;
  j["retrieval_accuracy"] = optional_number(r.retrieval_accuracy());
  j["param_correct"] = r.param_correct;
  j["param_total"] = r.param_total;
  j["param_accuracy"] = optional_number(r.param_accuracy());
  return j;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const CorpusReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = std::string(kReportSchema);
  j["options"] = {
      {"iou_threshold", report.options.iou_threshold},
      {"iou_mode",
       report.options.iou_mode == IouMode::kRotated ? "rotated" : "aabb"},
      {"retrieval_over", report.options.retrieval_over ==
                                 RetrievalOver::kTruePositives
                             ? "tp"
                             : "all"},
      {"length_tol_mm", report.options.length_tol_mm},
  };
  j["counts"] = {
      {"samples", report.samples.size()},
      {"evaluated", report.evaluated},
      {"pred_failures", report.pred_failures},
      {"gt_failures", report.gt_failures},
  };
  const MacroMetrics& ma = report.macro;
  j["macro"] = {
      {"precision", ma.precision},
      {"recall", ma.recall},
      {"f1", ma.f1},
      {"retrieval_accuracy", detail::optional_number(ma.retrieval_accuracy)},
      {"param_accuracy", detail::optional_number(ma.param_accuracy)},
  };
  const MicroMetrics& mi = report.micro;
  j["micro"] = {
      {"num_pred", mi.num_pred},
      {"num_gt", mi.num_gt},
      {"tp", mi.tp},
      {"fp", mi.fp},
      {"fn", mi.fn},
      {"precision", mi.precision},
      {"recall", mi.recall},
      {"f1", mi.f1},
      {"retrieval_correct", mi.retrieval_correct},
      {"retrieval_total", mi.retrieval_total},
      {"retrieval_accuracy", detail::optional_number(mi.retrieval_accuracy)},
      {"param_correct", mi.param_correct},
      {"param_total", mi.param_total},
      {"param_accuracy", detail::optional_number(mi.param_accuracy)},
  };
  ordered_json samples = ordered_json::array();
  for (const auto& s : report.samples) samples.push_back(detail::sample_json(s));
  j["samples"] = std::move(samples);
  return j;
}

inline std::string report_to_string(const CorpusReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

namespace detail {

inline nlohmann::ordered_json histogram_json(
    const std::map<std::size_t, std::size_t>& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

}  // namespace detail

inline std::string stats_to_string(const CorpusStats& s) {
  nlohmann::ordered_json j;
  j["schema"] = std::string(kStatsSchema);
  j["cabinets"] = s.cabinets;
  j["total_primitives"] = s.total_primitives;
  j["unique_primitives"] = s.unique_primitives;
  j["distinct_params"] = s.distinct_params;
  j["primitives_per_cabinet"] = detail::histogram_json(s.primitives_per_cabinet);
  j["params_per_primitive"] = detail::histogram_json(s.params_per_primitive);
  j["params_per_instance"] = detail::histogram_json(s.params_per_instance);
  return j.dump(2) + "\n";
}

}  // namespace cabprog
