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

// Primitive-level evaluation of predicted cabinets against ground truth:
// optimal one-to-one box matching, true-positive thresholding, precision /
// recall / F1, model retrieval accuracy and parameter accuracy.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "cabprog/assignment.hpp"
#include "cabprog/catalog.hpp"
#include "cabprog/constants.hpp"
#include "cabprog/geometry.hpp"
#include "cabprog/model.hpp"

namespace cabprog {

struct MatchPair {
  std::size_t pred = 0;
  std::size_t gt = 0;
  double iou = 0.0;

  friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

struct Matching {
  std::vector<MatchPair> pairs;  // sorted by pred index
  std::vector<std::size_t> unmatched_pred;
  std::vector<std::size_t> unmatched_gt;

  // Sum of pair IoUs, accumulated in pred-index order.
  double total_iou() const {
    double sum = 0.0;
    for (const auto& p : pairs) sum += p.iou;
    return sum;
  }
};

// Pairs predicted and ground-truth boxes so that the summed IoU is maximal.
// The cost matrix 1 - IoU is padded to square with IoU-0 dummies; a box paired
// with a dummy is reported unmatched. Real pairs with IoU 0 are kept, so the
// pair count is always min(#pred, #gt).
inline Matching match(const CabinetModel& pred, const CabinetModel& gt,
                      IouMode mode = IouMode::kRotated) {
  const std::size_t np = pred.instances.size();
  const std::size_t ng = gt.instances.size();
  const std::size_t n = std::max(np, ng);
  std::vector<double> iou(np * ng, 0.0);
  CostMatrix cost(n, 1.0);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < ng; ++j) {
      iou[i * ng + j] = iou3d(pred.instances[i].box, gt.instances[j].box, mode);
      cost(i, j) = 1.0 - iou[i * ng + j];
    }
  }
  const auto col_of_row = solve_assignment(cost);

  Matching m;
  std::vector<bool> gt_taken(ng, false);
  for (std::size_t i = 0; i < np; ++i) {
    std::size_t j = col_of_row[i];
    if (j < ng) {
      m.pairs.push_back({i, j, iou[i * ng + j]});
      gt_taken[j] = true;
    } else {
      m.unmatched_pred.push_back(i);
    }
  }
  for (std::size_t j = 0; j < ng; ++j) {
    if (!gt_taken[j]) m.unmatched_gt.push_back(j);
  }
  return m;
}

enum class RetrievalOver {
  kTruePositives,  // only IoU-qualified pairs
  kAllPairs,       // every matched pair
};

struct EvalOptions {
  double iou_threshold = kTruePositiveIou;
  RetrievalOver retrieval_over = RetrievalOver::kTruePositives;
  double length_tol_mm = 0.0;
  IouMode iou_mode = IouMode::kRotated;
};

struct SampleReport {
  std::size_t num_pred = 0;
  std::size_t num_gt = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t retrieval_correct = 0;
  std::size_t retrieval_total = 0;
  std::size_t param_correct = 0;
  std::size_t param_total = 0;

  std::optional<double> retrieval_accuracy() const {
    if (retrieval_total == 0) return std::nullopt;
    return static_cast<double>(retrieval_correct) /
           static_cast<double>(retrieval_total);
  }
  std::optional<double> param_accuracy() const {
    if (param_total == 0) return std::nullopt;
    return static_cast<double>(param_correct) / static_cast<double>(param_total);
  }
};

inline double safe_ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

inline double f1_score(double p, double r) {
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

namespace detail {

inline std::optional<double> as_length(const ParamValue& v) {
  if (auto* d = std::get_if<double>(&v)) return *d;
  if (auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::nullopt;
}

}  // namespace detail

// True iff both maps have the same key set and every value agrees: lengths
// within length_tol_mm, everything else exactly after canonicalization. Keys
// unknown to the schema (or a null schema) compare exactly.
inline bool param_match(const ParamMap& a, const ParamMap& b,
                        const PrimitiveSchema* schema,
                        double length_tol_mm = 0.0) {
  if (a.size() != b.size()) return false;
  for (const auto& [key, va] : a) {
    const ParamValue* vb = b.find(key);
    if (vb == nullptr) return false;
    const ParamSchema* ps = schema != nullptr ? schema->find(key) : nullptr;
    if (ps == nullptr) {
      if (!(va == *vb)) return false;
      continue;
    }
    ParamValue ca = canonicalize(*ps, va);
    ParamValue cb = canonicalize(*ps, *vb);
    if (ps->kind == ParamKind::kLengthMm) {
      auto la = detail::as_length(ca);
      auto lb = detail::as_length(cb);
      if (la && lb) {
        if (!(std::abs(*la - *lb) <= length_tol_mm)) return false;
        continue;
      }
    }
    if (!(ca == cb)) return false;
  }
  return true;
}

inline bool param_match(const ParamMap& a, const ParamMap& b,
                        const PrimitiveSchema& schema,
                        double length_tol_mm = 0.0) {
  return param_match(a, b, &schema, length_tol_mm);
}

// Evaluates one prediction against its ground truth. An empty prediction is
// allowed and scores zero everywhere.
inline SampleReport evaluate_sample(const CabinetModel& pred,
                                    const CabinetModel& gt,
                                    const PrimitiveCatalog& catalog,
                                    const EvalOptions& options = {}) {
  SampleReport r;
  r.num_pred = pred.instances.size();
  r.num_gt = gt.instances.size();
  if (r.num_pred > 0 && r.num_gt > 0) {
    const Matching m = match(pred, gt, options.iou_mode);
    for (const auto& pair : m.pairs) {
      const bool tp = pair.iou > options.iou_threshold;
      if (tp) ++r.tp;
      if (!tp && options.retrieval_over == RetrievalOver::kTruePositives) {
        continue;
      }
      const auto& p = pred.instances[pair.pred];
      const auto& g = gt.instances[pair.gt];
      ++r.retrieval_total;
      if (p.model_id != g.model_id) continue;
      ++r.retrieval_correct;
      ++r.param_total;
      if (param_match(p.params, g.params, catalog.find(g.model_id),
                      options.length_tol_mm)) {
        ++r.param_correct;
      }
    }
  }
  r.fp = r.num_pred - r.tp;
  r.fn = r.num_gt - r.tp;
  r.precision = safe_ratio(r.tp, r.num_pred);
  r.recall = safe_ratio(r.tp, r.num_gt);
  r.f1 = f1_score(r.precision, r.recall);
  return r;
}

// ---------------------------------------------------------------------------
// Corpus evaluation

enum class SampleStatus {
  kOk,
  kPredFailed,  // prediction unreadable; scored as an empty prediction
  kGtFailed,    // ground truth unreadable; excluded from aggregation
};

inline std::string_view to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::kOk: return "ok";
    case SampleStatus::kPredFailed: return "pred_failed";
    case SampleStatus::kGtFailed: return "gt_failed";
  }
  return "?";
}

struct SampleInput {
  std::string id;
  std::optional<CabinetModel> pred;  // nullopt: failed to load
  std::optional<CabinetModel> gt;
  std::vector<std::string> errors;   // reasons for a failed load
};

struct SampleResult {
  std::string id;
  SampleStatus status = SampleStatus::kOk;
  std::vector<std::string> errors;
  SampleReport report;
};

// Means over evaluated samples. Retrieval and parameter accuracy average only
// over samples where they are defined (non-zero denominator).
struct MacroMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> retrieval_accuracy;
  std::optional<double> param_accuracy;
};

// Metrics from counts summed over evaluated samples.
struct MicroMetrics {
  std::size_t num_pred = 0;
  std::size_t num_gt = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t retrieval_correct = 0;
  std::size_t retrieval_total = 0;
  std::size_t param_correct = 0;
  std::size_t param_total = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> retrieval_accuracy;
  std::optional<double> param_accuracy;
};

struct CorpusReport {
  EvalOptions options;
  std::vector<SampleResult> samples;  // sorted by id
  std::size_t evaluated = 0;
  std::size_t pred_failures = 0;
  std::size_t gt_failures = 0;
  MacroMetrics macro;
  MicroMetrics micro;
};

// Evaluates every sample (on up to `jobs` threads) and aggregates in id order,
// so the report does not depend on input order or thread count.
inline CorpusReport evaluate_corpus(std::span<const SampleInput> inputs,
                                    const PrimitiveCatalog& catalog,
                                    const EvalOptions& options = {},
                                    unsigned jobs = 1) {
  CorpusReport out;
  out.options = options;
  out.samples.resize(inputs.size());

  auto evaluate_one = [&](std::size_t i) {
    const SampleInput& in = inputs[i];
    SampleResult& res = out.samples[i];
    res.id = in.id;
    res.errors = in.errors;
    if (!in.gt) {
      res.status = SampleStatus::kGtFailed;
      return;
    }
    static const CabinetModel kEmpty;
    if (!in.pred) res.status = SampleStatus::kPredFailed;
    res.report = evaluate_sample(in.pred ? *in.pred : kEmpty, *in.gt, catalog,
                                 options);
  };

  jobs = std::max(1u, std::min<unsigned>(
                          jobs, static_cast<unsigned>(inputs.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) evaluate_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) {
          evaluate_one(i);
        }
      });
    }
  }

  std::stable_sort(out.samples.begin(), out.samples.end(),
                   [](const SampleResult& a, const SampleResult& b) {
                     return a.id < b.id;
                   });

  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0, sum_ret = 0.0, sum_par = 0.0;
  std::size_t n_ret = 0, n_par = 0;
  MicroMetrics& mi = out.micro;
  for (const auto& s : out.samples) {
    if (s.status == SampleStatus::kGtFailed) {
      ++out.gt_failures;
      continue;
    }
    if (s.status == SampleStatus::kPredFailed) ++out.pred_failures;
    ++out.evaluated;
    const SampleReport& r = s.report;
    sum_p += r.precision;
    sum_r += r.recall;
    sum_f += r.f1;
    if (auto a = r.retrieval_accuracy()) {
      sum_ret += *a;
      ++n_ret;
    }
    if (auto a = r.param_accuracy()) {
      sum_par += *a;
      ++n_par;
    }
    mi.num_pred += r.num_pred;
    mi.num_gt += r.num_gt;
    mi.tp += r.tp;
    mi.fp += r.fp;
    mi.fn += r.fn;
    mi.retrieval_correct += r.retrieval_correct;
    mi.retrieval_total += r.retrieval_total;
    mi.param_correct += r.param_correct;
    mi.param_total += r.param_total;
  }
  if (out.evaluated > 0) {
    const auto n = static_cast<double>(out.evaluated);
    out.macro.precision = sum_p / n;
    out.macro.recall = sum_r / n;
    out.macro.f1 = sum_f / n;
  }
  if (n_ret > 0) out.macro.retrieval_accuracy = sum_ret / static_cast<double>(n_ret);
  if (n_par > 0) out.macro.param_accuracy = sum_par / static_cast<double>(n_par);
  mi.precision = safe_ratio(mi.tp, mi.num_pred);
  mi.recall = safe_ratio(mi.tp, mi.num_gt);
  mi.f1 = f1_score(mi.precision, mi.recall);
  if (mi.retrieval_total > 0) {
    mi.retrieval_accuracy = safe_ratio(mi.retrieval_correct, mi.retrieval_total);
  }
  if (mi.param_total > 0) {
    mi.param_accuracy = safe_ratio(mi.param_correct, mi.param_total);
  }
  return out;
}

}  // namespace cabprog
