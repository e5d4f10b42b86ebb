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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "cabprog/metrics.hpp"
#include "cabprog/synth.hpp"

namespace cabprog {
namespace {

const PrimitiveCatalog& cat() { return builtin_catalog(); }

PrimitiveInstance unit(double x, const char* id = "M-ASHELF") {
  PrimitiveInstance inst;
  inst.model_id = id;
  inst.name = cat().find(id) ? cat().find(id)->name : "";
  inst.box.position = {x + 0.5, 0.5, 0.5};
  inst.box.size = {1, 1, 1};
  return inst;
}

CabinetModel sample_model(std::uint64_t seed) {
  SynthSpec spec;
  spec.seed = seed;
  spec.min_instances = 4;
  return generate(spec, cat());
}

// Brute-force best total IoU over all injective pairings (n <= 7).
double best_total_iou(const CabinetModel& pred, const CabinetModel& gt) {
  const std::size_t np = pred.instances.size(), ng = gt.instances.size();
  const std::size_t n = std::max(np, ng);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < np; ++i) {
      if (perm[i] < ng) s += iou3d(pred.instances[i].box, gt.instances[perm[i]].box);
    }
    best = std::max(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(Metrics, IdenticalPredictionScoresPerfectly) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    CabinetModel m = sample_model(s);
    auto r = evaluate_sample(m, m, cat());
    EXPECT_EQ(r.precision, 1.0);
    EXPECT_EQ(r.recall, 1.0);
    EXPECT_EQ(r.f1, 1.0);
    EXPECT_EQ(r.retrieval_accuracy(), 1.0);
    EXPECT_EQ(r.param_accuracy(), 1.0);
    Matching mm = match(m, m);
    for (const auto& p : mm.pairs) EXPECT_EQ(p.iou, 1.0);
  }
}

TEST(Metrics, WrongIdsKeepF1AndZeroRetrieval) {
  CabinetModel gt{{unit(0, "M-DOOR"), unit(10, "M-FSHELF"), unit(20, "M-ASHELF")}};
  CabinetModel pred = gt;
  for (auto& inst : pred.instances) inst.model_id = "M-PANEL";
  auto r = evaluate_sample(pred, gt, cat());
  EXPECT_EQ(r.f1, 1.0);
  EXPECT_EQ(r.retrieval_accuracy(), 0.0);
  EXPECT_EQ(r.param_total, 0u);
  EXPECT_FALSE(r.param_accuracy().has_value());
}

TEST(Metrics, OneShiftedBoxOfTwo) {
  CabinetModel gt{{unit(0), unit(10)}};
  CabinetModel pred{{unit(0), unit(10.5)}};  // IoU 1/3
  auto r = evaluate_sample(pred, gt, cat());
  EXPECT_EQ(r.tp, 1u);
  EXPECT_EQ(r.fp, 1u);
  EXPECT_EQ(r.fn, 1u);
  EXPECT_EQ(r.precision, 0.5);
  EXPECT_EQ(r.recall, 0.5);
  EXPECT_EQ(r.f1, 0.5);
}

TEST(Metrics, ThresholdIsStrict) {
  // x-spans [0, 3] and [1, 4]: intersection 2, union 4, IoU exactly 0.5.
  PrimitiveInstance g = unit(0), p = unit(0);
  g.box.position.x = 1.5;
  g.box.size.x = 3;
  p.box = g.box;
  p.box.position.x = 2.5;
  ASSERT_EQ(iou3d(p.box, g.box), 0.5);
  CabinetModel gt{{g}}, pred{{p}};
  EXPECT_EQ(evaluate_sample(pred, gt, cat()).tp, 0u);
  p.box.position.x = 2.49;
  EXPECT_EQ(evaluate_sample(CabinetModel{{p}}, gt, cat()).tp, 1u);
}

TEST(Metrics, TwoPredictionsThreeTruths) {
  CabinetModel gt{{unit(0), unit(10), unit(20)}};
  CabinetModel pred{{unit(20), unit(0)}};
  Matching m = match(pred, gt);
  ASSERT_EQ(m.pairs.size(), 2u);
  EXPECT_EQ(m.unmatched_gt, std::vector<std::size_t>{1});
  EXPECT_TRUE(m.unmatched_pred.empty());
  EXPECT_EQ(m.pairs[0].gt, 2u);
  EXPECT_EQ(m.pairs[1].gt, 0u);
}

TEST(Metrics, EmptyPredictionScoresZero) {
  CabinetModel gt{{unit(0)}};
  auto r = evaluate_sample({}, gt, cat());
  EXPECT_EQ(r.fn, 1u);
  EXPECT_EQ(r.f1, 0.0);
  EXPECT_FALSE(r.retrieval_accuracy().has_value());
}

TEST(Metrics, MatchingIsOptimal) {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    auto rand_model = [&](std::int64_t n) {
      CabinetModel m;
      for (std::int64_t i = 0; i < n; ++i) {
        PrimitiveInstance inst = unit(0);
        inst.box.position = {rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 2)};
        inst.box.size = {rng.uniform(0.5, 3), rng.uniform(0.5, 3), rng.uniform(0.5, 3)};
        inst.box.rotation_deg = rng.uniform(0, 360);
        m.instances.push_back(inst);
      }
      return m;
    };
    CabinetModel pred = rand_model(rng.uniform_int(1, 6));
    CabinetModel gt = rand_model(rng.uniform_int(1, 6));
    Matching m = match(pred, gt);
    EXPECT_EQ(m.pairs.size(), std::min(pred.instances.size(), gt.instances.size()));
    EXPECT_NEAR(m.total_iou(), best_total_iou(pred, gt), 1e-9);
  }
}

TEST(Metrics, PermutationInvariance) {
  Rng rng(9);
  for (std::uint64_t s = 0; s < 30; ++s) {
    CabinetModel gt = sample_model(s);
    PerturbSpec ps;
    ps.seed = s;
    ps.position_sigma_mm = 30;
    CabinetModel pred = perturb(gt, ps, cat());
    auto base = evaluate_sample(pred, gt, cat());
    CabinetModel shuffled = pred;
    for (std::size_t i = shuffled.instances.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(shuffled.instances[i - 1], shuffled.instances[j]);
    }
    auto r = evaluate_sample(shuffled, gt, cat());
    EXPECT_EQ(r.tp, base.tp);
    EXPECT_EQ(r.f1, base.f1);
    EXPECT_EQ(r.retrieval_correct, base.retrieval_correct);
    EXPECT_EQ(r.param_correct, base.param_correct);
  }
}

TEST(Metrics, ThresholdMonotonicity) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    CabinetModel gt = sample_model(s);
    PerturbSpec ps;
    ps.seed = s + 100;
    ps.position_sigma_mm = 20;
    ps.size_sigma_mm = 20;
    CabinetModel pred = perturb(gt, ps, cat());
    double prev = 2.0;
    for (double th : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      EvalOptions o;
      o.iou_threshold = th;
      double f1 = evaluate_sample(pred, gt, cat(), o).f1;
      EXPECT_LE(f1, prev);
      prev = f1;
    }
  }
}

TEST(Metrics, ParamMatch) {
  const PrimitiveSchema& bb = *cat().find("M-BB01");
  ParamMap a{{"DBXX", EnumToken{"1"}}};
  EXPECT_TRUE(param_match(a, a, bb));
  EXPECT_FALSE(param_match(a, ParamMap{{"DBXX", EnumToken{"2"}}}, bb));
  ParamMap n300{{"NKA", 300.0}}, n301{{"NKA", 301.0}};
  EXPECT_FALSE(param_match(n300, n301, bb, 0.0));
  EXPECT_TRUE(param_match(n300, n301, bb, 2.0));
  EXPECT_TRUE(param_match(n300, ParamMap{{"NKA", std::int64_t{300}}}, bb));
  EXPECT_FALSE(param_match(n300, ParamMap{}, bb));
  EXPECT_FALSE(param_match(ParamMap{{"NKA", 300.0}, {"N", std::int64_t{1}}},
                           ParamMap{{"NKA", 300.0}, {"DBXX", EnumToken{"1"}}}, bb));
}

TEST(Metrics, RetrievalDenominatorOption) {
  CabinetModel gt{{unit(0, "M-DOOR"), unit(10, "M-DOOR")}};
  CabinetModel pred{{unit(0, "M-DOOR"), unit(10.9, "M-DOOR")}};  // second pair IoU < 0.5
  auto tp_only = evaluate_sample(pred, gt, cat());
  EXPECT_EQ(tp_only.retrieval_total, 1u);
  EvalOptions all;
  all.retrieval_over = RetrievalOver::kAllPairs;
  EXPECT_EQ(evaluate_sample(pred, gt, cat(), all).retrieval_total, 2u);
}

TEST(Metrics, CorpusMacroAndMicro) {
  // One perfect 1-box sample, one fully wrong 3-box sample.
  CabinetModel small{{unit(0)}};
  CabinetModel big{{unit(0), unit(10), unit(20)}};
  CabinetModel miss{{unit(100), unit(110), unit(120)}};
  std::vector<SampleInput> in{{"b", miss, big, {}}, {"a", small, small, {}}};
  auto rep = evaluate_corpus(in, cat());
  ASSERT_EQ(rep.samples.size(), 2u);
  EXPECT_EQ(rep.samples[0].id, "a");
  EXPECT_EQ(rep.macro.f1, 0.5);
  EXPECT_EQ(rep.micro.tp, 1u);
  EXPECT_EQ(rep.micro.precision, 0.25);
  EXPECT_EQ(rep.micro.recall, 0.25);
  EXPECT_NE(rep.macro.precision, rep.micro.precision);
}

TEST(Metrics, CorpusFailuresAndThreadIndependence) {
  std::vector<SampleInput> in;
  for (std::uint64_t s = 0; s < 40; ++s) {
    CabinetModel gt = sample_model(s);
    PerturbSpec ps;
    ps.seed = s;
    ps.position_sigma_mm = 25;
    ps.id_swap_rate = 0.2;
    in.push_back({std::to_string(1000 - s), perturb(gt, ps, cat()), gt, {}});
  }
  in.push_back({"pred-bad", std::nullopt, sample_model(77), {"parse error"}});
  in.push_back({"gt-bad", sample_model(78), std::nullopt, {"parse error"}});

  auto one = evaluate_corpus(in, cat(), {}, 1);
  auto many = evaluate_corpus(in, cat(), {}, 8);
  std::reverse(in.begin(), in.end());
  auto reversed = evaluate_corpus(in, cat(), {}, 3);
  EXPECT_EQ(one.evaluated, 41u);
  EXPECT_EQ(one.pred_failures, 1u);
  EXPECT_EQ(one.gt_failures, 1u);
  for (const auto* r : {&many, &reversed}) {
    EXPECT_EQ(r->macro.f1, one.macro.f1);
    EXPECT_EQ(r->macro.retrieval_accuracy, one.macro.retrieval_accuracy);
    EXPECT_EQ(r->micro.tp, one.micro.tp);
    ASSERT_EQ(r->samples.size(), one.samples.size());
    for (std::size_t i = 0; i < one.samples.size(); ++i) {
      EXPECT_EQ(r->samples[i].id, one.samples[i].id);
      EXPECT_EQ(r->samples[i].report.f1, one.samples[i].report.f1);
    }
  }
}

TEST(Metrics, SelfEvaluatedCorpusIsPerfect) {
  std::vector<SampleInput> in;
  for (std::uint64_t s = 0; s < 100; ++s) {
    CabinetModel m = generate(SynthSpec{derive_seed(5, s)}, cat());
    in.push_back({std::to_string(s), m, m, {}});
  }
  auto rep = evaluate_corpus(in, cat(), {}, 4);
  EXPECT_EQ(rep.macro.precision, 1.0);
  EXPECT_EQ(rep.macro.recall, 1.0);
  EXPECT_EQ(rep.macro.f1, 1.0);
  EXPECT_EQ(rep.macro.retrieval_accuracy, 1.0);
  EXPECT_EQ(rep.macro.param_accuracy, 1.0);
  EXPECT_EQ(rep.micro.f1, 1.0);
}

}  // namespace
}  // namespace cabprog
