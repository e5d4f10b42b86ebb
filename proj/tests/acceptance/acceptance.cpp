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


// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "../cli_fixtures.hpp"
#include "../test_support.hpp"
#include "cabprog/cabprog.hpp"

namespace cabprog {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const PrimitiveCatalog& cat() { return builtin_catalog(); }

// 1. Lossless Python and YAML round trips.
Outcome round_trip() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(101);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    CabinetModel m = testing::random_model(cat(), rng);
    auto py = parse_python(emit_python(m, cat()), cat(), true);
    auto ya = parse_yaml(emit_yaml(m, cat()), cat(), true);
    if (!py.ok() || py.value() != m || !ya.ok() || ya.value() != m) ++bad;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(bad == 0, std::to_string(bad) + " of 1000 models changed");
  o.require(secs < 10.0, "took " + fmt("%.2f", secs) + " s");
  o.note("1000 models x 2 syntaxes, " + fmt("%.2f", secs) + " s");
  return o;
}

// 2. Optimal matching against exhaustive search.
double brute_force_total(const CabinetModel& pred, const CabinetModel& gt) {
  const std::size_t n = std::max(pred.instances.size(), gt.instances.size());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double sum = 0.0;
    for (std::size_t r = 0; r < pred.instances.size(); ++r) {
      if (perm[r] < gt.instances.size()) {
        sum += iou3d(pred.instances[r].box, gt.instances[perm[r]].box);
      }
    }
    best = std::max(best, sum);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CabinetModel cluster(Rng& rng, int n) {
  CabinetModel m;
  for (int i = 0; i < n; ++i) {
    PrimitiveInstance inst{"M-PANEL", "Panel", {}, {}};
    for (int k = 0; k < 3; ++k) {
      inst.box.size[k] = testing::tenth(rng, 40.0, 300.0);
      inst.box.position[k] = testing::tenth(rng, 300.0, 600.0);
    }
    inst.box.rotation_deg = rng.bernoulli(0.5) ? 0.0 : testing::tenth(rng, 0.0, 359.9);
    m.instances.push_back(inst);
  }
  return m;
}

Outcome hungarian() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(202);
  std::size_t bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    CabinetModel pred = cluster(rng, static_cast<int>(rng.uniform_int(1, 7)));
    CabinetModel gt = cluster(rng, static_cast<int>(rng.uniform_int(1, 7)));
    Matching m = match(pred, gt);
    const double diff = std::abs(m.total_iou() - brute_force_total(pred, gt));
    worst = std::max(worst, diff);
    if (diff > 1e-9 ||
        m.pairs.size() != std::min(pred.instances.size(), gt.instances.size())) {
      ++bad;
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(bad == 0, std::to_string(bad) + " of 500 pairs differ");
  o.require(secs < 30.0, "took " + fmt("%.2f", secs) + " s");
  o.note("500 pairs, max |diff| " + fmt("%.1e", worst) + ", " + fmt("%.2f", secs) + " s");
  return o;
}

// 3. IoU kernel.
double aabb_oracle(const OrientedBox& a, const OrientedBox& b) {
  auto extent = [](const OrientedBox& x, int k) {
    const bool swapped = std::fmod(std::abs(x.rotation_deg), 180.0) == 90.0;
    if (k == 0) return swapped ? x.size.y : x.size.x;
    if (k == 1) return swapped ? x.size.x : x.size.y;
    return x.size.z;
  };
  double inter = 1.0, va = 1.0, vb = 1.0;
  for (int k = 0; k < 3; ++k) {
    const double ea = extent(a, k), eb = extent(b, k);
    const double lo = std::max(a.position[k] - ea / 2, b.position[k] - eb / 2);
    const double hi = std::min(a.position[k] + ea / 2, b.position[k] + eb / 2);
    inter *= std::max(0.0, hi - lo);
    va *= ea;
    vb *= eb;
  }
  return inter / (va + vb - inter);
}

Outcome iou_kernel() {
  Outcome o;
  OrientedBox a{{5, 5, 5}, {2, 2, 2}, 0};
  o.require(iou3d(a, a) == 1.0, "identical boxes");
  OrientedBox b{{6, 5, 5}, {2, 2, 2}, 0};
  const double off = iou3d(a, b);
  o.require(std::abs(off - 1.0 / 3.0) <= 1e-9, "offset cube " + fmt("%.12f", off));
  Rng rng(303);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    OrientedBox x, y;
    for (OrientedBox* box : {&x, &y}) {
      for (int k = 0; k < 3; ++k) {
        box->size[k] = rng.uniform(1.0, 60.0);
        box->position[k] = rng.uniform(40.0, 100.0);
      }
      box->rotation_deg = 90.0 * static_cast<double>(rng.uniform_int(0, 3));
    }
    worst = std::max(worst, std::abs(iou3d(x, y) - aabb_oracle(x, y)));
  }
  o.require(worst <= 1e-9, "max deviation " + fmt("%.3e", worst));
  o.note("offset cube " + fmt("%.12f", off) + ", 10k right-angle pairs max dev " +
         fmt("%.1e", worst));
  return o;
}

// 4. Protocol constants.
Outcome constants() {
  Outcome o;
  o.require(kTruePositiveIou == 0.5, "TP IoU");
  // Strictly greater: exactly 0.5 is not a true positive.
  CabinetModel gt{{{"M-PANEL", "Panel", {{1.5, 1, 1}, {3, 2, 2}, 0}, {}}}};
  CabinetModel pred{{{"M-PANEL", "Panel", {{2.5, 1, 1}, {3, 2, 2}, 0}, {}}}};
  o.require(iou3d(pred.instances[0].box, gt.instances[0].box) == 0.5 &&
                evaluate_sample(pred, gt, cat()).tp == 0,
            "IoU 0.5 counted as TP");
  o.require(kLengthBins == 1500 && kLengthResolutionMm == 3.0, "length bins");
  o.require(kRotationBins == 4 && kTokensPerCommand == 8, "rotation bins");
  o.require(kMinCabinetExtentMm == 100.0 && kMaxCabinetExtentMm == 4500.0, "extent filter");
  o.require(kMaxPrimitives == 48, "primitive filter");
  o.require(kDefaultCanvasPx == 512 && LayoutOptions{}.canvas_px == 512, "canvas");
  o.note("IoU > 0.5, 1500 x 3 mm, 4 rotation bins, 0.1-4.5 m, <= 48, 512 px");
  return o;
}

// 5. Codec quantization and decoded IoU.
Outcome codec() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(505);
  double worst_err = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = rng.uniform(0.0, 4497.0);
    worst_err = std::max(worst_err, std::abs(dequantize_length(quantize_length(v)) - v));
  }
  o.require(worst_err <= 1.5, "quantization error " + fmt("%.4f", worst_err));

  auto decoded_iou = [](const OrientedBox& box) {
    CabinetModel m{{{"M-PANEL", "Panel", box, {}}}};
    auto back = decode(encode(m, cat()).value(), cat());
    return iou3d(box, back->instances[0].box);
  };
  // Random boxes with extents of at least 300 mm and at least 450 mm.
  double min300 = 1.0, min450 = 1.0;
  for (int i = 0; i < 100000; ++i) {
    OrientedBox b;
    const double floor_mm = i % 2 == 0 ? 300.0 : 450.0;
    for (int k = 0; k < 3; ++k) {
      b.size[k] = rng.uniform(floor_mm, 2000.0);
      b.position[k] = rng.uniform(1000.0, 2997.0);
    }
    b.rotation_deg = 90.0 * static_cast<double>(rng.uniform_int(0, 3));
    const double iou = decoded_iou(b);
    min300 = std::min(min300, iou);
    if (floor_mm == 450.0) min450 = std::min(min450, iou);
  }
  // Worst placement on the grid: 300 mm cube with its centre on a bin edge.
  const OrientedBox edge300{{1500, 1500, 1500}, {300, 300, 300}, 0};
  const OrientedBox edge450{{1500, 1500, 1500}, {450, 450, 450}, 0};
  min300 = std::min(min300, decoded_iou(edge300));
  min450 = std::min(min450, decoded_iou(edge450));
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(min300 >= 0.98, "min decoded IoU for extents >= 300 mm is " +
                                fmt("%.6f", min300) + " < 0.98 (grid-edge cube)");
  o.require(secs < 5.0, "took " + fmt("%.2f", secs) + " s");
  o.note("max quantization error " + fmt("%.4f", worst_err) + " mm");
  o.note("min IoU >= 450 mm " + fmt("%.6f", min450));
  o.note(fmt("%.2f", secs) + " s");
  return o;
}

// 6. Metric sanity.
Outcome metric_sanity() {
  Outcome o;
  SynthSpec four;
  four.min_instances = 4;
  four.max_instances = 4;
  for (std::uint64_t i = 0; i < 100; ++i) {
    CabinetModel gt = generate(SynthSpec{derive_seed(606, i)}, cat());
    auto self = evaluate_sample(gt, gt, cat());
    o.require(self.precision == 1.0 && self.recall == 1.0 && self.f1 == 1.0 &&
                  self.retrieval_accuracy() == 1.0 && self.param_accuracy() == 1.0,
              "pred == gt not perfect at " + std::to_string(i));
    PerturbSpec swap{.seed = i};
    swap.id_swap_rate = 1.0;
    auto swapped = evaluate_sample(perturb(gt, swap, cat()), gt, cat());
    o.require(swapped.f1 == self.f1 && swapped.retrieval_accuracy() == 0.0,
              "id swap at " + std::to_string(i));
    four.seed = derive_seed(607, i);
    CabinetModel g4 = generate(four, cat());
    PerturbSpec drop{.seed = i};
    drop.drop_count = 1;
    auto dropped = evaluate_sample(perturb(g4, drop, cat()), g4, cat());
    o.require(dropped.recall == 0.75 && dropped.precision == 1.0,
              "drop one of four at " + std::to_string(i));
  }
  o.note("100 cabinets: identity, full id swap, one of four dropped");
  return o;
}

// 7. F1 degrades with positional noise.
Outcome noise_monotonic() {
  Outcome o;
  double f10 = 0.0, f50 = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    CabinetModel gt = generate(SynthSpec{derive_seed(707, i)}, cat());
    f10 += evaluate_sample(perturb(gt, PerturbSpec{.seed = i, .position_sigma_mm = 10.0}, cat()), gt, cat()).f1;
    f50 += evaluate_sample(perturb(gt, PerturbSpec{.seed = i, .position_sigma_mm = 50.0}, cat()), gt, cat()).f1;
  }
  f10 /= 200.0;
  f50 /= 200.0;
  o.require(f50 <= f10 - 0.02, "margin " + fmt("%.4f", f10 - f50));
  o.note("mean F1 sigma=10: " + fmt("%.4f", f10) + ", sigma=50: " + fmt("%.4f", f50));
  return o;
}

// 8. Layer separation and label fidelity.
Outcome drawing_layers() {
  Outcome o;
  constexpr ViewKind kThree[] = {ViewKind::kFront, ViewKind::kTop, ViewKind::kSide};
  Style geometry_only;
  geometry_only.annotation_layer = false;
  const std::regex text_re(R"(<text[^>]*>([^<]*)</text>)");
  std::size_t labels_checked = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    CabinetModel m = generate(SynthSpec{derive_seed(808, i)}, cat());
    auto views = annotate(render_views(m, kThree), m, cat());
    std::multiset<long long> spans;
    for (const auto& v : views) {
      for (const auto& a : v.annotations) {
        if (const auto* d = std::get_if<DimensionSet>(&a)) spans.insert(std::llround(d->span()));
      }
    }
    Sheet sheet = layout_sheet(views);
    const std::string full = to_svg(sheet);
    const std::string geo = to_svg(sheet, geometry_only);
    o.require(geo == testing::strip_group(full, "annotation"),
              "layer mismatch at " + std::to_string(i));
    std::multiset<long long> parsed;
    for (auto it = std::sregex_iterator(full.begin(), full.end(), text_re);
         it != std::sregex_iterator(); ++it) {
      parsed.insert(std::stoll((*it)[1].str()));
    }
    o.require(parsed == spans, "labels differ at " + std::to_string(i));
    labels_checked += parsed.size();
  }
  o.note("50 cabinets, " + std::to_string(labels_checked) + " labels");
  return o;
}

// 9. CLI determinism and golden transcripts.
Outcome cli_determinism() {
  Outcome o;
  const fs::path src = CABPROG_SOURCE_DIR;
  const fs::path base = fs::temp_directory_path() /
                        ("cabprog_acceptance_" + std::to_string(::getpid()));
  const auto& fixtures = testing::cli_fixtures();
  o.require(fixtures.size() >= 10, "only " + std::to_string(fixtures.size()) + " fixtures");
  for (const auto& f : fixtures) {
    const std::string a =
        testing::run_cli_fixture(f, CABPROG_CLI, src / "tests/fixtures", base / "a");
    const std::string b =
        testing::run_cli_fixture(f, CABPROG_CLI, src / "tests/fixtures", base / "b");
    o.require(a == b, f.name + " differs between runs");
    o.require(a == testing::read_all(src / "tests/golden/cli" / (f.name + ".txt")),
              f.name + " differs from golden");
  }
  fs::remove_all(base);
  o.note(std::to_string(fixtures.size()) + " fixtures run twice");
  return o;
}

// 10. YAML is more verbose than Python.
Outcome verbosity() {
  Outcome o;
  int longer = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CabinetModel m = generate(SynthSpec{derive_seed(1010, i)}, cat());
    if (emit_yaml(m, cat()).size() > emit_python(m, cat()).size()) ++longer;
  }
  const double share = longer / 10.0;
  o.require(longer >= 950, "YAML longer for only " + fmt("%.1f", share) + "%");
  o.note("YAML longer for " + fmt("%.1f", share) + "% of 1000 cabinets");
  return o;
}

}  // namespace
}  // namespace cabprog

int main() {
  using namespace cabprog;
  const std::array<std::pair<const char*, std::function<Outcome()>>, 10> criteria{{
      {"AC1 round-trip", round_trip},
      {"AC2 hungarian", hungarian},
      {"AC3 iou", iou_kernel},
      {"AC4 constants", constants},
      {"AC5 codec", codec},
      {"AC6 metric-sanity", metric_sanity},
      {"AC7 noise-f1", noise_monotonic},
      {"AC8 drawing-layers", drawing_layers},
      {"AC9 cli-determinism", cli_determinism},
      {"AC10 yaml-verbosity", verbosity},
  }};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o = run();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
