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

// Seeded synthetic cabinets, degraded "predictions" derived from them, and
// corpus statistics.
//
// A generated cabinet is built bottom-up from a base box:
//
//   +-----------------------------+  top fixed shelf
//   |   |        |       |    |   |
//   | P | comp 0 |  div  | ...| P |  side panels P, dividers between
//   |   |        |       |    |   |  compartments
//   +-----------------------------+
//   |          base box           |  N compartments, widths NKA, NKB, ...
//   +-----------------------------+
//
// Each compartment holds open shelves, a door with shelves behind it, or a
// stack of drawers. All coordinates are whole millimetres and instances never
// share interior volume.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cabprog/catalog.hpp"
#include "cabprog/constants.hpp"
#include "cabprog/geometry.hpp"
#include "cabprog/model.hpp"
#include "cabprog/rng.hpp"

namespace cabprog {

struct SynthSpec {
  std::uint64_t seed = 0;
  int min_instances = 1;
  int max_instances = kMaxPrimitives;
  // Bounds on the largest overall dimension.
  double min_extent_mm = kMinCabinetExtentMm;
  double max_extent_mm = kMaxCabinetExtentMm;
};

// Seed of the i-th member of a corpus generated from `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

namespace detail {

// Axis-aligned box from min/max corners.
inline OrientedBox span_box(double x0, double x1, double y0, double y1,
                            double z0, double z1) {
  OrientedBox b;
  b.position = {(x0 + x1) / 2.0, (y0 + y1) / 2.0, (z0 + z1) / 2.0};
  b.size = {x1 - x0, y1 - y0, z1 - z0};
  return b;
}

inline const PrimitiveSchema& role_schema(const PrimitiveCatalog& catalog,
                                          PrimitiveRole role) {
  auto found = catalog.with_role(role);
  if (found.empty()) {
    throw std::invalid_argument("catalog has no primitive with role " +
                                std::string(to_string(role)));
  }
  return *found.front();
}

class CabinetBuilder {
 public:
  CabinetBuilder(const PrimitiveCatalog& catalog, Rng& rng)
      : catalog_(catalog), rng_(rng), t_(catalog.divider_thickness_mm()) {}

  CabinetModel build(double width, double height, double depth) {
    model_ = {};
    const double t = t_;
    const double base_h = static_cast<double>(rng_.uniform_int(60, 150));
    const double inner_w = width - 2.0 * t;
    const double top_z = height - t;

    // At most one compartment per 150 mm of interior width.
    std::int64_t max_n = 1;
    while (max_n < 6 && inner_w - max_n * t >= (max_n + 1) * 150.0) ++max_n;
    const std::int64_t n = rng_.uniform_int(1, max_n);
    std::vector<double> widths = split_width(inner_w - (n - 1) * t, n);

    const PrimitiveSchema& base = role_schema(catalog_, PrimitiveRole::kBaseBox);
    PrimitiveInstance base_inst = make(base, span_box(0, width, 0, depth, 0, base_h));
    base_inst.params = base_params(base, n, widths);
    model_.instances.push_back(std::move(base_inst));

    const PrimitiveSchema& panel = role_schema(catalog_, PrimitiveRole::kSidePanel);
    const PrimitiveSchema& fixed = role_schema(catalog_, PrimitiveRole::kFixedShelf);
    add(panel, span_box(0, t, 0, depth, base_h, top_z));
    add(panel, span_box(width - t, width, 0, depth, base_h, top_z));
    add(fixed, span_box(0, width, 0, depth, top_z, height));

    double x = t;
    for (std::int64_t k = 0; k < n; ++k) {
      if (k > 0) {
        add(panel, span_box(x, x + t, 0, depth, base_h, top_z));
        x += t;
      }
      fill_compartment(x, x + widths[k], depth, base_h, top_z);
      x += widths[k];
    }
    return std::move(model_);
  }

 private:
  // Integer widths, each >= 150 (when possible), summing exactly to `total`.
  std::vector<double> split_width(double total, std::int64_t n) {
    const auto whole = static_cast<std::int64_t>(total);
    std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
    std::int64_t floor_w = std::min<std::int64_t>(150, whole / n);
    std::int64_t spare = whole - floor_w * n;
    // Random cut points over the spare width, then sort.
    std::vector<std::int64_t> cuts;
    for (std::int64_t i = 0; i + 1 < n; ++i) cuts.push_back(rng_.uniform_int(0, spare));
    std::sort(cuts.begin(), cuts.end());
    std::int64_t prev = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      std::int64_t cut = i + 1 < n ? cuts[static_cast<std::size_t>(i)] : spare;
      w[static_cast<std::size_t>(i)] = floor_w + (cut - prev);
      prev = cut;
    }
    std::vector<double> out;
    for (auto v : w) out.push_back(static_cast<double>(v));
    return out;
  }

  ParamMap base_params(const PrimitiveSchema& schema, std::int64_t n,
                       const std::vector<double>& widths) {
    ParamMap params;
    std::size_t next_width = 0;
    for (const auto& p : schema.params) {
      if (!p.counted_by.empty()) {
        if (next_width < widths.size()) params.insert(p.key, widths[next_width++]);
        continue;
      }
      bool is_counter = false;
      for (const auto& q : schema.params) is_counter = is_counter || q.counted_by == p.key;
      if (is_counter) {
        params.insert(p.key, n);
      } else {
        params.insert(p.key, random_value(p));
      }
    }
    return params;
  }

  ParamValue random_value(const ParamSchema& p) {
    switch (p.kind) {
      case ParamKind::kEnumeration: {
        auto i = rng_.uniform_int(0, static_cast<std::int64_t>(p.members.size()) - 1);
        return EnumToken{p.members[static_cast<std::size_t>(i)]};
      }
      case ParamKind::kText: {
        static const char* kStyles[] = {"bar", "knob", "recessed"};
        return std::string(kStyles[rng_.uniform_int(0, 2)]);
      }
      default:
        return p.default_value;
    }
  }

  PrimitiveInstance make(const PrimitiveSchema& schema, const OrientedBox& box) {
    PrimitiveInstance inst;
    inst.model_id = schema.model_id;
    inst.name = schema.name;
    inst.box = box;
    for (const auto& p : schema.params) {
      if (p.counted_by.empty()) inst.params.insert(p.key, random_value(p));
    }
    return inst;
  }

  void add(const PrimitiveSchema& schema, const OrientedBox& box) {
    model_.instances.push_back(make(schema, box));
  }

  // Shelves evenly spaced in [z0, z1], full width, depth [y0, depth].
  void add_shelves(double x0, double x1, double y0, double depth, double z0,
                   double z1, std::int64_t count) {
    const double t = t_;
    if (count <= 0 || (z1 - z0) < (count + 1) * (t + 60.0)) return;
    for (std::int64_t j = 1; j <= count; ++j) {
      double zc = std::round(z0 + (z1 - z0) * static_cast<double>(j) /
                                      static_cast<double>(count + 1) - t / 2.0);
      const auto role = rng_.bernoulli(0.5) ? PrimitiveRole::kAdjustableShelf
                                            : PrimitiveRole::kFixedShelf;
      add(role_schema(catalog_, role), span_box(x0, x1, y0, depth, zc, zc + t));
    }
  }

  void fill_compartment(double x0, double x1, double depth, double z0, double z1) {
    const double t = t_;
    switch (rng_.uniform_int(0, 2)) {
      case 0:  // open shelving
        add_shelves(x0, x1, 0, depth, z0, z1, rng_.uniform_int(0, 3));
        break;
      case 1:  // door in front, shelves behind
        add(role_schema(catalog_, PrimitiveRole::kDoor),
            span_box(x0, x1, 0, t, z0, z1));
        add_shelves(x0, x1, t, depth, z0, z1, rng_.uniform_int(0, 3));
        break;
      default: {  // drawer stack over the full height
        std::int64_t m = rng_.uniform_int(2, 4);
        while (m > 1 && (z1 - z0) / static_cast<double>(m) < 100.0) --m;
        const PrimitiveSchema& drawer = role_schema(catalog_, PrimitiveRole::kDrawer);
        double z = z0;
        for (std::int64_t j = 1; j <= m; ++j) {
          double top = j == m ? z1
                              : std::round(z0 + (z1 - z0) * static_cast<double>(j) /
                                                    static_cast<double>(m));
          add(drawer, span_box(x0, x1, 0, depth, z, top));
          z = top;
        }
        break;
      }
    }
  }

  const PrimitiveCatalog& catalog_;
  Rng& rng_;
  double t_;
  CabinetModel model_;
};

inline bool interiors_disjoint(const CabinetModel& model) {
  for (std::size_t i = 0; i < model.instances.size(); ++i) {
    for (std::size_t j = i + 1; j < model.instances.size(); ++j) {
      if (iou3d(model.instances[i].box, model.instances[j].box) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace detail

// The same SynthSpec always yields the same cabinet. Throws
// std::invalid_argument for unusable settings and std::logic_error if a
// generated cabinet breaks the no-overlap rule.
inline CabinetModel generate(const SynthSpec& spec, const PrimitiveCatalog& catalog) {
  if (spec.min_instances < 1 || spec.max_instances > kMaxPrimitives ||
      spec.min_instances > spec.max_instances) {
    throw std::invalid_argument("instance range must satisfy 1 <= min <= max <= 48");
  }
  if (spec.min_extent_mm < kMinCabinetExtentMm ||
      spec.max_extent_mm > kMaxCabinetExtentMm ||
      spec.min_extent_mm > spec.max_extent_mm || spec.max_extent_mm < 400.0) {
    throw std::invalid_argument(
        "extent range must lie within [100, 4500] mm and reach at least 400 mm");
  }
  Rng rng(spec.seed);
  const double lo = std::max(spec.min_extent_mm, 400.0);
  const double hi = std::max(std::min(spec.max_extent_mm, 2400.0), lo);

  CabinetModel model;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double width = static_cast<double>(
        rng.uniform_int(static_cast<std::int64_t>(std::ceil(lo)),
                        static_cast<std::int64_t>(std::floor(hi))));
    const double height = static_cast<double>(
        rng.uniform_int(static_cast<std::int64_t>(std::ceil(lo)),
                        static_cast<std::int64_t>(std::floor(hi))));
    const double depth = static_cast<double>(
        rng.uniform_int(300, static_cast<std::int64_t>(std::min(700.0, width))));
    detail::CabinetBuilder builder(catalog, rng);
    model = builder.build(width, height, depth);
    if (static_cast<int>(model.instances.size()) >= spec.min_instances) break;
  }
  // Later instances are compartment contents, so truncation keeps a sound
  // (if sparser) cabinet.
  if (static_cast<int>(model.instances.size()) > spec.max_instances) {
    model.instances.resize(static_cast<std::size_t>(spec.max_instances));
  }
  if (!detail::interiors_disjoint(model)) {
    throw std::logic_error("generated instances overlap");
  }
  return model;
}

// ---------------------------------------------------------------------------
// Perturbation

struct PerturbSpec {
  std::uint64_t seed = 0;
  double position_sigma_mm = 0.0;
  double size_sigma_mm = 0.0;
  double id_swap_rate = 0.0;
  double drop_rate = 0.0;
  // When set, exactly this many instances are dropped (drop_rate is ignored).
  std::optional<std::size_t> drop_count = std::nullopt;
  double add_rate = 0.0;
  double param_corrupt_rate = 0.0;
};

namespace detail {

inline double round_tenth(double v) { return std::round(v * 10.0) / 10.0; }

inline void corrupt_param(PrimitiveInstance& inst, const PrimitiveSchema& schema,
                          Rng& rng) {
  std::vector<const ParamSchema*> candidates;
  for (const auto& p : schema.params) {
    if (!inst.params.contains(p.key)) continue;
    bool is_counter = false;
    for (const auto& q : schema.params) is_counter = is_counter || q.counted_by == p.key;
    if (is_counter || p.kind == ParamKind::kInteger) continue;
    if (p.kind == ParamKind::kEnumeration && p.members.size() < 2) continue;
    candidates.push_back(&p);
  }
  if (candidates.empty()) return;
  const ParamSchema& p = *candidates[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(candidates.size()) - 1))];
  ParamValue* v = inst.params.find(p.key);
  switch (p.kind) {
    case ParamKind::kLengthMm: {
      double cur = std::holds_alternative<double>(*v) ? std::get<double>(*v) : 0.0;
      double delta = static_cast<double>(rng.uniform_int(3, 50));
      double next = cur >= delta && rng.bernoulli(0.5) ? cur - delta : cur + delta;
      if (p.max) next = std::min(next, *p.max);
      if (next == cur) next = cur - delta;
      *v = next;
      break;
    }
    case ParamKind::kEnumeration: {
      auto cur = canonicalize(p, *v);
      std::vector<std::string> others;
      for (const auto& m : p.members) {
        if (!(cur == ParamValue(EnumToken{m}))) others.push_back(m);
      }
      *v = EnumToken{others[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(others.size()) - 1))]};
      break;
    }
    case ParamKind::kText:
      *v = (std::holds_alternative<std::string>(*v) ? std::get<std::string>(*v)
                                                    : std::string()) + "-x";
      break;
    default:
      break;
  }
}

}  // namespace detail

// Seeded edits with independent rates; all-zero rates return the input
// unchanged. At least one instance always survives. Jittered boxes are kept in
// the first octant and on the 0.1 mm grid.
inline CabinetModel perturb(const CabinetModel& model, const PerturbSpec& spec,
                            const PrimitiveCatalog& catalog) {
  Rng rng(spec.seed);
  CabinetModel out = model;

  if (spec.position_sigma_mm > 0.0 || spec.size_sigma_mm > 0.0) {
    for (auto& inst : out.instances) {
      for (int k = 0; k < 3; ++k) {
        if (spec.size_sigma_mm > 0.0) {
          inst.box.size[k] = std::max(
              1.0, detail::round_tenth(inst.box.size[k] +
                                       rng.normal(0.0, spec.size_sigma_mm)));
        }
        if (spec.position_sigma_mm > 0.0) {
          inst.box.position[k] = detail::round_tenth(
              inst.box.position[k] + rng.normal(0.0, spec.position_sigma_mm));
        }
      }
      const Aabb3 b = box_aabb(inst.box);
      for (int k = 0; k < 3; ++k) {
        if (b.min[k] < 0.0) {
          inst.box.position[k] =
              std::ceil((inst.box.position[k] - b.min[k]) * 10.0) / 10.0;
        }
      }
    }
  }

  if (spec.id_swap_rate > 0.0 && catalog.size() > 1) {
    for (auto& inst : out.instances) {
      if (!rng.bernoulli(spec.id_swap_rate)) continue;
      std::vector<std::size_t> others;
      for (std::size_t s = 0; s < catalog.size(); ++s) {
        if (catalog.at(s).model_id != inst.model_id) others.push_back(s);
      }
      const PrimitiveSchema& next = catalog.at(others[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(others.size()) - 1))]);
      inst.model_id = next.model_id;
      inst.name = next.name;
      inst.params = default_params(next);
    }
  }

  if (spec.param_corrupt_rate > 0.0) {
    for (auto& inst : out.instances) {
      const PrimitiveSchema* schema = catalog.find(inst.model_id);
      if (schema == nullptr || !rng.bernoulli(spec.param_corrupt_rate)) continue;
      detail::corrupt_param(inst, *schema, rng);
    }
  }

  std::vector<bool> keep(out.instances.size(), true);
  if (spec.drop_count) {
    std::vector<std::size_t> order(out.instances.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const std::size_t drops = std::min(*spec.drop_count, order.size() - 1);
    for (std::size_t i = 0; i < drops; ++i) {
      auto j = static_cast<std::size_t>(rng.uniform_int(
          static_cast<std::int64_t>(i), static_cast<std::int64_t>(order.size()) - 1));
      std::swap(order[i], order[j]);
      keep[order[i]] = false;
    }
  } else if (spec.drop_rate > 0.0) {
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = !rng.bernoulli(spec.drop_rate);
    if (std::none_of(keep.begin(), keep.end(), [](bool k) { return k; }) &&
        !keep.empty()) {
      keep[0] = true;
    }
  }

  std::vector<PrimitiveInstance> added;
  if (spec.add_rate > 0.0 && !out.instances.empty()) {
    const Aabb3 bounds = model_aabb(out);
    for (std::size_t i = 0; i < out.instances.size(); ++i) {
      if (!rng.bernoulli(spec.add_rate)) continue;
      const PrimitiveSchema& schema = catalog.at(static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(catalog.size()) - 1)));
      PrimitiveInstance inst;
      inst.model_id = schema.model_id;
      inst.name = schema.name;
      inst.params = default_params(schema);
      for (int k = 0; k < 3; ++k) {
        const double ext = bounds.max[k] - bounds.min[k];
        const double size = std::max(18.0, std::round(rng.uniform(0.05, 0.5) * ext));
        const double lo = bounds.min[k] + size / 2.0;
        const double hi = std::max(lo, bounds.max[k] - size / 2.0);
        inst.box.size[k] = size;
        inst.box.position[k] = detail::round_tenth(rng.uniform(lo, hi));
      }
      added.push_back(std::move(inst));
    }
  }

  CabinetModel result;
  for (std::size_t i = 0; i < out.instances.size(); ++i) {
    if (keep[i]) result.instances.push_back(std::move(out.instances[i]));
  }
  for (auto& inst : added) result.instances.push_back(std::move(inst));
  return result;
}

// ---------------------------------------------------------------------------
// Statistics

struct CorpusStats {
  std::size_t cabinets = 0;
  std::size_t total_primitives = 0;
  // #primitives in a cabinet -> #cabinets.
  std::map<std::size_t, std::size_t> primitives_per_cabinet;
  // #distinct parameter keys of a primitive model -> #models, over the models
  // that occur in the corpus.
  std::map<std::size_t, std::size_t> params_per_primitive;
  // #parameters on an instance -> #instances.
  std::map<std::size_t, std::size_t> params_per_instance;
  std::size_t unique_primitives = 0;
  // Distinct (model id, key) pairs.
  std::size_t distinct_params = 0;
};

// Order-independent: every field is a count or a histogram of counts.
inline CorpusStats stats(std::span<const CabinetModel> corpus) {
  CorpusStats s;
  std::map<std::string, std::set<std::string>> keys_by_model;
  for (const auto& model : corpus) {
    ++s.cabinets;
    s.total_primitives += model.instances.size();
    ++s.primitives_per_cabinet[model.instances.size()];
    for (const auto& inst : model.instances) {
      ++s.params_per_instance[inst.params.size()];
      auto& keys = keys_by_model[inst.model_id];
      for (const auto& [key, value] : inst.params) keys.insert(key);
    }
  }
  s.unique_primitives = keys_by_model.size();
  for (const auto& [id, keys] : keys_by_model) {
    ++s.params_per_primitive[keys.size()];
    s.distinct_params += keys.size();
  }
  return s;
}

}  // namespace cabprog
