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

// Engineering drawings of a cabinet. The pipeline is
//
//   render_views -> annotate -> (inject_noise) -> layout_sheet -> to_svg
//
// Views are in millimetres in view-plane coordinates (see project()); the
// sheet maps them to canvas pixels with a single uniform scale.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cabprog/catalog.hpp"
#include "cabprog/common.hpp"
#include "cabprog/constants.hpp"
#include "cabprog/geometry.hpp"
#include "cabprog/model.hpp"
#include "cabprog/rng.hpp"
#include "cabprog/text.hpp"
#include "cabprog/yaml_lite.hpp"

namespace cabprog {

// A measured span from `a` to `b`. The dimension line runs parallel to a-b,
// displaced by `offset` millimetres along the left normal of a->b.
struct DimensionSet {
  Vec2 a;
  Vec2 b;
  double offset = 0.0;
  std::string label;  // rounded span length in whole millimetres

  double span() const { return length(b - a); }
  friend bool operator==(const DimensionSet&, const DimensionSet&) = default;
};

enum class SymbolKind { kAdjustableShelfCircle, kDoorOpeningTriangle };

inline std::string_view to_string(SymbolKind k) {
  return k == SymbolKind::kAdjustableShelfCircle ? "adjustable_shelf_circle"
                                                 : "door_opening_triangle";
}

struct Symbol {
  SymbolKind kind = SymbolKind::kAdjustableShelfCircle;
  Vec2 anchor;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

using AnnotationEntity = std::variant<DimensionSet, Symbol>;

struct ViewDrawing {
  ViewKind kind = ViewKind::kFront;
  std::vector<Segment2> segments;
  std::vector<AnnotationEntity> annotations;
  std::optional<double> section_y;  // cut plane of a section view

  friend bool operator==(const ViewDrawing&, const ViewDrawing&) = default;
};

// ---------------------------------------------------------------------------
// Geometry layer

struct RenderOptions {
  // Section views show instances whose centre lies at or behind this y. When
  // unset the cut is the middle of the cabinet's depth.
  std::optional<double> section_y;
};

namespace detail {

inline bool in_view(const PrimitiveInstance& inst, const ViewDrawing& view) {
  return view.kind != ViewKind::kSection || !view.section_y ||
         inst.box.position.y >= *view.section_y;
}

inline Aabb2 projected_bounds(const OrientedBox& box, ViewKind view) {
  Aabb2 out;
  for (const auto& c : box_corners(box)) out.expand(project(c, view));
  return out;
}

}  // namespace detail

inline std::vector<ViewDrawing> render_views(const CabinetModel& model,
                                             std::span<const ViewKind> views,
                                             const RenderOptions& options = {}) {
  std::vector<ViewDrawing> out;
  for (ViewKind kind : views) {
    ViewDrawing view;
    view.kind = kind;
    if (kind == ViewKind::kSection) {
      if (options.section_y) {
        view.section_y = options.section_y;
      } else if (!model.instances.empty()) {
        const Aabb3 bounds = model_aabb(model);
        view.section_y = 0.5 * (bounds.min.y + bounds.max.y);
      }
    }
    std::vector<Segment2> all;
    for (const auto& inst : model.instances) {
      if (!detail::in_view(inst, view)) continue;
      auto segs = project_box(inst.box, kind);
      all.insert(all.end(), segs.begin(), segs.end());
    }
    view.segments = merge_segments(all);
    out.push_back(std::move(view));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Annotation layer

struct AnnotateOptions {
  bool enabled = true;
  bool dimensions = true;
  bool symbols = true;
  // Instances narrower than this (in the measured direction) get no
  // dimension of their own.
  double min_extent_mm = 100.0;
  // Rows of per-instance dimensions stacked on each side; spans that do not
  // fit are left undimensioned.
  int max_tiers = 4;
};

namespace detail {

inline std::string dimension_label(double span) {
  return std::to_string(std::llround(span));
}

struct Span1 {
  double lo;
  double hi;
  double at;  // coordinate of the measured edge on the other axis
};

// Greedy interval packing into rows; returns the row per span or -1.
inline std::vector<int> pack_tiers(const std::vector<Span1>& spans, int max_tiers) {
  std::vector<double> tier_end;
  std::vector<int> out;
  for (const auto& s : spans) {
    int tier = -1;
    for (std::size_t t = 0; t < tier_end.size(); ++t) {
      if (s.lo >= tier_end[t] - 1e-9) {
        tier = static_cast<int>(t);
        break;
      }
    }
    if (tier < 0 && static_cast<int>(tier_end.size()) < max_tiers) {
      tier = static_cast<int>(tier_end.size());
      tier_end.push_back(0.0);
    }
    if (tier >= 0) tier_end[tier] = s.hi;
    out.push_back(tier);
  }
  return out;
}

// Distinct spans, ignoring ones equal to the overall extent.
inline std::vector<Span1> unique_spans(std::vector<Span1> spans, double lo,
                                       double hi) {
  std::sort(spans.begin(), spans.end(), [](const Span1& a, const Span1& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.at < b.at;
  });
  std::vector<Span1> out;
  for (const auto& s : spans) {
    if (std::abs(s.lo - lo) <= 1e-6 && std::abs(s.hi - hi) <= 1e-6) continue;
    if (!out.empty() && std::abs(out.back().lo - s.lo) <= 1e-6 &&
        std::abs(out.back().hi - s.hi) <= 1e-6) {
      continue;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

// Adds overall width (below) and height (left) dimensions, per-instance width
// (above) and height (right) dimensions, and functional symbols in front and
// section views. With options.enabled false the views are returned unchanged.
inline std::vector<ViewDrawing> annotate(std::vector<ViewDrawing> views,
                                         const CabinetModel& model,
                                         const PrimitiveCatalog& catalog,
                                         const AnnotateOptions& options = {}) {
  if (!options.enabled) return views;
  for (ViewDrawing& view : views) {
    std::vector<const PrimitiveInstance*> shown;
    Aabb2 bounds;
    for (const auto& inst : model.instances) {
      if (!detail::in_view(inst, view)) continue;
      shown.push_back(&inst);
      bounds.expand(detail::projected_bounds(inst.box, view.kind));
    }
    if (shown.empty()) continue;

    if (options.dimensions) {
      const double extent = std::max(bounds.width(), bounds.height());
      const double gap = 0.08 * extent;
      const double step = 0.07 * extent;
      const Vec2 lo = bounds.min;
      const Vec2 hi = bounds.max;
      view.annotations.push_back(DimensionSet{
          lo, {hi.x, lo.y}, -gap, detail::dimension_label(hi.x - lo.x)});
      view.annotations.push_back(DimensionSet{
          lo, {lo.x, hi.y}, gap, detail::dimension_label(hi.y - lo.y)});

      std::vector<detail::Span1> widths;
      std::vector<detail::Span1> heights;
      for (const auto* inst : shown) {
        Aabb2 b = detail::projected_bounds(inst->box, view.kind);
        if (b.width() >= options.min_extent_mm) {
          widths.push_back({b.min.x, b.max.x, b.max.y});
        }
        if (b.height() >= options.min_extent_mm) {
          heights.push_back({b.min.y, b.max.y, b.max.x});
        }
      }
      widths = detail::unique_spans(std::move(widths), lo.x, hi.x);
      heights = detail::unique_spans(std::move(heights), lo.y, hi.y);
      auto wt = detail::pack_tiers(widths, options.max_tiers);
      for (std::size_t i = 0; i < widths.size(); ++i) {
        if (wt[i] < 0) continue;
        const auto& s = widths[i];
        double off = (hi.y - s.at) + gap + wt[i] * step;
        view.annotations.push_back(DimensionSet{
            {s.lo, s.at}, {s.hi, s.at}, off, detail::dimension_label(s.hi - s.lo)});
      }
      auto ht = detail::pack_tiers(heights, options.max_tiers);
      for (std::size_t i = 0; i < heights.size(); ++i) {
        if (ht[i] < 0) continue;
        const auto& s = heights[i];
        double off = -((hi.x - s.at) + gap + ht[i] * step);
        view.annotations.push_back(DimensionSet{
            {s.at, s.lo}, {s.at, s.hi}, off, detail::dimension_label(s.hi - s.lo)});
      }
    }

    if (options.symbols &&
        (view.kind == ViewKind::kFront || view.kind == ViewKind::kSection)) {
      for (const auto* inst : shown) {
        const PrimitiveSchema* schema = catalog.find(inst->model_id);
        if (schema == nullptr) continue;
        const Vec2 center = project(inst->box.position, view.kind);
        if (schema->role == PrimitiveRole::kAdjustableShelf) {
          view.annotations.push_back(
              Symbol{SymbolKind::kAdjustableShelfCircle, center});
        } else if (schema->role == PrimitiveRole::kDoor) {
          view.annotations.push_back(
              Symbol{SymbolKind::kDoorOpeningTriangle, center});
        }
      }
    }
  }
  return views;
}

// ---------------------------------------------------------------------------
// Noise

struct NoiseSpec {
  double p_drop = 0.0;        // per-segment drop probability
  double jitter_sigma = 0.0;  // Gaussian endpoint jitter, mm
  double p_spurious = 0.0;    // spurious short segments per original segment
};

// Suggested non-zero setting for noisy renders.
inline constexpr NoiseSpec kDefaultNoise{0.05, 2.0, 0.02};

// Degrades the geometry layer only. Deterministic in `seed`; all-zero rates
// return the input unchanged.
inline std::vector<ViewDrawing> inject_noise(std::vector<ViewDrawing> views,
                                             const NoiseSpec& spec,
                                             std::uint64_t seed) {
  Rng rng(seed);
  for (ViewDrawing& view : views) {
    Aabb2 bounds;
    for (const auto& s : view.segments) {
      bounds.expand(s.a);
      bounds.expand(s.b);
    }
    const double diag = bounds.empty() ? 0.0 : length(bounds.max - bounds.min);
    std::vector<Segment2> out;
    out.reserve(view.segments.size());
    std::vector<Segment2> spurious;
    for (const auto& s : view.segments) {
      if (spec.p_spurious > 0.0 && rng.bernoulli(spec.p_spurious) && diag > 0.0) {
        Vec2 p{rng.uniform(bounds.min.x, bounds.max.x),
               rng.uniform(bounds.min.y, bounds.max.y)};
        double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        double len = rng.uniform(0.02, 0.08) * diag;
        spurious.push_back(
            {p, p + Vec2{std::cos(angle), std::sin(angle)} * len});
      }
      if (spec.p_drop > 0.0 && rng.bernoulli(spec.p_drop)) continue;
      Segment2 t = s;
      if (spec.jitter_sigma > 0.0) {
        t.a.x += rng.normal(0.0, spec.jitter_sigma);
        t.a.y += rng.normal(0.0, spec.jitter_sigma);
        t.b.x += rng.normal(0.0, spec.jitter_sigma);
        t.b.y += rng.normal(0.0, spec.jitter_sigma);
      }
      out.push_back(t);
    }
    out.insert(out.end(), spurious.begin(), spurious.end());
    view.segments = std::move(out);
  }
  return views;
}

// ---------------------------------------------------------------------------
// Sheet layout

struct PlacedView {
  ViewDrawing view;
  // Canvas pixel = (tx + scale * u, ty - scale * v).
  double tx = 0.0;
  double ty = 0.0;
};

struct Sheet {
  int canvas_px = kDefaultCanvasPx;
  double margin_px = 16.0;
  double scale = 1.0;  // pixels per millimetre, shared by all views
  std::vector<PlacedView> views;

  Vec2 to_canvas(const PlacedView& pv, Vec2 p) const {
    return {pv.tx + scale * p.x, pv.ty - scale * p.y};
  }
};

struct LayoutOptions {
  int canvas_px = kDefaultCanvasPx;
  double margin_px = 16.0;
};

namespace detail {

inline void expand_dimension(Aabb2& box, const DimensionSet& d) {
  Vec2 dir = d.b - d.a;
  double len = length(dir);
  Vec2 n = len > 0.0 ? Vec2{-dir.y / len, dir.x / len} : Vec2{0.0, 0.0};
  Vec2 shift = n * d.offset;
  box.expand(d.a);
  box.expand(d.b);
  box.expand(d.a + shift);
  box.expand(d.b + shift);
}

// Extent of everything drawn in a view, in view millimetres.
inline Aabb2 view_bounds(const ViewDrawing& view) {
  Aabb2 box;
  for (const auto& s : view.segments) {
    box.expand(s.a);
    box.expand(s.b);
  }
  for (const auto& a : view.annotations) {
    if (auto* d = std::get_if<DimensionSet>(&a)) {
      expand_dimension(box, *d);
    } else {
      box.expand(std::get<Symbol>(a).anchor);
    }
  }
  if (box.empty()) box.expand(Vec2{0.0, 0.0});
  return box;
}

inline bool is_canonical_three(const std::vector<ViewDrawing>& views) {
  if (views.size() != 3) return false;
  int front = 0, top = 0, side = 0;
  for (const auto& v : views) {
    front += v.kind == ViewKind::kFront;
    top += v.kind == ViewKind::kTop;
    side += v.kind == ViewKind::kSide;
  }
  return front == 1 && top == 1 && side == 1;
}

}  // namespace detail

// Places views on a square canvas. The set {front, top, side} uses the
// third-angle arrangement: top above front sharing the horizontal axis, side
// to the right of front sharing the vertical axis. Any other set fills a
// row-major grid of ceil(sqrt(n)) columns with each view centred in its cell.
// One scale maps the composite so that its larger side spans the canvas minus
// both margins; the composite is centred.
inline Sheet layout_sheet(std::vector<ViewDrawing> views,
                          const LayoutOptions& options = {}) {
  Sheet sheet;
  sheet.canvas_px = options.canvas_px;
  sheet.margin_px = options.margin_px;
  const std::size_t n = views.size();
  if (n == 0) return sheet;

  std::vector<Aabb2> bounds;
  for (const auto& v : views) bounds.push_back(detail::view_bounds(v));
  // Translation of each view into composite millimetres.
  std::vector<Vec2> shift(n, Vec2{0.0, 0.0});

  if (detail::is_canonical_three(views)) {
    std::size_t f = 0, t = 0, s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (views[i].kind == ViewKind::kFront) f = i;
      if (views[i].kind == ViewKind::kTop) t = i;
      if (views[i].kind == ViewKind::kSide) s = i;
    }
    double extent = 0.0;
    for (const auto& b : bounds) extent = std::max({extent, b.width(), b.height()});
    const double gap = 0.1 * extent;
    shift[t] = {0.0, bounds[f].max.y + gap - bounds[t].min.y};
    shift[s] = {bounds[f].max.x + gap - bounds[s].min.x, 0.0};
  } else {
    const auto cols = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(n))));
    double cell_w = 0.0, cell_h = 0.0;
    for (const auto& b : bounds) {
      cell_w = std::max(cell_w, b.width());
      cell_h = std::max(cell_h, b.height());
    }
    const double gap = 0.1 * std::max(cell_w, cell_h);
    for (std::size_t i = 0; i < n; ++i) {
      const double col = static_cast<double>(i % cols);
      const double row = static_cast<double>(i / cols);
      const double cx = col * (cell_w + gap) + cell_w / 2.0;
      const double cy = -row * (cell_h + gap) - cell_h / 2.0;
      const Vec2 center = (bounds[i].min + bounds[i].max) * 0.5;
      shift[i] = Vec2{cx, cy} - center;
    }
  }

  Aabb2 all;
  for (std::size_t i = 0; i < n; ++i) {
    all.expand(bounds[i].min + shift[i]);
    all.expand(bounds[i].max + shift[i]);
  }
  const double avail = sheet.canvas_px - 2.0 * sheet.margin_px;
  const double extent = std::max(all.width(), all.height());
  sheet.scale = extent > 0.0 ? avail / extent : 1.0;
  const double half = sheet.canvas_px / 2.0;
  const Vec2 mid = (all.min + all.max) * 0.5;
  for (std::size_t i = 0; i < n; ++i) {
    PlacedView pv;
    pv.tx = half + sheet.scale * (shift[i].x - mid.x);
    pv.ty = half - sheet.scale * (shift[i].y - mid.y);
    pv.view = std::move(views[i]);
    sheet.views.push_back(std::move(pv));
  }
  return sheet;
}

// ---------------------------------------------------------------------------
// SVG

struct Style {
  bool geometry_layer = true;
  bool annotation_layer = true;
  double geometry_stroke_px = 1.0;
  double annotation_stroke_px = 0.5;
  double arrow_px = 6.0;
  double font_px = 10.0;
  double symbol_px = 7.0;
  std::string geometry_color = "#000000";
  std::string annotation_color = "#1f4e9c";
  std::string symbol_color = "#e00000";
  std::string background = "#ffffff";
};

// Style file: a flat mapping of the Style fields, e.g.
//
//   geometry_stroke_px: 1.5
//   symbol_color: "#ff0000"
//   layers: [geometry]
inline Result<Style> load_style(std::string_view text, Style base = {}) {
  auto doc = yaml::parse(text);
  if (!doc) return Result<Style>::failure(doc.diagnostics());
  DiagnosticList diags;
  const yaml::Node& root = doc.value();
  if (root.is_null()) return Result<Style>(base);
  if (!root.is_mapping()) {
    diags.push_back(make_error("style", "style file must be a mapping", root.span));
    return Result<Style>::failure(diags);
  }
  auto number = [&](const yaml::MapEntry& e, double& out) {
    auto v = e.value.is_scalar() ? text::parse_double(e.value.scalar) : std::nullopt;
    if (!v || !(*v >= 0.0) || !std::isfinite(*v)) {
      diags.push_back(make_error("style", e.key + " must be a non-negative number",
                                 e.value.span));
      return;
    }
    out = *v;
  };
  auto color = [&](const yaml::MapEntry& e, std::string& out) {
    if (!e.value.is_scalar() || e.value.scalar.empty() ||
        e.value.scalar.find_first_of("\"'<>&") != std::string::npos) {
      diags.push_back(make_error("style", e.key + " must be a colour string",
                                 e.value.span));
      return;
    }
    out = e.value.scalar;
  };
  for (const auto& e : root.entries) {
    if (e.key == "geometry_stroke_px") {
      number(e, base.geometry_stroke_px);
    } else if (e.key == "annotation_stroke_px") {
      number(e, base.annotation_stroke_px);
    } else if (e.key == "arrow_px") {
      number(e, base.arrow_px);
    } else if (e.key == "font_px") {
      number(e, base.font_px);
    } else if (e.key == "symbol_px") {
      number(e, base.symbol_px);
    } else if (e.key == "geometry_color") {
      color(e, base.geometry_color);
    } else if (e.key == "annotation_color") {
      color(e, base.annotation_color);
    } else if (e.key == "symbol_color") {
      color(e, base.symbol_color);
    } else if (e.key == "background") {
      color(e, base.background);
    } else if (e.key == "layers") {
      if (!e.value.is_sequence()) {
        diags.push_back(make_error("style", "layers must be a sequence", e.value.span));
        continue;
      }
      base.geometry_layer = false;
      base.annotation_layer = false;
      for (const auto& item : e.value.items) {
        if (item.scalar == "geometry") {
          base.geometry_layer = true;
        } else if (item.scalar == "annotation") {
          base.annotation_layer = true;
        } else {
          diags.push_back(make_error("style", "unknown layer '" + item.scalar + "'",
                                     item.span));
        }
      }
    } else {
      diags.push_back(make_error("style", "unknown style key '" + e.key + "'",
                                 e.key_span));
    }
  }
  if (has_errors(diags)) return Result<Style>::failure(diags);
  return Result<Style>(std::move(base));
}

namespace detail {

inline std::string px(double v) {
  std::string s = text::format_fixed(v, 2);
  return s == "-0" ? "0" : s;
}

inline void svg_line(std::string& out, Vec2 a, Vec2 b, std::string_view indent) {
  out += indent;
  out += "<line x1=\"" + px(a.x) + "\" y1=\"" + px(a.y) + "\" x2=\"" + px(b.x) +
         "\" y2=\"" + px(b.y) + "\"/>\n";
}

inline void svg_arrow(std::string& out, Vec2 tip, Vec2 dir, double size,
                      std::string_view indent) {
  Vec2 n{-dir.y, dir.x};
  Vec2 base = tip - dir * size;
  Vec2 p1 = base + n * (size / 3.0);
  Vec2 p2 = base - n * (size / 3.0);
  out += indent;
  out += "<polygon points=\"" + px(tip.x) + "," + px(tip.y) + " " + px(p1.x) +
         "," + px(p1.y) + " " + px(p2.x) + "," + px(p2.y) + "\"/>\n";
}

inline void svg_dimension(std::string& out, const Sheet& sheet,
                          const PlacedView& pv, const DimensionSet& d,
                          const Style& style) {
  const std::string_view in = "      ";
  const Vec2 dir_mm = d.b - d.a;
  const double len = length(dir_mm);
  if (!(len > 0.0)) return;
  const Vec2 n_mm{-dir_mm.y / len, dir_mm.x / len};
  const Vec2 a = sheet.to_canvas(pv, d.a);
  const Vec2 b = sheet.to_canvas(pv, d.b);
  const Vec2 da = sheet.to_canvas(pv, d.a + n_mm * d.offset);
  const Vec2 db = sheet.to_canvas(pv, d.b + n_mm * d.offset);
  const Vec2 ext = da - a;
  const double ext_len = length(ext);
  const Vec2 ext_dir = ext_len > 0.0 ? ext * (1.0 / ext_len) : Vec2{0.0, 0.0};
  const double overshoot = style.arrow_px / 2.0;
  out += "    <g class=\"dimension\">\n";
  svg_line(out, a, da + ext_dir * overshoot, in);
  svg_line(out, b, db + ext_dir * overshoot, in);
  svg_line(out, da, db, in);
  const Vec2 u = (db - da) * (1.0 / length(db - da));
  svg_arrow(out, da, u * -1.0, style.arrow_px, in);
  svg_arrow(out, db, u, style.arrow_px, in);
  // Label sits on the dimension line, reading left-to-right or bottom-to-top.
  const bool vertical = std::abs(u.y) > std::abs(u.x);
  Vec2 mid = (da + db) * 0.5 - (vertical ? Vec2{2.0, 0.0} : Vec2{0.0, 2.0});
  out += in;
  out += "<text stroke=\"none\" x=\"" + px(mid.x) + "\" y=\"" + px(mid.y) + "\"";
  if (vertical) out += " transform=\"rotate(-90 " + px(mid.x) + " " + px(mid.y) + ")\"";
  out += ">" + d.label + "</text>\n";
  out += "    </g>\n";
}

inline void svg_symbol(std::string& out, const Sheet& sheet,
                       const PlacedView& pv, const Symbol& s,
                       const Style& style) {
  const Vec2 c = sheet.to_canvas(pv, s.anchor);
  const double r = style.symbol_px / 2.0;
  out += "    ";
  if (s.kind == SymbolKind::kAdjustableShelfCircle) {
    out += "<circle class=\"adjustable_shelf\" cx=\"" + px(c.x) + "\" cy=\"" +
           px(c.y) + "\" r=\"" + px(r) + "\"/>\n";
  } else {
    out += "<polygon class=\"door_opening\" points=\"" + px(c.x) + "," +
           px(c.y - r) + " " + px(c.x + r) + "," + px(c.y + r) + " " +
           px(c.x - r) + "," + px(c.y + r) + "\"/>\n";
  }
}

}  // namespace detail

// SVG 1.1 document. Geometry and annotation layers are the groups with ids
// "geometry" and "annotation"; a disabled layer is omitted entirely, so an
// annotation-free render equals the full render minus that group.
inline std::string to_svg(const Sheet& sheet, const Style& style = {}) {
  using detail::px;
  const std::string size = std::to_string(sheet.canvas_px);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         size + "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " + size +
         "\">\n";
  out += "  <rect width=\"" + size + "\" height=\"" + size + "\" fill=\"" +
         style.background + "\"/>\n";
  if (style.geometry_layer) {
    out += "  <g id=\"geometry\" fill=\"none\" stroke=\"" + style.geometry_color +
           "\" stroke-width=\"" + px(style.geometry_stroke_px) +
           "\" stroke-linecap=\"round\">\n";
    for (const auto& pv : sheet.views) {
      out += "    <g class=\"view\" data-view=\"" +
             std::string(to_string(pv.view.kind)) + "\">\n";
      for (const auto& s : pv.view.segments) {
        detail::svg_line(out, sheet.to_canvas(pv, s.a), sheet.to_canvas(pv, s.b),
                         "      ");
      }
      out += "    </g>\n";
    }
    out += "  </g>\n";
  }
  if (style.annotation_layer) {
    out += "  <g id=\"annotation\" stroke=\"" + style.annotation_color +
           "\" fill=\"" + style.annotation_color + "\" stroke-width=\"" +
           px(style.annotation_stroke_px) + "\" font-family=\"sans-serif\" "
           "font-size=\"" + px(style.font_px) + "\" text-anchor=\"middle\">\n";
    for (const auto& pv : sheet.views) {
      for (const auto& a : pv.view.annotations) {
        if (auto* d = std::get_if<DimensionSet>(&a)) {
          detail::svg_dimension(out, sheet, pv, *d, style);
        }
      }
    }
    out += "    <g class=\"symbols\" stroke=\"" + style.symbol_color +
           "\" fill=\"none\" stroke-width=\"" + px(style.geometry_stroke_px) +
           "\">\n";
    for (const auto& pv : sheet.views) {
      for (const auto& a : pv.view.annotations) {
        if (auto* s = std::get_if<Symbol>(&a)) {
          out += "  ";
          detail::svg_symbol(out, sheet, pv, *s, style);
        }
      }
    }
    out += "    </g>\n";
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cabprog
