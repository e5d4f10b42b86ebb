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

// cabprog: command-line front end for the shape-program toolkit.
//
// Exit status: 0 success, 1 diagnostics/validation failures, 2 usage or IO
// errors.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cabprog/cabprog.hpp"

namespace fs = std::filesystem;

namespace cabprog::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

// Raised to abort a command with a given status after printing a message.
struct Exit {
  int code;
};

[[noreturn]] void fail(int code, const std::string& message) {
  std::cerr << "cabprog: " << message << "\n";
  throw Exit{code};
}

struct CatalogOption {
  std::string path;

  PrimitiveCatalog load() const {
    std::string p = path;
    if (p.empty()) {
      if (const char* env = std::getenv("CABINET_CATALOG"); env && *env) p = env;
    }
    if (p.empty()) return builtin_catalog();
    auto text = read_file(p);
    if (!text) fail(kExitUsage, "cannot read catalog " + p);
    auto cat = load_catalog(*text);
    for (const auto& d : cat.diagnostics()) std::cerr << format_diagnostic(d, p) << "\n";
    if (!cat) fail(kExitUsage, "invalid catalog " + p);
    return std::move(cat).value();
  }
};

void print_diagnostics(const DiagnosticList& diags, const std::string& source) {
  for (const auto& d : diags) std::cerr << format_diagnostic(d, source) << "\n";
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  if (!write_file(path, data)) fail(kExitUsage, "cannot write " + path);
}

CabinetModel load_or_exit(const std::string& path, const PrimitiveCatalog& catalog,
                          bool strict, std::optional<FileFormat> format) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) fail(kExitUsage, "no such file: " + path);
  auto model = load_model(path, catalog, strict, format);
  print_diagnostics(model.diagnostics(), path);
  if (!model) throw Exit{kExitDiagnostics};
  return std::move(model).value();
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir, ec)) fail(kExitUsage, "cannot create directory " + dir);
}

std::optional<FileFormat> format_flag(const std::string& value) {
  if (value == "auto") return std::nullopt;
  return parse_file_format(value);
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
  std::string path;
  std::string format = "auto";
  bool filters = false;
  bool strict = false;
};

int run_validate(const ValidateArgs& a, const CatalogOption& cat) {
  const PrimitiveCatalog catalog = cat.load();
  CabinetModel model = load_or_exit(a.path, catalog, a.strict, format_flag(a.format));
  DiagnosticList diags = validate(model, catalog, a.filters);
  print_diagnostics(diags, a.path);
  return has_errors(diags) ? kExitDiagnostics : kExitOk;
}

// ---------------------------------------------------------------------------
// convert

struct ConvertArgs {
  std::string in;
  std::string out = "-";
  std::string to;
  std::string from = "auto";
};

int run_convert(const ConvertArgs& a, const CatalogOption& cat) {
  const PrimitiveCatalog catalog = cat.load();
  CabinetModel model = load_or_exit(a.in, catalog, false, format_flag(a.from));
  const FileFormat to = *parse_file_format(a.to);
  std::string text;
  try {
    text = format_model(model, to, catalog);
  } catch (const std::invalid_argument& e) {
    fail(kExitDiagnostics, e.what());
  }
  write_output(a.out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// render

struct RenderArgs {
  std::string in;
  std::string out = "-";
  std::vector<std::string> views = {"front", "top", "side"};
  std::vector<std::string> layers = {"geometry", "annotation"};
  int canvas = kDefaultCanvasPx;
  double margin = 16.0;
  std::uint64_t seed = 0;
  std::optional<double> p_drop;
  std::optional<double> jitter;
  std::optional<double> p_spurious;
  bool noise = false;
  std::string style;
  std::optional<double> section_y;
  double min_dim = 100.0;
};

int run_render(const RenderArgs& a, const CatalogOption& cat) {
  const PrimitiveCatalog catalog = cat.load();
  CabinetModel model = load_or_exit(a.in, catalog, false, std::nullopt);
  std::vector<ViewKind> views;
  for (const auto& v : a.views) views.push_back(*parse_view_kind(v));

  Style style;
  if (!a.style.empty()) {
    auto text = read_file(a.style);
    if (!text) fail(kExitUsage, "cannot read style " + a.style);
    auto loaded = load_style(*text);
    print_diagnostics(loaded.diagnostics(), a.style);
    if (!loaded) throw Exit{kExitUsage};
    style = loaded.value();
  }
  const std::set<std::string> layers(a.layers.begin(), a.layers.end());
  style.geometry_layer = layers.contains("geometry");
  style.annotation_layer = layers.contains("annotation");

  NoiseSpec noise = a.noise ? kDefaultNoise : NoiseSpec{};
  if (a.p_drop) noise.p_drop = *a.p_drop;
  if (a.jitter) noise.jitter_sigma = *a.jitter;
  if (a.p_spurious) noise.p_spurious = *a.p_spurious;

  RenderOptions render_options;
  render_options.section_y = a.section_y;
  AnnotateOptions annotate_options;
  annotate_options.min_extent_mm = a.min_dim;
  auto drawn = annotate(render_views(model, views, render_options), model, catalog,
                        annotate_options);
  drawn = inject_noise(std::move(drawn), noise, a.seed);
  Sheet sheet = layout_sheet(std::move(drawn), {a.canvas, a.margin});
  write_output(a.out, to_svg(sheet, style));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string pred;
  std::string gt;
  std::string out;
  double iou = kTruePositiveIou;
  std::string retrieval_over = "tp";
  std::string iou_mode = "rotated";
  double length_tol = 0.0;
  unsigned jobs = 1;
};

std::string percent(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * *v);
  return buf;
}

std::string table_row(const std::string& label, const std::optional<double>& ret,
                      double p, double r, double f1, const std::optional<double>& par) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-8s %10s %10s %10s %10s %10s\n", label.c_str(),
                percent(ret).c_str(), percent(p).c_str(), percent(r).c_str(),
                percent(f1).c_str(), percent(par).c_str());
  return buf;
}

int run_eval(const EvalArgs& a, const CatalogOption& cat) {
  const PrimitiveCatalog catalog = cat.load();
  auto pred = list_corpus(a.pred);
  print_diagnostics(pred.diagnostics(), a.pred);
  if (!pred) throw Exit{kExitUsage};
  auto gt = list_corpus(a.gt);
  print_diagnostics(gt.diagnostics(), a.gt);
  if (!gt) throw Exit{kExitUsage};

  std::map<std::string, fs::path> pred_files;
  for (const auto& e : pred.value().samples) pred_files[e.id] = pred.value().root / e.file;
  std::set<std::string> gt_ids;
  bool mismatch = false;

  std::vector<SampleInput> inputs;
  for (const auto& e : gt.value().samples) {
    gt_ids.insert(e.id);
    SampleInput in;
    in.id = e.id;
    const fs::path gt_path = gt.value().root / e.file;
    auto g = load_model(gt_path, catalog, false);
    if (g) {
      in.gt = std::move(g).value();
    } else {
      for (const auto& d : g.diagnostics()) {
        in.errors.push_back("gt: " + format_diagnostic(d, gt_path.string()));
      }
    }
    auto it = pred_files.find(e.id);
    if (it == pred_files.end()) {
      std::cerr << "cabprog: sample " << e.id << " has no prediction\n";
      in.errors.push_back("pred: missing");
      mismatch = true;
    } else {
      auto p = load_model(it->second, catalog, false);
      if (p) {
        in.pred = std::move(p).value();
      } else {
        for (const auto& d : p.diagnostics()) {
          in.errors.push_back("pred: " + format_diagnostic(d, it->second.string()));
        }
      }
    }
    inputs.push_back(std::move(in));
  }
  for (const auto& [id, path] : pred_files) {
    if (!gt_ids.contains(id)) {
      std::cerr << "cabprog: prediction " << id << " has no ground truth\n";
      mismatch = true;
    }
  }
  if (inputs.empty()) fail(kExitUsage, "ground-truth corpus is empty");

  EvalOptions options;
  options.iou_threshold = a.iou;
  options.retrieval_over =
      a.retrieval_over == "all" ? RetrievalOver::kAllPairs : RetrievalOver::kTruePositives;
  options.iou_mode = a.iou_mode == "aabb" ? IouMode::kAabb : IouMode::kRotated;
  options.length_tol_mm = a.length_tol;
  const CorpusReport report = evaluate_corpus(inputs, catalog, options, a.jobs);
  if (!a.out.empty()) write_output(a.out, report_to_string(report));

  char head[160];
  std::snprintf(head, sizeof head, "%-8s %10s %10s %10s %10s %10s\n", "", "retrieval",
                "precision", "recall", "f1", "param");
  std::cout << head
            << table_row("macro", report.macro.retrieval_accuracy, report.macro.precision,
                         report.macro.recall, report.macro.f1, report.macro.param_accuracy)
            << table_row("micro", report.micro.retrieval_accuracy, report.micro.precision,
                         report.micro.recall, report.micro.f1, report.micro.param_accuracy);
  std::cout << "samples " << report.samples.size() << ", evaluated " << report.evaluated
            << ", prediction failures " << report.pred_failures
            << ", ground-truth failures " << report.gt_failures << "\n";
  const bool failures = report.pred_failures > 0 || report.gt_failures > 0;
  return mismatch || failures ? kExitDiagnostics : kExitOk;
}

// ---------------------------------------------------------------------------
// synth / perturb / stats

struct SynthArgs {
  std::uint64_t seed = 0;
  int count = 0;
  std::string out;
  std::string format = "python";
  int min_instances = 1;
  int max_instances = kMaxPrimitives;
};

std::string sample_id(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06zu", i);
  return buf;
}

int run_synth(const SynthArgs& a, const CatalogOption& cat) {
  const PrimitiveCatalog catalog = cat.load();
  if (a.min_instances > a.max_instances) {
    fail(kExitUsage, "--min-instances exceeds --max-instances");
  }
  const FileFormat format = *parse_file_format(a.format);
  ensure_directory(a.out);
  Manifest manifest;
  manifest.format = format;
  manifest.extra["catalog"] = catalog.version();
  manifest.extra["generator"] = {{"seed", a.seed},
                                 {"count", a.count},
                                 {"min_instances", a.min_instances},
                                 {"max_instances", a.max_instances}};
  for (int i = 0; i < a.count; ++i) {
    SynthSpec spec;
    spec.seed = derive_seed(a.seed, static_cast<std::uint64_t>(i));
    spec.min_instances = a.min_instances;
    spec.max_instances = a.max_instances;
    const CabinetModel model = generate(spec, catalog);
    ManifestEntry e;
    e.id = sample_id(static_cast<std::size_t>(i));
    e.file = e.id + std::string(file_extension(format));
    e.seed = spec.seed;
    write_output((fs::path(a.out) / e.file).string(), format_model(model, format, catalog));
    manifest.samples.push_back(std::move(e));
  }
  write_output((fs::path(a.out) / kManifestFile).string(), manifest_to_string(manifest));
  std::cout << "wrote " << a.count << " cabinets to " << a.out << "\n";
  return kExitOk;
}

struct PerturbArgs {
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  std::string format = "auto";
  PerturbSpec spec;
  std::optional<std::size_t> drop_count;
};

int run_perturb(PerturbArgs a, const CatalogOption& cat) {
  const PrimitiveCatalog catalog = cat.load();
  auto listing = list_corpus(a.in);
  print_diagnostics(listing.diagnostics(), a.in);
  if (!listing) throw Exit{kExitUsage};
  ensure_directory(a.out);
  Manifest manifest;
  manifest.extra["perturb"] = {{"seed", a.seed},
                               {"position_sigma_mm", a.spec.position_sigma_mm},
                               {"size_sigma_mm", a.spec.size_sigma_mm},
                               {"id_swap_rate", a.spec.id_swap_rate},
                               {"drop_rate", a.spec.drop_rate},
                               {"add_rate", a.spec.add_rate},
                               {"param_corrupt_rate", a.spec.param_corrupt_rate}};
  if (a.drop_count) manifest.extra["perturb"]["drop_count"] = *a.drop_count;
  a.spec.drop_count = a.drop_count;
  bool failures = false;
  std::optional<FileFormat> out_format = format_flag(a.format);
  std::size_t index = 0;
  for (const auto& e : listing.value().samples) {
    const fs::path path = listing.value().root / e.file;
    auto text = read_file(path);
    if (!text) fail(kExitUsage, "cannot read " + path.string());
    const FileFormat in_format = detect_format(path, *text);
    auto model = parse_model(*text, in_format, catalog, false);
    print_diagnostics(model.diagnostics(), path.string());
    if (!model) {
      failures = true;
      ++index;
      continue;
    }
    PerturbSpec spec = a.spec;
    spec.seed = derive_seed(a.seed, index++);
    const CabinetModel out = perturb(model.value(), spec, catalog);
    const FileFormat format = out_format.value_or(in_format);
    manifest.format = format;
    ManifestEntry oe;
    oe.id = e.id;
    oe.file = e.id + std::string(file_extension(format));
    oe.seed = spec.seed;
    write_output((fs::path(a.out) / oe.file).string(), format_model(out, format, catalog));
    manifest.samples.push_back(std::move(oe));
  }
  write_output((fs::path(a.out) / kManifestFile).string(), manifest_to_string(manifest));
  return failures ? kExitDiagnostics : kExitOk;
}

struct StatsArgs {
  std::string in;
  std::string out = "-";
};

int run_stats(const StatsArgs& a, const CatalogOption& cat) {
  const PrimitiveCatalog catalog = cat.load();
  auto listing = list_corpus(a.in);
  print_diagnostics(listing.diagnostics(), a.in);
  if (!listing) throw Exit{kExitUsage};
  std::vector<CabinetModel> corpus;
  bool failures = false;
  for (const auto& e : listing.value().samples) {
    const fs::path path = listing.value().root / e.file;
    auto model = load_model(path, catalog, false);
    print_diagnostics(model.diagnostics(), path.string());
    if (!model) {
      failures = true;
      continue;
    }
    corpus.push_back(std::move(model).value());
  }
  if (corpus.empty()) fail(kExitUsage, "no readable cabinets in " + a.in);
  write_output(a.out, stats_to_string(stats(corpus)));
  return failures ? kExitDiagnostics : kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Shape programs for parametric cabinets: validate, convert, render, "
               "evaluate and synthesize.",
               "cabprog"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cabprog 1.0.0");
  CatalogOption cat;
  app.add_option("--catalog", cat.path,
                 "Catalog file (default: $CABINET_CATALOG, else the built-in catalog)");

  ValidateArgs va;
  auto* validate_cmd = app.add_subcommand("validate", "Check a shape program");
  validate_cmd->add_option("path", va.path, "Program file")->required();
  validate_cmd->add_flag("--filters", va.filters,
                         "Also apply dataset filters (1-48 primitives, 100-4500 mm)");
  validate_cmd->add_flag("--strict", va.strict,
                         "Treat unknown models and parameter problems as errors");
  validate_cmd->add_option("--format", va.format, "python, yaml, commands or auto")
      ->check(CLI::IsMember({"auto", "python", "yaml", "commands"}));

  ConvertArgs ca;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between formats");
  convert_cmd->add_option("input", ca.in, "Input program")->required();
  convert_cmd->add_option("output", ca.out, "Output file, - for stdout");
  convert_cmd->add_option("--to", ca.to, "python, yaml or commands")
      ->required()
      ->check(CLI::IsMember({"python", "yaml", "commands"}));
  convert_cmd->add_option("--from", ca.from, "Input format (default: auto)")
      ->check(CLI::IsMember({"auto", "python", "yaml", "commands"}));

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "Draw a cabinet as SVG");
  render_cmd->add_option("input", ra.in, "Input program")->required();
  render_cmd->add_option("output", ra.out, "SVG file, - for stdout");
  render_cmd->add_option("--views", ra.views, "Views: front, top, side, section")
      ->delimiter(',')
      ->check(CLI::IsMember({"front", "top", "side", "section"}))
      ->expected(1, 5);
  render_cmd->add_option("--layers", ra.layers, "Layers: geometry, annotation")
      ->delimiter(',')
      ->check(CLI::IsMember({"geometry", "annotation"}));
  render_cmd->add_option("--canvas", ra.canvas, "Canvas size in pixels")
      ->check(CLI::Range(16, 65536));
  render_cmd->add_option("--margin", ra.margin, "Margin in pixels")
      ->check(CLI::Range(0.0, 1000.0));
  render_cmd->add_option("--seed,--noise-seed", ra.seed, "Noise seed");
  render_cmd->add_flag("--noise", ra.noise,
                       "Enable noise with default rates (drop 0.05, jitter 2 mm, "
                       "spurious 0.02)");
  render_cmd->add_option("--p-drop", ra.p_drop, "Segment drop probability")
      ->check(CLI::Range(0.0, 1.0));
  render_cmd->add_option("--jitter", ra.jitter, "Endpoint jitter sigma in mm")
      ->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--p-spurious", ra.p_spurious, "Spurious segment rate")
      ->check(CLI::Range(0.0, 1.0));
  render_cmd->add_option("--style", ra.style, "Style file")->check(CLI::ExistingFile);
  render_cmd->add_option("--section-y", ra.section_y, "Section cut plane (mm)");
  render_cmd->add_option("--min-dim", ra.min_dim,
                         "Smallest instance extent that gets a dimension (mm)")
      ->check(CLI::NonNegativeNumber);

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Score predictions against ground truth");
  eval_cmd->add_option("--pred", ea.pred, "Prediction directory or manifest")->required();
  eval_cmd->add_option("--gt", ea.gt, "Ground-truth directory or manifest")->required();
  eval_cmd->add_option("--iou", ea.iou, "True-positive IoU threshold (strict >)")
      ->check(CLI::Range(0.0, 1.0));
  eval_cmd->add_option("--out", ea.out, "Report JSON file");
  eval_cmd->add_option("--retrieval-over", ea.retrieval_over,
                       "Retrieval denominator: tp or all matched pairs")
      ->check(CLI::IsMember({"tp", "all"}));
  eval_cmd->add_option("--iou-mode", ea.iou_mode, "rotated or aabb")
      ->check(CLI::IsMember({"rotated", "aabb"}));
  eval_cmd->add_option("--length-tol", ea.length_tol,
                       "Tolerance for length parameters (mm)")
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  SynthArgs sa;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth_cmd->add_option("--seed", sa.seed, "Corpus seed");
  synth_cmd->add_option("--count", sa.count, "Number of cabinets")
      ->required()
      ->check(CLI::Range(1, 1000000));
  synth_cmd->add_option("--out", sa.out, "Output directory")->required();
  synth_cmd->add_option("--format", sa.format, "python, yaml or commands")
      ->check(CLI::IsMember({"python", "yaml", "commands"}));
  synth_cmd->add_option("--min-instances", sa.min_instances)->check(CLI::Range(1, 48));
  synth_cmd->add_option("--max-instances", sa.max_instances)->check(CLI::Range(1, 48));

  PerturbArgs pa;
  auto* perturb_cmd =
      app.add_subcommand("perturb", "Derive degraded predictions from a corpus");
  perturb_cmd->add_option("--in", pa.in, "Input corpus")->required();
  perturb_cmd->add_option("--out", pa.out, "Output directory")->required();
  perturb_cmd->add_option("--seed", pa.seed, "Perturbation seed");
  perturb_cmd->add_option("--format", pa.format, "Output format (default: as input)")
      ->check(CLI::IsMember({"auto", "python", "yaml", "commands"}));
  perturb_cmd->add_option("--jitter", pa.spec.position_sigma_mm, "Position sigma (mm)")
      ->check(CLI::NonNegativeNumber);
  perturb_cmd->add_option("--size-jitter", pa.spec.size_sigma_mm, "Size sigma (mm)")
      ->check(CLI::NonNegativeNumber);
  perturb_cmd->add_option("--swap-rate", pa.spec.id_swap_rate, "Model-id swap rate")
      ->check(CLI::Range(0.0, 1.0));
  perturb_cmd->add_option("--drop-rate", pa.spec.drop_rate, "Instance drop rate")
      ->check(CLI::Range(0.0, 1.0));
  perturb_cmd->add_option("--drop-count", pa.drop_count,
                          "Drop exactly this many instances per cabinet");
  perturb_cmd->add_option("--add-rate", pa.spec.add_rate, "Spurious instance rate")
      ->check(CLI::Range(0.0, 1.0));
  perturb_cmd->add_option("--param-rate", pa.spec.param_corrupt_rate,
                          "Parameter corruption rate")
      ->check(CLI::Range(0.0, 1.0));

  StatsArgs sta;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics as JSON");
  stats_cmd->add_option("--in", sta.in, "Corpus directory or manifest")->required();
  stats_cmd->add_option("--out", sta.out, "Output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return run_validate(va, cat);
    if (*convert_cmd) return run_convert(ca, cat);
    if (*render_cmd) return run_render(ra, cat);
    if (*eval_cmd) return run_eval(ea, cat);
    if (*synth_cmd) return run_synth(sa, cat);
    if (*perturb_cmd) return run_perturb(pa, cat);
    if (*stats_cmd) return run_stats(sta, cat);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "cabprog: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace cabprog::cli

int main(int argc, char** argv) { return cabprog::cli::run(argc, argv); }
