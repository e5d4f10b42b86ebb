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

// Fixed-slot quantized command sequences. Each primitive becomes eight
// integer tokens:
//
//   slot  px py pz  sx sy sz  rot
//
// where slot is the catalog declaration index, lengths use 1500 bins of 3 mm
// and rotation uses 4 bins of 90 degrees. Model-specific parameters are not
// represented; decoding fills catalog defaults.
//
// Text form, one command per line between sentinel lines:
//
//   <s>
//   0 100 66 333 200 133 666 0
//   </s>

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cabprog/catalog.hpp"
#include "cabprog/common.hpp"
#include "cabprog/constants.hpp"
#include "cabprog/geometry.hpp"
#include "cabprog/model.hpp"
#include "cabprog/text.hpp"

namespace cabprog {

inline constexpr std::string_view kSequenceStart = "<s>";
inline constexpr std::string_view kSequenceEnd = "</s>";

struct Command {
  std::int32_t model_slot = 0;
  std::array<std::int32_t, 3> pos_bins{};
  std::array<std::int32_t, 3> size_bins{};
  std::int32_t rot_bin = 0;

  friend bool operator==(const Command&, const Command&) = default;
};

struct CommandSequence {
  std::vector<Command> commands;

  friend bool operator==(const CommandSequence&,
                         const CommandSequence&) = default;
};

// Tokens including the two sentinels.
inline std::size_t token_count(const CommandSequence& seq) {
  return static_cast<std::size_t>(kTokensPerCommand) * seq.commands.size() + 2;
}

// floor(v / 3) clamped to [0, 1499]. Values outside [0, 4500] mm (or NaN)
// add a "codec-clamp" warning when `diags` is given.
inline std::int32_t quantize_length(double v, DiagnosticList* diags = nullptr) {
  constexpr double kMax = kLengthResolutionMm * kLengthBins;
  if (!(v >= 0.0 && v <= kMax) && diags != nullptr) {
    diags->push_back(make_warning(
        "codec-clamp", "length " + text::format_number(v) +
                           " mm outside [0, " + text::format_number(kMax) +
                           "] mm was clamped"));
  }
  if (!(v > 0.0)) return 0;
  double bin = std::floor(v / kLengthResolutionMm);
  if (bin >= kLengthBins - 1) return kLengthBins - 1;
  return static_cast<std::int32_t>(bin);
}

// Bin center. Throws std::out_of_range outside [0, 1500).
inline double dequantize_length(std::int32_t bin) {
  if (bin < 0 || bin >= kLengthBins) {
    throw std::out_of_range("length bin " + std::to_string(bin) +
                            " outside [0, " + std::to_string(kLengthBins) + ")");
  }
  return bin * kLengthResolutionMm + kLengthResolutionMm / 2.0;
}

// Nearest multiple of 90 degrees, halves rounding up.
inline std::int32_t quantize_rotation(double deg) {
  const double c = canonical_degrees(deg);
  const double step = 360.0 / kRotationBins;
  auto bin = static_cast<std::int32_t>(std::floor(c / step + 0.5));
  return bin % kRotationBins;
}

inline double dequantize_rotation(std::int32_t bin) {
  if (bin < 0 || bin >= kRotationBins) {
    throw std::out_of_range("rotation bin " + std::to_string(bin) +
                            " outside [0, " + std::to_string(kRotationBins) + ")");
  }
  return bin * (360.0 / kRotationBins);
}

inline Result<CommandSequence> encode(const CabinetModel& model,
                                      const PrimitiveCatalog& catalog) {
  DiagnosticList diags;
  if (model.instances.empty()) {
    diags.push_back(make_error("empty-model", "cannot encode an empty cabinet"));
  }
  if (model.instances.size() > static_cast<std::size_t>(kMaxPrimitives)) {
    diags.push_back(make_error(
        "codec-length", "cabinet has " + std::to_string(model.instances.size()) +
                            " primitives; sequences hold at most " +
                            std::to_string(kMaxPrimitives)));
  }
  CommandSequence seq;
  for (std::size_t i = 0; i < model.instances.size(); ++i) {
    const auto& inst = model.instances[i];
    auto slot = catalog.slot_of(inst.model_id);
    if (!slot) {
      diags.push_back(make_error("unknown-model",
                                 "instance " + std::to_string(i) +
                                     ": unknown model id '" + inst.model_id + "'"));
      continue;
    }
    Command c;
    c.model_slot = static_cast<std::int32_t>(*slot);
    for (int k = 0; k < 3; ++k) {
      c.pos_bins[k] = quantize_length(inst.box.position[k], &diags);
      c.size_bins[k] = quantize_length(inst.box.size[k], &diags);
    }
    c.rot_bin = quantize_rotation(inst.box.rotation_deg);
    seq.commands.push_back(c);
  }
  if (has_errors(diags)) return Result<CommandSequence>::failure(diags);
  return Result<CommandSequence>(std::move(seq), std::move(diags));
}

// Inverse of encode up to quantization error. A decoded box whose bin-center
// placement would poke below zero on some axis is nudged up onto the 0.1 mm
// grid so that it stays in the first octant (a shift below 1 mm).
inline Result<CabinetModel> decode(const CommandSequence& seq,
                                   const PrimitiveCatalog& catalog) {
  DiagnosticList diags;
  if (seq.commands.empty()) {
    diags.push_back(make_error("empty-model", "command sequence is empty"));
  }
  if (seq.commands.size() > static_cast<std::size_t>(kMaxPrimitives)) {
    diags.push_back(make_error(
        "codec-length", "sequence has " + std::to_string(seq.commands.size()) +
                            " commands; at most " +
                            std::to_string(kMaxPrimitives) + " are allowed"));
  }
  CabinetModel model;
  for (std::size_t i = 0; i < seq.commands.size(); ++i) {
    const Command& c = seq.commands[i];
    const std::string where = "command " + std::to_string(i) + ": ";
    if (c.model_slot < 0 ||
        static_cast<std::size_t>(c.model_slot) >= catalog.size()) {
      diags.push_back(make_error(
          "codec-slot", where + "model slot " + std::to_string(c.model_slot) +
                            " is not in the catalog"));
      continue;
    }
    bool in_range = c.rot_bin >= 0 && c.rot_bin < kRotationBins;
    for (int k = 0; k < 3; ++k) {
      in_range = in_range && c.pos_bins[k] >= 0 && c.pos_bins[k] < kLengthBins &&
                 c.size_bins[k] >= 0 && c.size_bins[k] < kLengthBins;
    }
    if (!in_range) {
      diags.push_back(make_error("codec-bin", where + "bin index out of range"));
      continue;
    }
    const PrimitiveSchema& schema = catalog.at(static_cast<std::size_t>(c.model_slot));
    PrimitiveInstance inst;
    inst.model_id = schema.model_id;
    inst.name = schema.name;
    for (int k = 0; k < 3; ++k) {
      inst.box.position[k] = dequantize_length(c.pos_bins[k]);
      inst.box.size[k] = dequantize_length(c.size_bins[k]);
    }
    inst.box.rotation_deg = dequantize_rotation(c.rot_bin);
    const Aabb3 bounds = box_aabb(inst.box);
    for (int k = 0; k < 3; ++k) {
      if (bounds.min[k] < 0.0) {
        const double half = inst.box.position[k] - bounds.min[k];
        inst.box.position[k] = std::ceil(half * 10.0) / 10.0;
      }
    }
    inst.params = default_params(schema);
    model.instances.push_back(std::move(inst));
  }
  if (has_errors(diags)) return Result<CabinetModel>::failure(diags);
  return Result<CabinetModel>(std::move(model), std::move(diags));
}

inline std::string to_text(const CommandSequence& seq) {
  std::string out(kSequenceStart);
  out += '\n';
  for (const Command& c : seq.commands) {
    out += std::to_string(c.model_slot);
    for (auto b : c.pos_bins) out += ' ' + std::to_string(b);
    for (auto b : c.size_bins) out += ' ' + std::to_string(b);
    out += ' ' + std::to_string(c.rot_bin) + '\n';
  }
  out += kSequenceEnd;
  out += '\n';
  return out;
}

// Parses the text form. Checks sentinels and token shape only; bin ranges are
// checked by decode().
inline Result<CommandSequence> parse_commands(std::string_view text) {
  DiagnosticList diags;
  LineIndex index(text);
  CommandSequence seq;
  bool started = false;
  bool ended = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t line_offset = pos;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string_view::npos) continue;
    std::size_t e = line.find_last_not_of(" \t");
    std::string_view body = line.substr(b, e - b + 1);
    const SourceSpan span = index.span(line_offset + b);
    if (body == kSequenceStart) {
      if (started) {
        diags.push_back(make_error("codec-sentinel", "duplicate <s>", span));
      }
      started = true;
      continue;
    }
    if (body == kSequenceEnd) {
      if (!started || ended) {
        diags.push_back(make_error(
            "codec-sentinel", ended ? "duplicate </s>" : "</s> before <s>", span));
      }
      ended = true;
      continue;
    }
    if (!started || ended) {
      diags.push_back(make_error("codec-sentinel",
                                 "command outside the <s> ... </s> block", span));
      continue;
    }
    std::vector<std::int32_t> tokens;
    bool bad = false;
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i;
      std::size_t s = i;
      while (i < body.size() && body[i] != ' ' && body[i] != '\t') ++i;
      if (s == i) break;
      auto v = text::parse_int(body.substr(s, i - s));
      if (!v || *v < INT32_MIN || *v > INT32_MAX) {
        bad = true;
        break;
      }
      tokens.push_back(static_cast<std::int32_t>(*v));
    }
    if (bad || tokens.size() != static_cast<std::size_t>(kTokensPerCommand)) {
      diags.push_back(make_error(
          "codec-syntax",
          "expected " + std::to_string(kTokensPerCommand) + " integer tokens",
          span));
      continue;
    }
    Command c;
    c.model_slot = tokens[0];
    for (int k = 0; k < 3; ++k) {
      c.pos_bins[k] = tokens[1 + k];
      c.size_bins[k] = tokens[4 + k];
    }
    c.rot_bin = tokens[7];
    seq.commands.push_back(c);
  }
  if (!started || !ended) {
    diags.push_back(make_error("codec-sentinel",
                               !started ? "missing <s>" : "missing </s>",
                               index.span(text.size())));
  }
  if (has_errors(diags)) return Result<CommandSequence>::failure(diags);
  return Result<CommandSequence>(std::move(seq), std::move(diags));
}

}  // namespace cabprog
