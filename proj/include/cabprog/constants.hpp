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

// Protocol constants. Every other module reads these; tests pin them.

namespace cabprog {

// Evaluation: a matched prediction is a true positive iff IoU is strictly
// greater than this value.
inline constexpr double kTruePositiveIou = 0.5;

// Dataset filters.
inline constexpr double kMinCabinetExtentMm = 100.0;
inline constexpr double kMaxCabinetExtentMm = 4500.0;
inline constexpr int kMaxPrimitives = 48;
inline constexpr int kMaxParamsPerPrimitive = 8;

// Command codec.
inline constexpr int kLengthBins = 1500;
inline constexpr double kLengthResolutionMm = 3.0;
inline constexpr int kRotationBins = 4;
inline constexpr int kTokensPerCommand = 8;

// Drawing.
inline constexpr int kDefaultCanvasPx = 512;

// Geometry tolerances.
inline constexpr double kOctantEpsilonMm = 1e-6;
inline constexpr double kClipEpsilonMm = 1e-9;

}  // namespace cabprog
