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

// Everything in one include.

#include "cabprog/assignment.hpp"
#include "cabprog/catalog.hpp"
#include "cabprog/codec.hpp"
#include "cabprog/common.hpp"
#include "cabprog/constants.hpp"
#include "cabprog/corpus.hpp"
#include "cabprog/drawing.hpp"
#include "cabprog/geometry.hpp"
#include "cabprog/metrics.hpp"
#include "cabprog/model.hpp"
#include "cabprog/program.hpp"
#include "cabprog/report_json.hpp"
#include "cabprog/rng.hpp"
#include "cabprog/synth.hpp"
#include "cabprog/text.hpp"
#include "cabprog/yaml_lite.hpp"
