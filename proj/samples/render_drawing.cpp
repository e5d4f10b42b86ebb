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


// Generates a cabinet and draws its front, top and side views with
// dimensions and symbols. Usage: sample_render_drawing [seed] [out.svg]

#include <cstdlib>
#include <iostream>
#include <string>

#include "cabprog/cabprog.hpp"

int main(int argc, char** argv) {
  using namespace cabprog;
  const PrimitiveCatalog& catalog = builtin_catalog();
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2026;

  CabinetModel model = generate(SynthSpec{seed}, catalog);

  constexpr ViewKind kViews[] = {ViewKind::kFront, ViewKind::kTop, ViewKind::kSide};
  auto views = annotate(render_views(model, kViews), model, catalog);
  // Mild line noise, as a scanned drawing would have.
  views = inject_noise(std::move(views), kDefaultNoise, seed);
  Sheet sheet = layout_sheet(std::move(views));

  const std::string svg = to_svg(sheet);
  if (argc > 2) {
    if (!write_file(argv[2], svg)) {
      std::cerr << "cannot write " << argv[2] << "\n";
      return 1;
    }
    std::cout << "wrote " << argv[2] << " (scale " << sheet.scale << " px/mm)\n";
  } else {
    std::cout << svg;
  }
  return 0;
}
