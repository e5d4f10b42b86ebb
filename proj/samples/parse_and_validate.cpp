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


// Parses a small shape program, reports diagnostics and prints the same
// cabinet in YAML and as codec commands.

#include <iostream>

#include "cabprog/cabprog.hpp"

int main() {
  using namespace cabprog;
  const PrimitiveCatalog& catalog = builtin_catalog();

  const char* program =
      "b0 = Box(position=(300, 200, 1000), size=(600, 400, 2000), rotation=0)\n"
      "m0 = Model(id=\"M-BB01\", box=b0, N=2, NKA=273, NKB=273, DBXX=1)\n"
      "b1 = Box(position=(150, 9, 1000), size=(282, 18, 1900), rotation=0)\n"
      "m1 = Model(id=\"M-DOOR\", box=b1)\n";

  Result<CabinetModel> parsed = parse_python(program, catalog);
  for (const Diagnostic& d : parsed.diagnostics()) {
    std::cerr << format_diagnostic(d, "program.py") << "\n";
  }
  if (!parsed) return 1;

  const CabinetModel& model = parsed.value();
  DiagnosticList issues = validate(model, catalog, /*filters=*/true);
  for (const Diagnostic& d : issues) std::cerr << format_diagnostic(d) << "\n";
  std::cout << model.instances.size() << " primitives, "
            << (has_errors(issues) ? "invalid" : "valid") << "\n\n";

  std::cout << emit_yaml(model, catalog) << "\n";
  std::cout << to_text(encode(model, catalog).value());
  return has_errors(issues) ? 1 : 0;
}
