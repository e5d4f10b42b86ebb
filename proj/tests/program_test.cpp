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

#include <string>

#include "cabprog/program.hpp"
#include "test_support.hpp"

namespace cabprog {
namespace {

const PrimitiveCatalog& cat() { return builtin_catalog(); }

std::size_t nonempty_lines(const std::string& s) {
  std::size_t n = 0;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t eol = s.find('\n', start);
    if (eol == std::string::npos) eol = s.size();
    if (s.find_first_not_of(" \t", start) < eol) ++n;
    start = eol + 1;
  }
  return n;
}

PrimitiveInstance door_at(double x, double y, double z, double w = 400,
                          double d = 20, double h = 700) {
  PrimitiveInstance inst;
  inst.model_id = "M-DOOR";
  inst.name = "Door";
  inst.box.position = {x, y, z};
  inst.box.size = {w, d, h};
  return inst;
}

TEST(ProgramPython, TwoStatementBlock) {
  auto r = parse_python(
      "b0 = Box(position=(300, 200, 1000), size=(600, 400, 2000), rotation=0)\n"
      "m0 = Model(id=\"M-BB01\", box=b0, N=2, NKA=298, NKB=298, DBXX=1)\n",
      cat());
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->instances.size(), 1u);
  const auto& inst = r->instances[0];
  EXPECT_EQ(inst.model_id, "M-BB01");
  EXPECT_EQ(inst.name, "Base box");
  EXPECT_EQ(inst.box.position, (Vec3{300, 200, 1000}));
  EXPECT_EQ(inst.box.size, (Vec3{600, 400, 2000}));
  ParamMap expected{{"N", std::int64_t{2}}, {"NKA", 298.0}, {"NKB", 298.0},
                    {"DBXX", EnumToken{"1"}}};
  EXPECT_EQ(inst.params, expected);
}

TEST(ProgramPython, EmptyParams) {
  auto r = parse_python(
      "b0 = Box(position=(10, 10, 10), size=(20, 20, 20), rotation=0)\n"
      "m0 = Model(id=\"M-DOOR\", box=b0)\n",
      cat());
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->instances[0].params.empty());
}

TEST(ProgramPython, TwoVectorSizeIsAnArityErrorAtItsSpan) {
  const std::string text =
      "b0 = Box(position=(300, 200, 1000), size=(600, 400), rotation=0)\n"
      "m0 = Model(id=\"M-DOOR\", box=b0)\n";
  auto r = parse_python(text, cat());
  ASSERT_FALSE(r.ok());
  ASSERT_TRUE(has_code(r.diagnostics(), "arity"));
  for (const auto& d : r.diagnostics()) {
    if (d.code != "arity") continue;
    ASSERT_TRUE(d.span.has_value());
    EXPECT_EQ(d.span->line, 1u);
    EXPECT_EQ(text.substr(d.span->offset, 11), "(600, 400),");
  }
}

TEST(ProgramPython, CommentsAndContinuationLines) {
  auto r = parse_python(
      "# cabinet\n"
      "b0 = Box(position=(10, 10, 10),  # centre\n"
      "         size=(20, 20, 20),\n"
      "         rotation=0)\n"
      "\n"
      "m0 = Model(id='M-DRAWER', name=\"Top\\tdrawer \\u00e9\", box=b0, HDL=\"knob\")\n",
      cat());
  ASSERT_TRUE(r.ok()) << format_diagnostic(r.diagnostics().at(0));
  EXPECT_EQ(r->instances[0].name, "Top\tdrawer \xc3\xa9");
  EXPECT_EQ(*r->instances[0].params.find("HDL"), ParamValue(std::string("knob")));
}

TEST(ProgramPython, StructuralErrors) {
  struct Case {
    const char* text;
    const char* code;
  } cases[] = {
      {"m0 = Model(id=\"M-DOOR\", box=nope)\n", "undefined-box"},
      {"b0 = Box(position=(1, 1, 1), size=(2, 2, 2), rotation=0, rotation=1)\n",
       "duplicate-key"},
      {"b0 = Box(position=(1, 1, 1), size=(2, 2, 2), rotation=\"x\")\n", "type"},
      {"b0 = Box(position=(1, 1, 1), size=(2, 2, 2), rotation=0\n", "syntax"},
      {"", "empty-model"},
      {"# nothing\n", "empty-model"},
      {"b0 = Box(position=(1, 1, 1), size=(0, 2, 2), rotation=0)\n"
       "m0 = Model(id=\"M-DOOR\", box=b0)\n",
       "box-size"},
  };
  for (const auto& c : cases) {
    auto r = parse_python(c.text, cat());
    EXPECT_FALSE(r.ok()) << c.text;
    EXPECT_TRUE(has_code(r.diagnostics(), c.code)) << c.text;
  }
}

TEST(ProgramPython, UnusedBoxIsAWarning) {
  auto r = parse_python(
      "b0 = Box(position=(10, 10, 10), size=(20, 20, 20), rotation=0)\n"
      "b1 = Box(position=(10, 10, 10), size=(20, 20, 20), rotation=0)\n"
      "m0 = Model(id=\"M-DOOR\", box=b0)\n",
      cat());
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(has_code(r.diagnostics(), "unused-box"));
}

TEST(ProgramPython, SchemaProblemsAreWarningsUnlessStrict) {
  const std::string text =
      "b0 = Box(position=(300, 200, 1000), size=(600, 400, 2000), rotation=0)\n"
      "m0 = Model(id=\"M-BB01\", box=b0, DBXX=5, ZZ=1)\n"
      "b1 = Box(position=(300, 200, 1000), size=(600, 400, 2000), rotation=0)\n"
      "m1 = Model(id=\"M-SOFA\", box=b1, Q=2.5)\n";
  auto lenient = parse_python(text, cat());
  ASSERT_TRUE(lenient.ok());
  EXPECT_TRUE(has_code(lenient.diagnostics(), "param-domain"));
  EXPECT_TRUE(has_code(lenient.diagnostics(), "param-unknown"));
  EXPECT_TRUE(has_code(lenient.diagnostics(), "unknown-model"));
  // Unknown values are kept verbatim.
  EXPECT_EQ(*lenient->instances[1].params.find("Q"), ParamValue(std::string("2.5")));

  auto strict = parse_python(text, cat(), /*strict=*/true);
  EXPECT_FALSE(strict.ok());
}

TEST(ProgramYaml, SingleDoorEntry) {
  auto r = parse_yaml(
      "cabinet:\n"
      "  - id: M-DOOR\n"
      "    position: [200, 10, 400]\n"
      "    size:\n      - 400\n      - 20\n      - 700\n"
      "    rotation: 0\n",
      cat());
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->instances.size(), 1u);
  EXPECT_EQ(r->instances[0], door_at(200, 10, 400));
}

TEST(ProgramYaml, RotationIsCanonicalized) {
  for (auto [in, out] : {std::pair{"450", 90.0}, {"-90", 270.0}, {"360", 0.0}}) {
    auto r = parse_yaml(std::string("cabinet:\n  - id: M-DOOR\n"
                                    "    position: [200, 200, 400]\n"
                                    "    size: [20, 20, 20]\n    rotation: ") +
                            in + "\n",
                        cat());
    ASSERT_TRUE(r.ok()) << in;
    EXPECT_EQ(r->instances[0].box.rotation_deg, out) << in;
  }
}

TEST(ProgramYaml, UnknownFieldIsStrictError) {
  const std::string text =
      "cabinet:\n  - id: M-DOOR\n    position: [200, 200, 400]\n"
      "    size: [20, 20, 20]\n    rotation: 0\n    colour: red\n";
  auto lenient = parse_yaml(text, cat());
  ASSERT_TRUE(lenient.ok());
  EXPECT_TRUE(has_code(lenient.diagnostics(), "unknown-field"));
  EXPECT_FALSE(parse_yaml(text, cat(), true).ok());
}

TEST(ProgramEmit, OneInstanceIsTwoStatements) {
  CabinetModel m{{door_at(200, 10, 400)}};
  const std::string py = emit_python(m, cat());
  EXPECT_EQ(nonempty_lines(py), 2u);
  EXPECT_EQ(py,
            "box_0 = Box(position=(200, 10, 400), size=(400, 20, 700), rotation=0)\n"
            "model_0 = Model(id=\"M-DOOR\", box=box_0)\n");
}

TEST(ProgramEmit, EmptyModelThrows) {
  EXPECT_THROW(emit_python({}, cat()), std::invalid_argument);
  EXPECT_THROW(emit_yaml({}, cat()), std::invalid_argument);
}

TEST(ProgramEmit, YamlIsLongerThanPythonForOneInstance) {
  CabinetModel m{{door_at(200, 10, 400)}};
  EXPECT_GT(emit_yaml(m, cat()).size(), emit_python(m, cat()).size());
}

// Field-exact identity over many random models in both syntaxes.
TEST(ProgramRoundTrip, RandomModelsSurviveBothSyntaxes) {
  Rng rng(20260417);
  for (int i = 0; i < 1000; ++i) {
    const CabinetModel m = testing::random_model(cat(), rng);
    for (Syntax syntax : {Syntax::kPython, Syntax::kYaml}) {
      const std::string text = emit_program(m, syntax, cat());
      auto back = parse_program(text, syntax, cat(), /*strict=*/true);
      ASSERT_TRUE(back.ok()) << text << "\n"
                             << format_diagnostic(back.diagnostics().at(0));
      ASSERT_EQ(back.value(), m) << text;
      EXPECT_FALSE(has_errors(back.diagnostics()));
    }
  }
}

TEST(ProgramRoundTrip, ConvertingThroughYamlPreservesPython) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const CabinetModel m = testing::random_model(cat(), rng, 8);
    const std::string py = emit_python(m, cat());
    auto y = parse_yaml(emit_yaml(parse_python(py, cat()).value(), cat()), cat());
    ASSERT_TRUE(y.ok());
    EXPECT_EQ(emit_python(y.value(), cat()), py);
  }
}

// Mutated programs either parse or fail with spans inside the input.
TEST(ProgramFuzz, MutationsAreTotalAndSpansInRange) {
  Rng rng(99);
  static const char kNoise[] = "()=,\"'#\n 0123456789.-_xyzBoxModel\\";
  for (int i = 0; i < 3000; ++i) {
    const CabinetModel m = testing::random_model(cat(), rng, 3);
    const Syntax syntax = rng.bernoulli(0.5) ? Syntax::kPython : Syntax::kYaml;
    std::string text = emit_program(m, syntax, cat());
    auto edits = rng.uniform_int(1, 4);
    for (std::int64_t e = 0; e < edits; ++e) {
      auto pos = static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(text.size()) - 1));
      switch (rng.uniform_int(0, 2)) {
        case 0: text.erase(pos, 1); break;
        case 1: text.insert(pos, 1, kNoise[rng.uniform_int(0, sizeof(kNoise) - 2)]); break;
        default: text[pos] = kNoise[rng.uniform_int(0, sizeof(kNoise) - 2)]; break;
      }
      if (text.empty()) text = "x";
    }
    auto r = parse_program(text, syntax, cat());
    if (!r.ok()) {
      ASSERT_TRUE(has_errors(r.diagnostics())) << text;
    }
    for (const auto& d : r.diagnostics()) {
      if (!d.span) continue;
      EXPECT_LE(d.span->offset, text.size());
      EXPECT_GE(d.span->line, 1u);
    }
  }
}

TEST(Validate, FiltersOnCountAndExtent) {
  CabinetModel m;
  for (int i = 0; i < 48; ++i) m.instances.push_back(door_at(200 + i * 10, 10, 400));
  EXPECT_FALSE(has_code(validate(m, cat(), true), "filter-count"));
  m.instances.push_back(door_at(200, 10, 400));
  auto d = validate(m, cat(), true);
  EXPECT_TRUE(has_code(d, "filter-count"));
  EXPECT_FALSE(has_code(validate(m, cat(), false), "filter-count"));

  CabinetModel wide{{door_at(2500, 10, 400, 5000)}};
  EXPECT_TRUE(has_code(validate(wide, cat(), true), "filter-size"));
  CabinetModel tiny{{door_at(30, 30, 30, 50, 50, 50)}};
  EXPECT_TRUE(has_code(validate(tiny, cat(), true), "filter-size"));
  CabinetModel edge{{door_at(2250, 10, 400, 4500)}};
  EXPECT_FALSE(has_code(validate(edge, cat(), true), "filter-size"));
}

TEST(Validate, InstanceInvariants) {
  EXPECT_TRUE(has_code(validate({}, cat()), "empty-model"));

  CabinetModel m{{door_at(200, 10, 400)}};
  EXPECT_TRUE(validate(m, cat()).empty());

  auto below = m;
  below.instances[0].box.position.y = 5;  // depth 20 reaches y = -5
  EXPECT_TRUE(has_code(validate(below, cat()), "octant"));

  auto fine = m;
  fine.instances[0].box.position.x = 200.05;
  auto d = validate(fine, cat());
  EXPECT_TRUE(has_code(d, "precision"));
  EXPECT_FALSE(has_errors(d));

  auto rot = m;
  rot.instances[0].box.rotation_deg = 360;
  EXPECT_TRUE(has_code(validate(rot, cat()), "box-rotation"));

  auto nan = m;
  nan.instances[0].box.size.x = std::nan("");
  EXPECT_TRUE(has_code(validate(nan, cat()), "box-finite"));

  auto dbxx = m;
  dbxx.instances[0].model_id = "M-BB01";
  dbxx.instances[0].params = {{"DBXX", EnumToken{"5"}}};
  EXPECT_TRUE(has_code(validate(dbxx, cat()), "param-domain"));

  auto unknown = m;
  unknown.instances[0].model_id = "M-OTHER";
  auto u = validate(unknown, cat());
  EXPECT_TRUE(has_code(u, "unknown-model"));
  EXPECT_FALSE(has_errors(u));
}

TEST(Validate, WidthSumWarning) {
  PrimitiveInstance bb;
  bb.model_id = "M-BB01";
  bb.name = "Base box";
  bb.box.position = {300, 200, 1000};
  bb.box.size = {600, 400, 2000};
  // Interior 600 - 2*18 = 564 holds 273 + 18 + 273 = 564 exactly.
  bb.params = {{"N", std::int64_t{2}}, {"NKA", 273.0}, {"NKB", 273.0}};
  EXPECT_FALSE(has_code(validate(CabinetModel{{bb}}, cat()), "width-sum"));
  bb.params.set("NKB", 273.1);
  EXPECT_TRUE(has_code(validate(CabinetModel{{bb}}, cat()), "width-sum"));
}

}  // namespace
}  // namespace cabprog
