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

// Command-line fixtures shared by the golden suite and the acceptance run.
// Each fixture is a short script of cabprog invocations run from
// tests/fixtures; "{tmp}" expands to a scratch directory. The transcript of a
// fixture records exit status, stdout, stderr and any listed output files,
// with the scratch path replaced by "$TMP".

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cabprog::testing {

struct CliFixture {
  std::string name;
  std::vector<std::string> commands;  // arguments after the program name
  std::vector<std::string> files;     // outputs under {tmp} to record
};

inline void PrintTo(const CliFixture& f, std::ostream* os) { *os << f.name; }

inline const std::vector<CliFixture>& cli_fixtures() {
  static const std::vector<CliFixture> kFixtures = {
      {"validate_ok", {"validate --filters --strict cabinet.py"}, {}},
      {"validate_width_warning", {"validate wide.py"}, {}},
      {"validate_parse_errors", {"validate broken.py"}, {}},
      {"validate_filter_count", {"validate crowded.py", "validate --filters crowded.py"}, {}},
      {"convert_python_to_yaml", {"convert cabinet.py - --to yaml"}, {}},
      {"convert_yaml_to_python", {"convert cabinet2.yaml - --to python"}, {}},
      {"convert_commands_round_trip",
       {"convert cabinet.py {tmp}/c.cmd --to commands",
        "convert {tmp}/c.cmd - --to python"},
       {"c.cmd"}},
      {"render_default", {"render cabinet.py -"}, {}},
      {"render_geometry_only", {"render cabinet2.yaml - --layers geometry"}, {}},
      {"render_noise", {"render cabinet.py - --views front,top --noise --seed 5"}, {}},
      {"render_section",
       {"render cabinet.py {tmp}/s.svg --views section --section-y 300 --canvas 256"},
       {"s.svg"}},
      {"synth_yaml",
       {"synth --seed 11 --count 3 --max-instances 8 --format yaml --out {tmp}/gt"},
       {"gt/manifest.json", "gt/000000.yaml", "gt/000002.yaml"}},
      {"eval_pipeline",
       {"synth --seed 3 --count 6 --out {tmp}/gt",
        "perturb --in {tmp}/gt --out {tmp}/pred --seed 9 --jitter 30 --swap-rate 0.2 "
        "--drop-rate 0.1",
        "eval --pred {tmp}/pred --gt {tmp}/gt --out {tmp}/report.json"},
       {"pred/manifest.json", "pred/000004.py", "report.json"}},
      {"eval_aabb_all_pairs",
       {"synth --seed 4 --count 2 --out {tmp}/gt",
        "perturb --in {tmp}/gt --out {tmp}/pred --seed 2 --swap-rate 0.5",
        "eval --pred {tmp}/pred --gt {tmp}/gt --iou-mode aabb --retrieval-over all "
        "--out -"},
       {}},
      {"stats", {"synth --seed 5 --count 20 --out {tmp}/gt", "stats --in {tmp}/gt"}, {}},
      {"usage_errors",
       {"convert cabinet.py - --to json", "validate missing.py",
        "synth --count 0 --out {tmp}/x", "render cabinet.py - --views back"},
       {}},
  };
  return kFixtures;
}

inline std::string read_all(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void replace_all(std::string& s, const std::string& from, const std::string& to) {
  if (from.empty()) return;
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos;
       pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
}

// Runs `fixture` with the CLI at `cli` inside fresh scratch directory `tmp`
// and returns its transcript.
inline std::string run_cli_fixture(const CliFixture& fixture, const std::string& cli,
                                   const std::filesystem::path& fixtures_dir,
                                   const std::filesystem::path& tmp) {
  namespace fs = std::filesystem;
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  const std::string tmp_s = tmp.string();
  std::string out;
  for (std::size_t i = 0; i < fixture.commands.size(); ++i) {
    std::string args = fixture.commands[i];
    replace_all(args, "{tmp}", tmp_s);
    const fs::path so = tmp / ".stdout", se = tmp / ".stderr";
    const std::string cmd = "cd '" + fixtures_dir.string() + "' && '" + cli + "' " +
                            args + " > '" + so.string() + "' 2> '" + se.string() + "'";
    const int raw = std::system(cmd.c_str());
    const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::string shown = fixture.commands[i];
    out += "$ cabprog " + shown + "\n";
    out += "[exit " + std::to_string(status) + "]\n";
    out += "[stdout]\n" + read_all(so);
    out += "[stderr]\n" + read_all(se);
  }
  for (const auto& f : fixture.files) {
    out += "[file " + f + "]\n" + read_all(tmp / f);
  }
  replace_all(out, tmp_s, "$TMP");
  return out;
}

}  // namespace cabprog::testing
