// Copyright 2026 The carkin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the command-line tool: exit codes, file outputs and
// byte determinism. CARKIN_CLI_PATH is injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "carkin/trajectory_io.hpp"
#include "carkin/transport.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "carkin_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out = work_dir() / "stdout.txt";
  const std::string cmd =
      std::string(CARKIN_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.stdout_text = buf.str();
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("simulate: an empty program produces a one-row CSV") {
  const std::string scenario = write_file("empty.json", R"({
    "params": {"R": 1.0, "l": 2.0},
    "initial": {"alpha": 0, "beta": 0, "x": 0, "y": 0, "phi": 0},
    "program": [],
    "step": 0.001
  })");
  const RunResult r = run("simulate " + scenario);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "t,alpha,beta,x,y,phi\n0,0,0,0,0,0\n");
}

TEST_CASE("simulate: fixed-steer endpoint matches the closed form") {
  const std::string scenario = write_file("arc.json", R"({
    "params": {"R": 1.0, "l": 2.0},
    "initial": {"alpha": 0, "beta": 0.7, "x": 0, "y": 0, "phi": 0},
    "program": [{"op": "drive", "delta": 6.283185307179586}],
    "step": 0.001
  })");
  const std::string csv_path = (work_dir() / "arc.csv").string();
  const std::string svg_path = (work_dir() / "arc.svg").string();
  const RunResult r =
      run("simulate " + scenario + " --out " + csv_path + " --svg " + svg_path);
  REQUIRE(r.exit_code == 0);

  const carkin::Trajectory<double> traj =
      carkin::trajectory_from_csv(read_file(csv_path));
  const carkin::CarParams<double> car(1.0, 2.0);
  const carkin::Pose<double> closed = carkin::fixed_steer_closed_form(
      0.7, 6.283185307179586, carkin::Pose<double>{}, car);
  CHECK(std::abs(traj.endpoint().pose.x - closed.x) <= 1e-8);
  CHECK(std::abs(traj.endpoint().pose.y - closed.y) <= 1e-8);
  CHECK(std::abs(traj.endpoint().pose.heading - closed.heading) <= 1e-8);

  const std::string svg = read_file(svg_path);
  CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("simulate: deterministic output bytes") {
  const std::string scenario = write_file("det.json", R"({
    "params": {"R": 1.0, "l": 2.0},
    "initial": {"alpha": 0, "beta": 0.3, "x": 0, "y": 0, "phi": 0},
    "program": [{"op": "drive", "delta": 1.0}, {"op": "steer", "delta": -0.2}],
    "step": 0.01
  })");
  const RunResult a = run("simulate " + scenario);
  const RunResult b = run("simulate " + scenario);
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("simulate: schema violations exit 2") {
  const std::string bad_json = write_file("bad.json", "{ not json");
  CHECK(run("simulate " + bad_json).exit_code == 2);

  const std::string missing = write_file("missing.json", R"({
    "params": {"R": 1.0},
    "initial": {"alpha": 0, "beta": 0, "x": 0, "y": 0, "phi": 0},
    "program": [],
    "step": 0.001
  })");
  CHECK(run("simulate " + missing).exit_code == 2);
  CHECK(run("simulate /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("simulate: steering-limit breaches exit 3") {
  const std::string scenario = write_file("limit.json", R"({
    "params": {"R": 1.0, "l": 2.0},
    "initial": {"alpha": 0, "beta": 0, "x": 0, "y": 0, "phi": 0},
    "program": [{"op": "steer", "delta": 1.0}],
    "step": 0.001,
    "steering_limit": 0.5
  })");
  CHECK(run("simulate " + scenario).exit_code == 3);
}

namespace {
long parse_cycles(const std::string& text) {
  long n = -1;
  std::sscanf(text.c_str(), "cycles: %ld", &n);
  return n;
}
}  // namespace

TEST_CASE("park: zero displacement runs zero cycles") {
  const RunResult r = run("park --lateral 0 --eps 0.1 --R 1 --l 1");
  CHECK(r.exit_code == 0);
  CHECK(parse_cycles(r.stdout_text) == 0);
}

TEST_CASE("park: the cycle count follows the fourth-power law") {
  const RunResult r = run("park --lateral 2e-4 --eps 0.1 --R 1 --l 1");
  CHECK(r.exit_code == 0);
  CHECK(parse_cycles(r.stdout_text) == 2);
}

TEST_CASE("park: achieved offset lands within tolerance and writes outputs") {
  const std::string csv_path = (work_dir() / "park.csv").string();
  const RunResult r =
      run("park --lateral 1e-3 --eps 0.1 --R 1 --l 1 --out " + csv_path);
  CHECK(r.exit_code == 0);
  CHECK(parse_cycles(r.stdout_text) == 10);
  const carkin::Trajectory<double> traj =
      carkin::trajectory_from_csv(read_file(csv_path));
  const double offset = traj.endpoint().pose.y;
  CHECK(std::abs(offset + 1e-3) / 1e-3 <= 0.05);
}

TEST_CASE("park: bad arguments exit 2, cap overruns exit 4") {
  CHECK(run("park --lateral 1e-3 --eps 0.5 --R 1 --l 1").exit_code == 2);
  CHECK(run("park --lateral 1e-3 --eps -0.1 --R 1 --l 1").exit_code == 2);
  CHECK(run("park --lateral 1.0 --eps 0.1 --R 1 --l 1 --cycle-cap 100").exit_code == 4);
  CHECK(run("park").exit_code == 2);  // missing required --lateral
}

TEST_CASE("closed-form: prints the endpoint of the arc") {
  const RunResult r = run("closed-form --beta0 0 --alpha 1 --R 1 --l 2");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("x:   1\n") != std::string::npos);
  CHECK(r.stdout_text.find("y:   0\n") != std::string::npos);
}

TEST_CASE("verify: passes with defaults, fails under an impossible tolerance") {
  const RunResult pass = run("verify --seed 7");
  CHECK(pass.exit_code == 0);
  CHECK(pass.stdout_text.find("summary:") != std::string::npos);
  CHECK(pass.stdout_text.find("FAIL") == std::string::npos);

  const RunResult fail = run("verify --seed 7 --tol 1e-30");
  CHECK(fail.exit_code == 1);
  CHECK(fail.stdout_text.find("FAIL") != std::string::npos);
}

TEST_CASE("help and usage errors") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("").exit_code == 2);               // a subcommand is required
  CHECK(run("unknown-subcommand").exit_code == 2);
}

TEST_CASE("verify: a fixed seed reproduces the report byte for byte") {
  const RunResult a = run("verify --seed 42");
  const RunResult b = run("verify --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
}
