/* Copyright (C) 2026 gaussval developers
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GAUSSVAL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gaussval_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const fs::path p = path / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval prints value and exactness") {
  TempDir d;
  const auto f = d.file("pi3.json", R"({"entries":[[3,"0"]],"tail":"finite"})");
  const Run r = run("eval --profile " + f + " --s 1/2");
  CHECK(r.code == 0);
  CHECK(r.out == "3/2 exact\n");
  const auto t = d.file("t.json", R"({"entries":[[0,"1"],[1,"1/2"]],"tail":{"truncated":1}})");
  CHECK(run("eval --profile " + t + " --s 1/8").out == "5/8 upper-bound\n");
}

TEST_CASE("malformed input exits 1") {
  TempDir d;
  const auto bad = d.file("bad.json", "{not json");
  CHECK(run("eval --profile " + bad + " --s 1/2").code == 1);
  const auto ok = d.file("ok.json", R"({"entries":[[3,"0"]],"tail":"finite"})");
  CHECK(run("eval --profile " + ok + " --s 1/0").code == 1);
  CHECK(run("eval --profile " + ok).code == 1);
  CHECK(run("eval --profile " + d.file("missing.json") + " --s 1").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("build-fa --a 1/2 --n 10").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("polygon, transform and round trip") {
  TempDir d;
  const auto f = d.file("f.json", R"({"entries":[[0,"3"],[1,"1"],[2,"2"],[3,"0"]],"tail":"finite"})");
  const auto p = d.file("p.json");
  REQUIRE(run("polygon --profile " + f + " --out " + p).code == 0);
  CHECK(slurp(p).find(R"("tail": "constant")") != std::string::npos);
  CHECK(run("transform --polygon " + p + " --t 1/4").out == "3/4 exact\n");
  const Run full = run("transform --polygon " + p + " --full");
  CHECK(full.code == 0);
  CHECK(full.out.find("\"breakpoints\"") != std::string::npos);
  const Run rt = run("transform --polygon " + p + " --roundtrip");
  CHECK(rt.code == 0);
  CHECK(rt.out == "roundtrip ok\n");
  CHECK(run("transform --polygon " + p).code == 1);
  CHECK(run("transform --polygon " + p + " --t 1 --full").code == 1);
}

TEST_CASE("build-fa, verify and classify") {
  TempDir d;
  const auto rep = d.file("f2.json");
  const Run b = run("build-fa --a 2/1 --n 50 --out " + rep);
  REQUIRE(b.code == 0);
  CHECK(b.out.find("certified_horizon=") != std::string::npos);
  const Run v = run("verify --suite fa --seed 1 --fa-report " + rep);
  CHECK(v.code == 0);
  CHECK(v.out.find("0 failed") != std::string::npos);

  const Run a = run("classify --fa-report " + rep + " --lambda 3/4 --a 2 --horizon 20");
  CHECK(a.code == 0);
  CHECK(a.out.find("\"provenance\": \"Analytic\"") != std::string::npos);
  CHECK(a.out.find("DivergenceWitnessed") != std::string::npos);
  const Run e = run("classify --fa-report " + rep + " --lambda 3/4 --horizon 20");
  CHECK(e.code == 0);
  CHECK(e.out.find("\"provenance\": \"Empirical\"") != std::string::npos);
  const auto out = d.file("cls.json");
  const Run few = run("classify --fa-report " + rep + " --lambda 3/4 --horizon 3 --out " + out);
  CHECK(few.code == 3);
  CHECK(few.out == "Inconclusive\n");
}

TEST_CASE("build-fa honours the precision environment variable") {
  TempDir d;
  CHECK(run("build-fa --a 2 --n 50 --precision 24").code == 1);
  const std::string env = "GAUSSVAL_PRECISION=24 ";
  const std::string cmd = env + GAUSSVAL_CLI + " build-fa --a 2 --n 50 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 1);
  const std::string ok = "GAUSSVAL_PRECISION=400 " + std::string(GAUSSVAL_CLI) + " build-fa --a 2 --n 50 --out " +
                         d.file("r.json") + " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(ok.c_str())) == 0);
  CHECK(slurp(d.file("r.json")).find("\"precision\": 400") != std::string::npos);
}

TEST_CASE("build-fa output is byte-identical across runs") {
  const Run a = run("build-fa --a 3/2 --n 60 --precision 300");
  const Run b = run("build-fa --a 3/2 --n 60 --precision 300");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("plot writes svg and csv") {
  TempDir d;
  const auto p = d.file("p.json", R"({"nodes":[[0,"3"],[1,"1"],[3,"0"]],"tail":"constant"})");
  const auto svg = d.file("out.svg");
  REQUIRE(run("plot --polygon " + p + " --out " + svg).code == 0);
  const std::string s = slurp(svg);
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("polyline") != std::string::npos);
  const auto csv = d.file("out.csv");
  REQUIRE(run("plot --polygon " + p + " --out " + csv + " --format csv").code == 0);
  CHECK(slurp(csv).find("x,y\n0,3/1") != std::string::npos);
}

TEST_CASE("verify reports failures through the exit code only when checks fail") {
  const Run r = run("verify --suite hull --seed 9");
  CHECK(r.code == 0);
  CHECK(r.out.find("hull: ") == 0);
  CHECK(run("verify --suite nope --seed 1").code == 1);
}
