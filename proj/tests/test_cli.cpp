// Copyright 2026 The revseq Authors
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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "revseq/cli.hpp"
#include "revseq/corpus.hpp"
#include "revseq/netlist.hpp"

using namespace revseq;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("revseq-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
};

struct CommandResult {
  int code;
  std::string out;
  std::string err;
};

CommandResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cost on a corpus design prints the weighted value") {
  const CommandResult r = run({"cost", "corpus:t-d3", "--model", "phase-cnot"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("weighted 5") != std::string::npos);
  CHECK(r.out.find("garbage 2") != std::string::npos);

  const CommandResult nct = run({"cost", "corpus:sr-d1", "--model", "nct"});
  CHECK(nct.out.find("gates 9") != std::string::npos);
}

TEST_CASE("verify passes the corpus and reports the case count") {
  const CommandResult r = run({"verify", "corpus:sr-d1", "--family", "sr"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("PASS 16/16") != std::string::npos);

  const CommandResult implied = run({"verify", "corpus:msjk-d2"});
  CHECK(implied.code == cli::exit_ok);
}

TEST_CASE("verify fails with exit 3 on a behavioural mismatch") {
  TempDir dir;
  // A "T flip flop" that toggles on the clock alone.
  const std::string path = dir.file("bad.rsq",
                                    ".version revseq-1\n"
                                    ".numlines 3\n"
                                    ".lines c t q\n"
                                    ".inputs c t\n"
                                    ".state q\n"
                                    ".outputs q\n"
                                    ".begin\n"
                                    "t2 c q\n"
                                    ".end\n");
  const CommandResult r = run({"verify", path, "--family", "t"});
  CHECK(r.code == cli::exit_verification);
  CHECK(r.err.find("counterexample") != std::string::npos);
}

TEST_CASE("sim prints one line per trace step") {
  const CommandResult r = run({"sim", "corpus:t-d3", "--trace", "c=1,t=1;c=1,t=1;c=0,t=1"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out ==
        "step 0: q=1\n"
        "step 1: q=0\n"
        "step 2: q=0\n");
}

TEST_CASE("parse errors exit with code 2 and a line number") {
  TempDir dir;
  const std::string path = dir.file("broken.rsq",
                                    ".version revseq-1\n"
                                    ".lines a b\n"
                                    ".inputs a b\n"
                                    ".begin\n"
                                    "t3 a a b\n"
                                    ".end\n");
  const CommandResult r = run({"cost", path, "--model", "nct"});
  CHECK(r.code == cli::exit_parse);
  CHECK(r.err.find("line 5") != std::string::npos);
}

TEST_CASE("usage problems exit with code 1") {
  CHECK(run({"cost"}).code == cli::exit_usage);
  CHECK(run({"nonsense"}).code == cli::exit_usage);
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"verify", "corpus:sr-d1", "--family", "zz"}).code == cli::exit_parse);
}

TEST_CASE("synth writes a netlist that the identity table leaves empty") {
  TempDir dir;
  const std::string table = dir.file("identity3.tt",
                                     "000 -> 000\n100 -> 100\n010 -> 010\n110 -> 110\n"
                                     "001 -> 001\n101 -> 101\n011 -> 011\n111 -> 111\n");
  const CommandResult r = run({"synth", "--table", table, "--method", "bi"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find(".begin\n.end\n") != std::string::npos);
}

TEST_CASE("synth round-trips a nontrivial table through a file") {
  TempDir dir;
  const std::string table = dir.file("swap2.tt", "00 -> 00\n10 -> 01\n01 -> 10\n11 -> 11\n");
  const std::string out_path = (dir.path / "out.rsq").string();
  const CommandResult r = run({"synth", "--table", table, "--method", "uni", "-o", out_path});
  CHECK(r.code == cli::exit_ok);

  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const SequentialCircuit seq = parse_netlist(buf.str());
  const Permutation perm = permutation_of(seq.body);
  CHECK(perm.table == std::vector<std::uint32_t>{0, 2, 1, 3});
}

TEST_CASE("synth rejects a non-bijective table") {
  TempDir dir;
  const std::string table = dir.file("rice.tt",
                                     "0100 -> 0100\n"
                                     "0101 -> 0100\n");
  const CommandResult r = run({"synth", "--table", table, "--method", "bi"});
  CHECK(r.code == cli::exit_parse);
  CHECK(r.err.find("not bijective") != std::string::npos);
}

TEST_CASE("opt rewrites a netlist and keeps the roles") {
  TempDir dir;
  const std::string path = dir.file("redundant.rsq",
                                    ".version revseq-1\n"
                                    ".numlines 2\n"
                                    ".lines a b\n"
                                    ".inputs a b\n"
                                    ".outputs a b\n"
                                    ".begin\n"
                                    "t2 a b\n"
                                    "t2 a b\n"
                                    "t1 a\n"
                                    ".end\n");
  const CommandResult r = run({"opt", path, "--passes", "deletion"});
  CHECK(r.code == cli::exit_ok);
  const SequentialCircuit seq = parse_netlist(r.out);
  CHECK(seq.body.size() == 1);
  CHECK(seq.output_lines.size() == 2);
}

TEST_CASE("opt accepts extra template files") {
  TempDir dir;
  const std::string circuit = dir.file("c.rsq",
                                       ".version revseq-1\n"
                                       ".numlines 2\n"
                                       ".lines a b\n"
                                       ".inputs a b\n"
                                       ".begin\n"
                                       "t1 a\n"
                                       "t2 a b\n"
                                       "t1 a\n"
                                       "t2 a b\n"
                                       "t1 b\n"
                                       ".end\n");
  // [X(a), CNOT(a,b)]^2 equals X(b); the template encodes the identity.
  const std::string templates = dir.file("extra.tpl",
                                         ".template 2\n"
                                         "t1 x0\n"
                                         "t2 x0 x1\n"
                                         "t1 x0\n"
                                         "t2 x0 x1\n"
                                         "t1 x1\n"
                                         ".end\n");
  const CommandResult r =
      run({"opt", circuit, "--templates", templates, "--passes", "template"});
  CHECK(r.code == cli::exit_ok);
  const SequentialCircuit seq = parse_netlist(r.out);
  CHECK(seq.body.size() <= 1);
}

TEST_CASE("sim rejects traces with unassigned or unknown inputs") {
  const CommandResult missing = run({"sim", "corpus:t-d3", "--trace", "c=1"});
  CHECK(missing.code == cli::exit_parse);
  CHECK(missing.err.find("missing input binding 't'") != std::string::npos);

  const CommandResult unknown = run({"sim", "corpus:t-d3", "--trace", "c=1,t=1,zz=0"});
  CHECK(unknown.code == cli::exit_parse);

  const CommandResult malformed = run({"sim", "corpus:t-d3", "--trace", "c=2,t=1"});
  CHECK(malformed.code == cli::exit_parse);
}

TEST_CASE("verify requires a family for plain netlist files") {
  TempDir dir;
  const std::string path = dir.file("t.rsq",
                                    ".version revseq-1\n"
                                    ".numlines 3\n"
                                    ".lines c t q\n"
                                    ".inputs c t\n"
                                    ".state q\n"
                                    ".outputs q\n"
                                    ".begin\n"
                                    "t3 c t q\n"
                                    ".end\n");
  CHECK(run({"verify", path}).code != cli::exit_ok);
  CHECK(run({"verify", path, "--family", "t"}).code == cli::exit_ok);
}

TEST_CASE("opt rejects unknown pass names and corpus ids") {
  CHECK(run({"opt", "corpus:t-d3", "--passes", "magic"}).code == cli::exit_parse);
  CHECK(run({"cost", "corpus:zz-d9", "--model", "nct"}).code == cli::exit_parse);
}

TEST_CASE("the comparison pipeline runs end to end") {
  // Expand foreign gates, optimize the whole circuit, then count: the
  // redundant Fredkin pair must disappear and the survivor costs as
  // three NCT gates.
  TempDir dir;
  const std::string path = dir.file("pair.rsq",
                                    ".version revseq-1\n"
                                    ".numlines 4\n"
                                    ".lines c a b g\n"
                                    ".inputs c a b\n"
                                    ".constants g=0\n"
                                    ".outputs a b\n"
                                    ".begin\n"
                                    "f3 c a b\n"
                                    "f3 c a b\n"
                                    "f3 c a g\n"
                                    ".end\n");
  const std::string out_path = (dir.path / "opt.rsq").string();
  const CommandResult opt = run({"opt", path, "-o", out_path});
  REQUIRE(opt.code == cli::exit_ok);

  const CommandResult cost = run({"cost", out_path, "--model", "phase-cnot"});
  CHECK(cost.code == cli::exit_ok);
  CHECK(cost.out.find("gates 3 (not 0, cnot 2, toffoli 1)") != std::string::npos);
  CHECK(cost.out.find("weighted 7") != std::string::npos);
}

TEST_CASE("report emits both formats with paper flags") {
  const CommandResult md = run({"report"});
  CHECK(md.code == cli::exit_ok);
  CHECK(md.out.find("| sr-d1 |") != std::string::npos);
  CHECK(md.out.find("PAPER-TABLES-INCONSISTENT") != std::string::npos);

  const CommandResult csv = run({"report", "--format", "csv"});
  CHECK(csv.code == cli::exit_ok);
  CHECK(csv.out.find("msd-d2,") != std::string::npos);
  CHECK(csv.out.find("design,provenance") == 0);
}
