// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0
//
// Golden tests for the command-line front end, run in-process against
// string streams.  Fixture files live under tests/data.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pkn/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = pkn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(PKN_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) result.push_back(line);
  return result;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("monoid: element counts and JSON payload") {
  CHECK(run({"monoid", "upl"}).out == "elements: 40\n");
  CHECK(run({"monoid", "upl"}).code == 0);
  CHECK(run({"monoid", "st"}).out == "elements: 8\n");
  CHECK(run({"monoid", "ti"}).out == "elements: 24\n");

  const Outcome j = run({"monoid", "upl", "--json"});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["preset"] == "upl");
  CHECK(parsed["elements"] == 40);
}

TEST_CASE("monoid: the recorded relators all hold") {
  const Outcome upl = run({"monoid", "upl", "--check-presentation"});
  CHECK(upl.code == 0);
  CHECK(contains(upl.out, "P^2 = L^2 = e: holds"));
  CHECK(contains(upl.out, "U^2PU^2 = PU^2PU^2P: holds"));
  CHECK(!contains(upl.out, "FAILS"));

  const Outcome st = run({"monoid", "st", "--check-presentation"});
  CHECK(st.code == 0);
  CHECK(contains(st.out, "TS = ST: holds"));
  CHECK(contains(st.out, "S^3 = ST: holds"));
  CHECK(!contains(st.out, "FAILS"));
}

TEST_CASE("monoid: automorphism counts and structure tag") {
  const Outcome upl = run({"monoid", "upl", "--automorphisms"});
  REQUIRE(upl.code == 0);
  CHECK(lines(upl.out).at(1) == "automorphisms: 12 (D6 x Z2)");
  CHECK(contains(upl.out, "  U -> U, L -> L, P -> P"));

  CHECK(contains(run({"monoid", "ti", "--automorphisms"}).out,
                 "automorphisms: 48"));
  CHECK(contains(run({"monoid", "s", "--automorphisms"}).out,
                 "automorphisms: 1"));

  const auto j =
      nlohmann::json::parse(run({"monoid", "upl", "--automorphisms",
                                 "--json"}).out);
  CHECK(j["automorphisms"]["count"] == 12);
  CHECK(j["automorphisms"]["structure"] == "D6 x Z2");
  CHECK(j["automorphisms"]["images"].size() == 12);
}

TEST_CASE("monoid: unit groups") {
  const Outcome upl = run({"monoid", "upl", "--units"});
  CHECK(upl.code == 0);
  CHECK(contains(upl.out, "units: 6\n"));
  CHECK(contains(upl.out, "  e: e L P LP PL LPL\n"));
  CHECK(contains(run({"monoid", "s", "--units"}).out, "units: 1\n"));
  CHECK(contains(run({"monoid", "ti", "--units"}).out, "units: 24\n"));
}

TEST_CASE("monoid: DOT output and rejected presets") {
  const Outcome dot = run({"monoid", "st", "--dot"});
  CHECK(dot.code == 0);
  CHECK(contains(dot.out, "digraph"));

  CHECK(run({"monoid", "trivial"}).code == 2);
  CHECK(run({"monoid", "nope"}).code == 2);
}

TEST_CASE("graph: vertex and edge counts") {
  const Outcome cd = run({"graph", "cube-dance"});
  CHECK(cd.code == 0);
  CHECK(cd.out == "vertices: 28\nedges: 48\n");
  CHECK(run({"graph", "weitzmann"}).out == "vertices: 28\nedges: 72\n");
}

TEST_CASE("graph: shortest paths") {
  const Outcome far = run({"graph", "cube-dance", "--distance", "AM", "FsM"});
  CHECK(far.code == 0);
  CHECK(far.out == "3: AM Faug Bbm F#M\n");

  const Outcome self = run({"graph", "cube-dance", "--distance", "CM", "CM"});
  CHECK(self.code == 0);
  CHECK(self.out == "0: CM\n");

  const Outcome cut = run({"graph", "weitzmann", "--distance", "CM", "C#M"});
  CHECK(cut.code == 1);
  CHECK(cut.out == "unreachable\n");

  const auto j = nlohmann::json::parse(
      run({"graph", "cube-dance", "--distance", "AM", "F#M", "--json"}).out);
  CHECK(j["distance"]["distance"] == 3);
  CHECK(j["distance"]["path"] ==
        nlohmann::json({"AM", "Faug", "Bbm", "F#M"}));
}

TEST_CASE("graph: DOT output") {
  const Outcome dot = run({"graph", "cube-dance", "--dot"});
  CHECK(dot.code == 0);
  CHECK(contains(dot.out, "graph"));
  CHECK(contains(dot.out, "Faug"));
}

TEST_CASE("relate: fifths in the s context") {
  const Outcome r = run({"relate", "CM", "GM", "--context", "s"});
  CHECK(r.code == 0);
  CHECK(r.out == "S^3, S^5\n");
  CHECK(run({"relate", "CM", "CM", "--context", "s"}).out ==
        "e, S^2, S^4, S^6\n");
}

TEST_CASE("relate: loops include the identity") {
  const Outcome r = run({"relate", "CM", "CM", "--context", "upl"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0).rfind("e, U^2, ULU", 0) == 0);
}

TEST_CASE("relate: empty answers exit 1") {
  const Outcome r = run({"relate", "CM", "C#M", "--context", "t"});
  CHECK(r.code == 1);
  CHECK(r.out == "(none)\n");
}

TEST_CASE("relate: pitch-class carriers and alternate spellings") {
  CHECK(run({"relate", "0", "7", "--context", "ti"}).out == "T^5I, T^7\n");
  const auto j = nlohmann::json::parse(
      run({"relate", "FsM", "GbM", "--context", "upl", "--json"}).out);
  CHECK(j["from"] == "F#M");
  CHECK(j["to"] == "F#M");
}

TEST_CASE("analyze: the twelve-chord cycle is fully labeled") {
  const Outcome r = run({"analyze", data("muse_progression.json")});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 12);  // 11 pairs + verdict
  CHECK(ls.back() == "pass");
  const std::vector<std::string> first_words = {"U", "U", "P", "U", "U", "P",
                                                "U", "U", "P", "U", "U"};
  for (size_t k = 0; k < first_words.size(); ++k) {
    const std::string& line = ls.at(k);
    const auto colon = line.find(": ");
    REQUIRE(colon != std::string::npos);
    std::string head = line.substr(colon + 2);
    head = head.substr(0, head.find(','));
    CHECK(head == first_words[k]);
  }
  CHECK(ls.at(0) ==
        "DM -> Daug: U, UL, ULU^2, ULU^2L, LU^2LU, LU^2LUL, LULULU, LULULUL");
}

TEST_CASE("analyze: an unlabelable pair fails with its name") {
  const Outcome r = run({"analyze", data("whole_tone_fail.json")});
  CHECK(r.code == 1);
  const auto ls = lines(r.out);
  CHECK(ls.at(0) == "CM -> C#M: (none)");
  CHECK(ls.back() == "fail: no label for CM -> C#M");
  const auto j = nlohmann::json::parse(
      run({"analyze", data("whole_tone_fail.json"), "--json"}).out);
  CHECK(j["pass"] == false);
  CHECK(j["first_unlabeled"] == "CM -> C#M");
}

TEST_CASE("pknet verify: chained triads and a seventh-chord net") {
  const Outcome muse = run({"pknet", "verify", data("muse4.json")});
  CHECK(muse.code == 0);
  CHECK(lines(muse.out).back() == "pass");
  CHECK(contains(muse.out, "ok naturality on X2->X3 via P"));
  CHECK(contains(muse.out, "ok naturality on X0->X3 via U^2L"));

  const Outcome seventh = run({"pknet", "verify", data("seventh_net.json")});
  CHECK(seventh.code == 0);
  CHECK(lines(seventh.out).back() == "pass");
  CHECK(contains(seventh.out, "ok naturality on X->Z via T^2"));
}

TEST_CASE("pknet search: every labeling of the three-chord chain") {
  const Outcome r = run({"pknet", "search", data("muse3.json")});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.at(0) == "covers: X0->X1, X1->X2");
  CHECK(ls.at(1) == "labelings: 64");
  CHECK(ls.at(2) == "  U, U");
}

TEST_CASE("pknet search: the relational/functional gap") {
  const Outcome rel = run({"pknet", "search", data("e7_net.json")});
  CHECK(rel.code == 0);
  CHECK(rel.out == "covers: X->Y\nlabelings: 1\n  IT^4I\n");

  const Outcome fun =
      run({"pknet", "search", data("e7_net.json"), "--functional"});
  CHECK(fun.code == 1);
  CHECK(fun.out == "no labeling found\n");
}

TEST_CASE("pknet homography: transposition carries the net") {
  const Outcome r = run(
      {"pknet", "homography", data("muse4.json"), data("t5_homography.json")});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "phi': X0 = GM; X1 = Baug; X2 = Cm; X3 = CM\nverify: pass\n");

  const auto j = nlohmann::json::parse(
      run({"pknet", "homography", data("muse4.json"),
           data("t5_homography.json"), "--json"}).out);
  CHECK(j["verify"]["pass"] == true);
  CHECK(j["net"]["phi"]["X0"] == nlohmann::json::parse(R"([["x0","GM"]])"));
  CHECK(j["net"]["labeling"]["X0->X1"] == "U");
}

TEST_CASE("pknet homography: a missing file argument is a usage error") {
  const Outcome r = run({"pknet", "homography", data("muse4.json")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "homography"));
}

TEST_CASE("groth: triple-category summaries") {
  const Outcome upl = run({"groth", "--context", "upl"});
  CHECK(upl.code == 0);
  CHECK(upl.out ==
        "objects: 28\nmorphisms: 4896\nfaithful: true\nroundtrip: true\n");
  const Outcome triv = run({"groth", "--context", "trivial"});
  CHECK(triv.code == 0);
  CHECK(triv.out ==
        "objects: 1\nmorphisms: 1\nfaithful: true\nroundtrip: true\n");
  const auto j =
      nlohmann::json::parse(run({"groth", "--context", "ti", "--json"}).out);
  CHECK(j["objects"] == 12);
  CHECK(j["morphisms"] == 288);
  CHECK(j["faithful"] == true);
}

TEST_CASE("errors: malformed and mismatched input files") {
  const Outcome bad = run({"analyze", data("malformed.json")});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "parse error at line"));

  const Outcome cover = run({"pknet", "verify", data("missing_cover.json")});
  CHECK(cover.code == 2);
  CHECK(contains(cover.err, "at /form/arrows"));
  CHECK(contains(cover.err, "missing relation for cover 'X0->X1'"));

  const Outcome gone = run({"analyze", data("does_not_exist.json")});
  CHECK(gone.code == 2);
  CHECK(contains(gone.err, "cannot read"));
}

TEST_CASE("errors: unknown names exit 2") {
  CHECK(run({"relate", "CM", "GM", "--context", "nope"}).code == 2);
  CHECK(run({"relate", "Hm", "GM", "--context", "upl"}).code == 2);
  CHECK(run({"relate", "0", "7", "--context", "t"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("help exits 0 and prints usage") {
  const Outcome h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(contains(h.out, "Usage"));
  CHECK(contains(h.out, "monoid"));
}

TEST_CASE("output is byte-deterministic across runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"monoid", "upl", "--check-presentation", "--automorphisms", "--units"},
      {"graph", "cube-dance", "--dot"},
      {"relate", "CM", "CM", "--context", "upl", "--json"},
      {"analyze", data("muse_progression.json"), "--json"},
      {"pknet", "search", data("muse3.json")},
      {"groth", "--context", "st", "--json"},
  };
  for (const auto& cmd : commands) {
    const Outcome a = run(cmd);
    const Outcome b = run(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--output writes the payload to a file") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "pkn_cli_payload.txt")
          .string();
  const Outcome direct = run({"monoid", "upl"});
  const Outcome filed = run({"monoid", "upl", "--output", path});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream got;
  got << in.rdbuf();
  CHECK(got.str() == direct.out);
  std::remove(path.c_str());
}

}  // TEST_SUITE
