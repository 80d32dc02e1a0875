// End-to-end checks of the command-line surface: formats, determinism,
// exit codes and the replay loop.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + UVLAB_CLI_PATH + " " +
                    args + " 2>&1";
  std::array<char, 4096> buf;
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/uvlab_cli_") + name;
  std::ofstream out(path);
  out << text;
  return path;
}

const char* kFork =
    R"({"elements": ["x", "y1", "y2"], "leq": [["x", "y1"], ["x", "y2"]]})";
const char* kChain = R"({"elements": ["x", "y"], "leq": [["x", "y"]]})";

}  // namespace

TEST_CASE("gen and dual") {
  CliResult gen = run_cli("gen --kind powerset -k 2");
  CHECK(gen.status == 0);
  CHECK(json::parse(gen.out)["atoms"] == 2);

  std::string ba = write_temp("b2.json", R"({"atoms": 2})");
  CliResult dual = run_cli("dual " + ba);
  CHECK(dual.status == 0);
  json doc = json::parse(dual.out);
  CHECK(doc["elements"].size() == 3);
  CHECK(doc["point_filters"].size() == 3);

  CliResult free_gen = run_cli("gen --kind free -g 2");
  CHECK(free_gen.status == 0);
  CHECK(json::parse(free_gen.out)["atoms"] == 4);

  CliResult rnd = run_cli("gen --kind random-subalgebra -k 3 --seed 5");
  CHECK(rnd.status == 0);
  CliResult rnd2 = run_cli("gen --kind random-subalgebra -k 3 --seed 5");
  CHECK(rnd.out == rnd2.out);  // seeded determinism
}

TEST_CASE("check classifies spaces and maps") {
  std::string fork = write_temp("fork.json", kFork);
  std::string chain = write_temp("chain.json", kChain);

  CliResult uv = run_cli("--format json check uv " + fork);
  CHECK(uv.status == 0);
  CHECK(json::parse(uv.out)["uv_space"] == true);

  CliResult not_uv = run_cli("--format json check uv " + chain);
  CHECK(json::parse(not_uv.out)["uv_space"] == false);
  CHECK(json::parse(not_uv.out)["basis"] == false);

  CliResult spectral = run_cli("--format json check spectral " + chain);
  CHECK(json::parse(spectral.out)["spectral"] == true);

  std::string mapdoc = write_temp(
      "map.json",
      std::string(R"({"dom": "uvlab_cli_fork.json", )") +
          R"("cod": "uvlab_cli_fork.json", )" +
          R"("map": {"x": "x", "y1": "y1", "y2": "y2"}})");
  CliResult map = run_cli("--format json check map " + mapdoc);
  CHECK(map.status == 0);
  CHECK(json::parse(map.out)["uv_embedding"] == true);
}

TEST_CASE("dictionary rows from the CLI") {
  std::string ba = write_temp("b2.json", R"({"atoms": 2})");
  for (const char* row : {"eta", "zeta", "principal", "maximal",
                          "relativization", "meet-join", "atoms",
                          "canonical-extension", "macneille"}) {
    CliResult r = run_cli(std::string("dict ") + row + " " + ba);
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
  std::string b1 = write_temp("b1.json", R"({"atoms": 1})");
  CliResult sp = run_cli("dict sum-product " + ba + " " + b1);
  CHECK(sp.status == 0);
}

TEST_CASE("sum, partition, embed, split") {
  std::string fork = write_temp("fork.json", kFork);
  std::string point =
      write_temp("point.json", R"({"elements": ["z"], "leq": []})");

  CliResult sum = run_cli("sum " + fork + " " + point);
  CHECK(sum.status == 0);
  CHECK(json::parse(sum.out)["elements"].size() == 7);

  CliResult part = run_cli("partition " + fork + " -n 1");
  CHECK(part.status == 0);
  CHECK(json::parse(part.out)["blocks"].size() == 2);

  CliResult embed = run_cli("embed " + fork + " -n 1");
  CHECK(embed.status == 0);
  CHECK(json::parse(embed.out)["embedding_atoms"] == 1);

  CliResult split = run_cli("complete-split " + fork);
  CHECK(split.status == 0);
  CHECK(json::parse(split.out)["trivial"] == true);
}

TEST_CASE("DOT export is deterministic") {
  std::string fork = write_temp("fork.json", kFork);
  CliResult a = run_cli("export-dot " + fork);
  CliResult b = run_cli("export-dot " + fork);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("digraph") != std::string::npos);

  std::string ba = write_temp("b2.json", R"({"atoms": 2})");
  CliResult from_ba = run_cli("export-dot " + ba);
  CHECK(from_ba.status == 0);
}

TEST_CASE("verify: exit codes and byte-identical output") {
  CliResult v1 = run_cli("--format json verify --max-atoms 1 --max-poset 3");
  CHECK(v1.status == 0);
  CliResult v2 = run_cli("--format json verify --max-atoms 1 --max-poset 3");
  CHECK(v1.out == v2.out);
  CliResult vjobs =
      run_cli("--jobs 2 --format json verify --max-atoms 1 --max-poset 3");
  CHECK(v1.out == vjobs.out);

  CliResult too_big = run_cli("verify --max-atoms 9");
  CHECK(too_big.status == 3);

  CliResult bad = run_cli("dual /tmp/uvlab_cli_missing_file.json");
  CHECK(bad.status == 2);

  std::string junk = write_temp("junk.json", "{\"elements\": [1,2]}");
  CliResult schema = run_cli("dual " + junk);
  CHECK(schema.status == 2);
}

TEST_CASE("fault injection and replay through the CLI") {
  std::string payload = write_temp(
      "payload.json",
      R"({"theorem": "representation", "instance": {"kind": "ba", "atoms": 2}})");

  CliResult broken = run_cli("replay " + payload, "UVLAB_FAULT=neg");
  CHECK(broken.status == 1);
  CHECK(broken.out.find("FAIL") != std::string::npos);

  CliResult fixed = run_cli("replay " + payload);
  CHECK(fixed.status == 0);
  CHECK(fixed.out.find("pass") != std::string::npos);
}

TEST_CASE("kernel listing and override") {
  CliResult k = run_cli("kernels");
  CHECK(k.status == 0);
  CHECK(k.out.find("scalar: available") != std::string::npos);
  CliResult forced = run_cli("--kernel scalar kernels");
  CHECK(forced.out.find("active: scalar") != std::string::npos);

  // both kernels agree through the whole verify path
  CliResult vs =
      run_cli("--kernel scalar --format json verify --max-atoms 1 --max-poset 3");
  CliResult va = run_cli("--format json verify --max-atoms 1 --max-poset 3");
  CHECK(vs.status == 0);
  CHECK(vs.out == va.out);
}
