#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mig/corpus.hpp"
#include "mig/util.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MIG_CLI_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WEXITSTATUS(status);
  return r;
}

std::string write_variant(const std::string& tag, const nlohmann::json& doc) {
  std::string path = "/tmp/mig_cli_" + tag + "_" + std::to_string(getpid()) + ".json";
  std::ofstream(path) << doc.dump(2) << "\n";
  return path;
}

}  // namespace

TEST_CASE("exit codes follow the verdict: 0 holds, 1 fails, 2 unusable input") {
  CHECK(run_cli("chartab S4").code == 0);
  CHECK(run_cli("mi-group S4").code == 0);
  CHECK(run_cli("mi-group A5").code == 1);
  CHECK(run_cli("m-group S4").out.find("m-group: yes") != std::string::npos);
  CHECK(run_cli("m-group S4").code == 0);
  CHECK(run_cli("m-group A5").code == 1);

  // lattice-based monomiality is refused, not guessed, above the cap
  CHECK(run_cli("m-group M11").code == 2);
  CHECK(run_cli("chartab Nope").code == 2);
  CHECK(run_cli("--cap 100000 chartab S4").code == 2);
  CHECK(run_cli("--corpus /nonexistent.json chartab S4").code == 2);
  CHECK(run_cli("mi-check A5 --degree 4 --index 4").code == 2);
}

TEST_CASE("single-character checks select by degree or position") {
  RunResult good = run_cli("mi-check \"L2(7)\" --degree 7");
  CHECK(good.code == 0);
  CHECK(good.out.find("mi  <-") != std::string::npos);
  RunResult bad = run_cli("mi-check \"L2(7)\" --degree 6");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("not mi") != std::string::npos);
  CHECK(run_cli("mi-check \"L2(7)\" --index 5").code == 0);
  CHECK(run_cli("mi-check \"L2(7)\" --degree 999").code == 2);
}

TEST_CASE("the relative test excludes characters trivial on the normal subgroup") {
  RunResult r = run_cli("mi-group S4 --relative 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("excluded") != std::string::npos);
  CHECK(run_cli("--json mi-group S4 --relative 4").out.find("\"relative_to\": \"4\"") !=
        std::string::npos);
  CHECK(run_cli("mi-group \"SL(2,3)\" --relative 8").code == 1);
  CHECK(run_cli("mi-group S4 --relative 5").code == 2);
}

TEST_CASE("machine output carries no timings and no thread dependence") {
  RunResult a = run_cli("--json --jobs 1 mi-group A5");
  RunResult b = run_cli("--json --jobs 4 mi-group A5");
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  CHECK(a.out.find("ms") == std::string::npos);
  RunResult v = run_cli("--json --jobs 4 verify-paper");
  CHECK(v.code == 0);
  CHECK(v.out.find("\"all_pass\": true") != std::string::npos);
  CHECK(v.out.find("ms") == std::string::npos);
}

TEST_CASE("corpus commands list and re-verify the shipped data") {
  RunResult list = run_cli("corpus list");
  CHECK(list.code == 0);
  CHECK(list.out.find("M12") != std::string::npos);
  RunResult check = run_cli("corpus check");
  CHECK(check.code == 0);
  CHECK(check.out.find("corpus ok") != std::string::npos);
}

TEST_CASE("degraded corpora: missing groups skip checks, corruption stops the run") {
  nlohmann::json doc = nlohmann::json::parse(mig::read_file(mig::default_corpus_path()));

  nlohmann::json trimmed = doc;
  auto& groups = trimmed["groups"];
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    if ((*it)["name"] == "M12") {
      groups.erase(it);
      break;
    }
  }
  std::string trimmed_path = write_variant("trimmed", trimmed);
  RunResult r = run_cli("--jobs 4 --corpus " + trimmed_path + " verify-paper");
  CHECK(r.code == 1);
  CHECK(r.out.find("skipped: missing group") != std::string::npos);
  CHECK(r.out.find("[pass] primitive-prime-divisors") != std::string::npos);

  nlohmann::json corrupt = doc;
  for (auto& g : corrupt["groups"])
    if (g["name"] == "M11") g["expected_order"] = 7921;
  std::string corrupt_path = write_variant("corrupt", corrupt);
  RunResult c = run_cli("--jobs 4 --corpus " + corrupt_path + " verify-paper");
  CHECK(c.code == 2);
  CHECK(c.out.find("[pass") == std::string::npos);
  CHECK(c.out.find("order") != std::string::npos);

  std::remove(trimmed_path.c_str());
  std::remove(corrupt_path.c_str());
}
