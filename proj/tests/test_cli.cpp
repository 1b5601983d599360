// End-to-end checks of the twisted-h1 executable: exit codes, output
// determinism and JSON round trips.
#define DOCTEST_CONFIG_IMPLEMENT
#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "doctest.h"

namespace {

std::string cli_path;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  const Run r = run(args + " --format json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("h1 json output") {
  const auto j = run_json("h1 --type A --rank 3 --isogeny sc --tau-order 2 --m 2");
  CHECK(j["cardinality"] == 2);
  CHECK(j["method"] == "orbit");
  CHECK(j["cross_check"]["cardinality"] == 2);
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][1]["lambda_ambient"] == nlohmann::json::array({0, 1, 0}));
  CHECK(j["classes"][1]["coweight_ambient"] == nlohmann::json::array({"0", "1/2", "0"}));

  const auto verified = run_json("h1 --type A3 --isogeny sc --tau-order 2 --m 4 --verify");
  CHECK(verified["cardinality"] == 4);

  CHECK(run_json("h1 --type A --rank 1 --m 5")["cardinality"] == 3);
  CHECK(run_json("h1 --type A --rank 4 --tau-order 2 --m 2")["cardinality"] == 1);
}

TEST_CASE("other subcommands produce parseable json") {
  CHECK(run_json("h1-torus --type D --rank 4 --tau-order 3 --m 3 --verify")["invariant_factors"] ==
        nlohmann::json::array({3}));
  CHECK(run_json("alcove --type A3 --tau-order 2 --m 4").is_object());
  CHECK(run_json("kac --type E6 --tau-order 2 --m 2 --classes").is_object());
  CHECK(run_json("classify-autos --type A1 --m 2").is_object());
  CHECK(run_json("reduce --type A3 --tau-order 2 --point 3/2,1/3").is_object());
  CHECK(run_json("parahoric --type A3 --tau-order 2 --theta 0,1/2").is_object());
  const auto c = run_json("covering-exists --genus 0 --indices 7");
  CHECK(c["exists"] == false);
  CHECK(c["reason"] == "g=0, s=1");
  CHECK(run_json("covering-exists --genus 0 --indices 3,3")["exists"] == true);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"h1 --type E6 --tau-order 2 --m 4 --format json",
                           "kac --type D4 --tau-order 3 --m 6 --classes --format csv",
                           "alcove --type B3 --m 5 --format text"}) {
    CAPTURE(args);
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("exit codes") {
  CHECK(run("h1 --type Q --rank 3 --m 3").code == 2);
  CHECK(run("h1 --type A --rank 3 --m").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("reduce --type A3 --tau-order 2 --point 1/2").code == 2);
  CHECK(run("h1 --type A --rank 3 --tau-order 2 --m 3").code == 3);
  CHECK(run("h1 --type B --rank 3 --tau-order 2 --m 2").code == 3);
  CHECK(run("h1 --type A --rank 3 --isogeny adjoint --tau-order 2 --m 2 --method alcove").code == 3);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path to twisted-h1> [doctest options]\n";
    return 2;
  }
  cli_path = argv[1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv + 1);
  return context.run();
}
