#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>

#include "quasimap/commands.hpp"

using namespace quasimap;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QUASIMAP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string value_of(const CommandResult& r, const std::string& label) {
  for (const auto& [l, v] : r.values) {
    if (l == label) return v;
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("commands in process") {
  const auto fan = cmd_fan(1);
  CHECK(value_of(fan, "rays") == "10");
  CHECK(value_of(fan, "maximal_cones") == "25");
  CHECK(value_of(cmd_fan(2), "rays") == "17");
  CHECK(value_of(cmd_chow(1), "generators") == "2");
  CHECK(value_of(cmd_chow(2), "generators") == "3");
  CHECK(value_of(cmd_intersect(1, 1, 0), "w") == "1488");
  CHECK(value_of(cmd_intersect(1, 2, -1), "w") == "240");
  CHECK(value_of(cmd_intersect(1, 0, 0), "w") == "0");
  const auto mirror = cmd_mirror(2);
  CHECK(mirror.values.size() == 2);
  CHECK(value_of(mirror, "w_2") == "473652");
  CHECK(cmd_mirror(1).values.size() == 1);
  const auto jinv = cmd_jinv(2);
  CHECK(value_of(jinv, "j_2") == "196884");
  CHECK(value_of(jinv, "j_2.lagrange") == "196884");
  CHECK_THROWS_AS(cmd_fan(0), UsageError);
  CHECK_THROWS_AS(cmd_chow(0), UsageError);
  CHECK_THROWS_AS(cmd_mirror(0), UsageError);
}

TEST_CASE("verify ladder and the negative control") {
  const auto ok = cmd_verify(2);
  CHECK(ok.status == Status::ok);
  CHECK(value_of(ok, "checks") == value_of(ok, "passed"));
  const auto bad = cmd_verify(1, {}, E6Variant::printed);
  CHECK(bad.status == Status::verification_failed);
  CHECK(bad.parameters.at("first_failure") == "C1 w_d = w(1,0)/2 d=1");
}

TEST_CASE("structured output round-trips") {
  for (const auto& r : {cmd_fan(2), cmd_chow(2), cmd_intersect(2, 1, 0), cmd_mirror(5), cmd_jinv(4), cmd_verify(1)}) {
    CHECK(parse_json(emit_json(r)) == r);
  }
  CommandResult odd;
  odd.command = "x";
  odd.status = Status::usage_error;
  odd.details.emplace_back("error", "quote \" and \\ and\nnewline");
  CHECK(parse_json(emit_json(odd)) == odd);
  CHECK_THROWS_AS(parse_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"command":"x","parameters":{},"values":[{"label":"a","value":"2/4"}],"details":[],"status":"ok"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"command":"x","parameters":{},"values":[],"details":[],"status":"fine"})"),
                  std::invalid_argument);
}

TEST_CASE("text output is aligned") {
  const std::string text = emit_text(cmd_mirror(2));
  CHECK(text.find("  w_1  744\n") != std::string::npos);
  CHECK(text.find("status:  ok\n") != std::string::npos);
}

TEST_CASE("executable: exit codes") {
  CHECK(run("intersect --degree 1 --a 1 --b 0").code == 0);
  CHECK(run("verify --degree-max 1").code == 0);
  CHECK(run("verify --degree-max 1 --e6-variant printed").code == 1);
  CHECK(run("fan --degree 0").code == 2);
  CHECK(run("mirror --order 0").code == 2);
  CHECK(run("intersect --degree 1 --a 1").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("fan --degree 1 --format xml").code == 2);
}

TEST_CASE("executable: json output") {
  const Run r = run("intersect --degree 1 --a 2 --b -1 --format json");
  REQUIRE(r.code == 0);
  const CommandResult parsed = parse_json(r.out);
  CHECK(parsed.command == "intersect");
  CHECK(value_of(parsed, "w") == "240");
  CHECK(parsed.parameters.at("b") == "-1");
  CHECK(parsed == cmd_intersect(1, 2, -1));
  const Run usage = run("chow --degree 0 --format json");
  CHECK(usage.code == 2);
  CHECK(parse_json(usage.out).status == Status::usage_error);
}

TEST_CASE("executable: byte-stable output") {
  for (const std::string args : {"fan --degree 2 --format json", "jinv --order 5 --format json",
                                 "verify --degree-max 2 --format json", "chow --degree 2"}) {
    const Run a = run(args + " --threads 1");
    const Run b = run(args + " --threads 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == run(args).out);
  }
}
