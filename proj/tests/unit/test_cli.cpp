#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

#include <sstream>

using darmonlab::cli::run;
using nlohmann::json;

namespace {
struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("hilbert table") {
  Outcome r = call({"hilbert", "--", "-1", "-1"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["symbols"]["2"] == -1);
  CHECK(j["symbols"]["inf"] == -1);
}

TEST_CASE("darmon membership") {
  json yes = json::parse(call({"darmon", "--n", "3", "5/8"}).out);
  CHECK(yes["member"] == true);
  json no = json::parse(call({"darmon", "--n", "3", "8/5"}).out);
  CHECK(no["member"] == false);
}

TEST_CASE("human output") {
  Outcome r = call({"--output", "human", "delta", "2", "3"});
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());
  CHECK(r.out.front() != '{');
}

TEST_CASE("exit codes") {
  CHECK(call({"--field", "bogus", "hilbert", "1", "1"}).code == 1);
  CHECK(call({"hilbert", "0", "1"}).code == 1);
  CHECK(call({"nosuchcommand"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("determinism") {
  std::vector<std::string> args{"prescribe", "--places", "2", "3", "5", "7"};
  Outcome first = call(args);
  CHECK(first.code == 0);
  CHECK(first.out == call(args).out);
  CHECK(call({"prescribe", "--places", "2,3"}).code == 1);
}
