#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "braesslab/cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) {
  const char* dir = std::getenv("BRAESSLAB_TEST_DATA");
  return std::string(dir ? dir : BRAESSLAB_TEST_DATA_DIR) + "/" + name;
}

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = braesslab::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("kemeny on files") {
  const auto c6 = run({"kemeny", data("c6.txt")});
  CHECK(c6.code == 0);
  CHECK(contains(c6.out, "35/6 ≈ 5.833333"));
  const auto p2 = run({"kemeny", data("p2.txt")});
  CHECK(p2.code == 0);
  CHECK(contains(p2.out, "1/2"));
  const auto verified = run({"kemeny", data("c6.txt"), "--verify"});
  CHECK(verified.code == 0);
}

TEST_CASE("input errors exit with code 2") {
  const auto split = run({"kemeny", data("disconnected.txt")});
  CHECK(split.code == 2);
  CHECK(contains(split.err, "graph is disconnected"));
  CHECK(contains(split.err, "{3,4}"));
  const auto bad = run({"kemeny", data("bad_line.txt")});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "line 3"));
  const auto missing = run({"kemeny", data("no_such_file.txt")});
  CHECK(missing.code == 2);
  CHECK(run({"check-paradox", data("c6.txt"), "--vertex", "9", "--k1", "1", "--k2", "2"}).code == 2);
  CHECK(run({"check-paradox", data("c6.txt"), "--vertex", "0", "--k1", "1", "--k2", "0"}).code == 2);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"family-table"}).code == 1);
  CHECK(run({"kemeny", data("c6.txt"), "--format", "yaml"}).code == 1);
  CHECK(run({"check-paradox", data("c6.txt"), "--k1", "1"}).code == 1);
}

TEST_CASE("help succeeds") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("scan-braess") {
  const auto c6 = run({"scan-braess", data("c6.txt")});
  CHECK(c6.code == 0);
  const auto k4 = run({"scan-braess", data("k4.txt")});
  CHECK(k4.code == 0);
  CHECK(contains(k4.out, "no non-edges"));
  const auto json = run({"scan-braess", data("s6.txt"), "--format", "json"});
  CHECK(json.code == 0);
  CHECK(contains(json.out, "\"num\""));
  CHECK(contains(json.out, "\"den\""));
}

TEST_CASE("output does not depend on the thread count") {
  for (const std::string fmt : {"text", "json", "csv"}) {
    const auto a = run({"scan-braess", data("s6.txt"), "--format", fmt, "--threads", "1"});
    const auto b = run({"scan-braess", data("s6.txt"), "--format", fmt, "--threads", "4"});
    CHECK(a.out == b.out);
    const auto c = run({"family-table", "--family", "star", "--n-max", "30", "--format", fmt, "--threads", "1"});
    const auto d = run({"family-table", "--family", "star", "--n-max", "30", "--format", fmt, "--threads", "3"});
    CHECK(c.out == d.out);
    const auto e = run({"sequence-ratio", "--family", "broom", "--alpha-rule", "sqrt", "--n-max", "30", "--format", fmt,
                        "--threads", "1"});
    const auto f = run({"sequence-ratio", "--family", "broom", "--alpha-rule", "sqrt", "--n-max", "30", "--format", fmt,
                        "--threads", "2"});
    CHECK(e.out == f.out);
  }
}

TEST_CASE("check-paradox") {
  const auto r = run({"check-paradox", data("s6.txt"), "--vertex", "0", "--k1", "1", "--k2", "2", "--verify"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "paradoxical"));
  CHECK(contains(r.out, "0.166"));
}

TEST_CASE("family-table marks agreement with stated thresholds") {
  const auto star = run({"family-table", "--family", "star", "--k1", "1", "--k2", "2", "--n-max", "20"});
  CHECK(star.code == 0);
  CHECK(contains(star.out, "agrees"));
  const auto cycle = run({"family-table", "--family", "cycle", "--k1", "2", "--k2", "2", "--n-max", "20", "--format", "csv"});
  CHECK(cycle.code == 0);
  CHECK(contains(cycle.out, "n,"));
}

TEST_CASE("sequence-ratio for trees carries alpha, ell and beta") {
  const auto r = run({"sequence-ratio", "--family", "path", "--n-max", "12", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "alpha"));
  CHECK(contains(r.out, "beta"));
}

TEST_CASE("oracle-verify") {
  const auto ok = run({"oracle-verify", data("s6.txt")});
  CHECK(ok.code == 0);
  const auto too_big = run({"oracle-verify", data("c6.txt"), "--max-n", "4"});
  CHECK(too_big.code == 2);
}
