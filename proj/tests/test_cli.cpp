#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "report.hpp"

using namespace selfloop;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = "selfloop_test_" + name + ".g6";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("energy subcommand") {
  const auto r = run({"energy", "--graph6", "A_", "--loops", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"n\":2,\"alpha\":1,\"shift\":0.5,\"energy\":2.2360679775,"
        "\"spectrum\":[1.61803398875,-0.61803398875]}\n");

  const auto csv = run({"energy", "--graph6", "A_", "--loops", "1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,alpha,shift,energy\n2,1,0.5,2.23606797750\n");

  const auto plain = run({"energy", "--graph6", "Bw", "--format", "text"});
  CHECK(plain.out.rfind("n=3 alpha=0 shift=0 energy=4", 0) == 0);
}

TEST_CASE("energy over an input file") {
  const auto path = temp_file("energy", "# two graphs\nA_ : 1\n\nBw\n");
  const auto r = run({"energy", "--input", path, "--format", "csv"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out == "n,alpha,shift,energy\n2,1,0.5,2.23606797750\n3,0,0,4\n");
}

TEST_CASE("witness subcommand") {
  const auto r = run({"witness", "--graph6", "Bg"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"route\":\"independent-set\"") != std::string::npos);
  CHECK(r.out.find("\"loops\":\"5\"") != std::string::npos);  // {0, 2}

  const auto ambiguous = run({"witness", "--graph6", "A_", "--tol", "10"});
  CHECK(ambiguous.code == 1);
  CHECK(ambiguous.err.find("witness failed") != std::string::npos);
}

TEST_CASE("spectrum subcommand") {
  const auto r = run({"spectrum", "--graph6", "Bw"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":3,\"alpha\":0,\"shift\":0.0,\"spectrum\":[2.0,-1.0,-1.0],"
                 "\"clusters\":[[2.0,1],[-1.0,2]]}\n");
}

TEST_CASE("family subcommand") {
  const auto r = run({"family", "--partner", "empty", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"energy\":44.3310501212,") != std::string::npos);
  CHECK(r.out.find("\"equal\":true") != std::string::npos);

  const auto k = run({"family", "--partner", "complete", "--n", "1", "--format", "text"});
  CHECK(k.code == 0);
  CHECK(k.out.find("closed form 56") != std::string::npos);

  const auto one = run({"family", "--partner", "empty", "--n", "1", "--variant", "h2"});
  CHECK(one.code == 0);
  CHECK(one.out.find("\"alpha\":12") != std::string::npos);
}

TEST_CASE("verify-all subcommand") {
  const auto r = run({"verify-all", "--n-max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("64 graphs on 4 vertices") != std::string::npos);
  CHECK(r.out.find("0 failures") != std::string::npos);

  const auto a = run({"verify-all", "--n-max", "4", "--format", "json", "--threads", "1"});
  const auto b = run({"verify-all", "--n-max", "4", "--format", "json", "--threads", "6"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto path = temp_file("corpus", "Bw : 1\nA_\n");
  const auto corpus = run({"verify-all", "--input", path});
  CHECK(corpus.code == 0);
  std::remove(path.c_str());

  const auto tiny = temp_file("tiny", "@\n");
  const auto failing = run({"verify-all", "--input", tiny, "--format", "json"});
  std::remove(tiny.c_str());
  CHECK(failing.code == 1);
  CHECK(failing.out.find("\"failures\":[{\"id\":\"@\"") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"energy", "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"energy", "--graph6", "B"}).code == 2);
  CHECK(run({"energy", "--graph6", "A_", "--loops", "4"}).code == 2);
  CHECK(run({"energy", "--input", "/nonexistent/file.g6"}).code == 2);
  CHECK(run({"energy"}).code == 2);
  CHECK(run({"verify-all", "--n-max", "9"}).code == 2);
  CHECK(run({"family", "--partner", "other"}).code == 2);
  CHECK(run({"energy", "--graph6", "A_", "--tol", "-1"}).code == 2);
  CHECK(run({"witness", "--graph6", "@"}).code == 2);
}

TEST_CASE("report formatting") {
  CHECK(cli::format_real(0.5) == "0.5");
  CHECK(cli::format_real(2.23606797749979) == "2.23606797750");
  CHECK(cli::format_real(4.0) == "4");

  CHECK(cli::emit_report(CheckSummary{}, cli::OutputFormat::kJson) ==
        "{\"total\":0,\"passed\":0,\"failures\":[]}\n");

  CheckSummary failing;
  failing.record(true, "ok");
  failing.record(false, "Bw : 1", "energy too small");
  CHECK(cli::emit_report(failing, cli::OutputFormat::kJson) ==
        "{\"total\":2,\"passed\":1,\"failures\":[{\"id\":\"Bw : 1\",\"detail\":\"energy too small\"}]}\n");
  CHECK(cli::emit_report(failing, cli::OutputFormat::kCsv) ==
        "total,passed,failed\n2,1,1\n\nid,detail\n\"Bw : 1\",\"energy too small\"\n");
  CHECK(cli::emit_report(failing, cli::OutputFormat::kText).find("FAIL Bw : 1") != std::string::npos);
}
