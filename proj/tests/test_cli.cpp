#include "skm/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "skm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = skm::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("skm_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval") {
  CHECK(cli({"eval", "--structure", "q0", "inv(1+1+1)"}).out == "1/3\n");
  CHECK(cli({"eval", "--structure", "h0", "i*j"}).out == "k\n");
  CHECK(cli({"eval", "--structure", "fp:7", "inv(1+1)"}).out == "4\n");
  CHECK(cli({"eval", "--structure", "prod:fp:2,fp:3", "1+1"}).out == "(0, 2)\n");
  CHECK(cli({"eval", "--structure", "c0", "inv(1+i)"}).out == "1/2-1/2i\n");
  CHECK(cli({"eval", "--structure", "m2q0", "1+1"}).out == "[[2,0],[0,2]]\n");
  CHECK(cli({"eval", "1+"}).code == 2);
  CHECK(cli({"eval", "--structure", "q0", "j"}).code == 3);
  CHECK(cli({"eval", "--structure", "fp:6", "1"}).code == 2);
  CHECK(cli({"eval", "--structure", "nope", "1"}).code == 2);
  CHECK(cli({"eval", "-s", "prod:(fp:2,fp:3),fp:5", "1+1"}).out == "((0, 2), 2)\n");
  CHECK(cli({"eval", "-s", "prod:(fp:2,fp:3)", "1+1"}).out == "(0, 2)\n");
  CHECK(cli({"eval", "-s", "prod:fp:2,", "1"}).code == 2);
}

TEST_CASE("normalize") {
  CHECK(cli({"normalize", "2*inv(4)+1*inv(4)"}).out == "3*inv(4)\n");
  CHECK(cli({"normalize", "inv(0)"}).out == "0\n");
  CHECK(cli({"normalize", "0 - 1"}).out == "-(1*inv(1))\n");
  CHECK(cli({"normalize", "i"}).code == 3);
  CHECK(cli({"normalize", "(("}).code == 2);
}

TEST_CASE("check") {
  CHECK(cli({"check", "--suite", "skmd", "--structure", "fp:5", "--exhaustive"}).code == 0);
  const auto m = cli({"check", "--suite", "skmd", "--structure", "m2q0", "--grid", "2", "--porcelain"});
  CHECK(m.code == 1);
  CHECK(m.out.find("LAW SkMd.Ril fail cases=8 witness=([[0,0],[1,0]])") != std::string::npos);
  CHECK(cli({"check", "--suite", "skmd", "--structure", "m2q0", "--grid", "2", "--expect-fail"}).code == 0);
  CHECK(cli({"check", "--suite", "hspec", "--structure", "h0", "--samples", "1000", "--seed", "7"}).code == 0);
  CHECK(cli({"check", "--suite", "hspec", "--structure", "q0"}).code == 3);
  CHECK(cli({"check", "--suite", "skmd", "--structure", "q0", "--exhaustive"}).code == 2);
  CHECK(cli({"check", "--suite", "bogus"}).code == 2);
  CHECK(cli({"check"}).code == 2);

  const auto a = cli({"check", "--suite", "derivedprops", "--structure", "h0", "--samples", "200", "--porcelain"});
  const auto b =
      cli({"check", "--suite", "derivedprops", "--structure", "h0", "--samples", "200", "--porcelain", "--serial"});
  CHECK(a.out == b.out);
}

TEST_CASE("generate, expand and decompose") {
  const auto z6 = temp_path("z6.tbl");
  const auto z6m = temp_path("z6m.tbl");
  REQUIRE(cli({"generate", "zmod:6", "-o", z6}).code == 0);
  const auto e = cli({"expand", z6, "--flavor", "strong", "-o", z6m});
  CHECK(e.code == 0);
  CHECK(e.out.find("suite SkMd: pass") != std::string::npos);
  const auto text = slurp(z6m);
  CHECK(text.substr(text.rfind("inv")) == "inv 0 1 2 3 4 5\n");

  const auto prefix = temp_path("z6");
  const auto d = cli({"decompose", z6m, "-o", prefix});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("factors: 2 3\n", 0) == 0);
  CHECK(d.out.find("  5 -> (1, 2)\n") != std::string::npos);
  CHECK(slurp(prefix + ".factor1.tbl").rfind("ring 3\n", 0) == 0);

  const auto z4 = temp_path("z4.tbl");
  cli({"generate", "zmod:4", "-o", z4});
  const auto f = cli({"expand", z4});
  CHECK(f.code == 4);
  CHECK(f.err.find("witness: 2") != std::string::npos);
  CHECK(cli({"decompose", z4}).code == 2);

  const auto z1 = temp_path("z1.tbl");
  cli({"generate", "zmod:1", "-o", z1});
  const auto one = cli({"expand", z1});
  CHECK(one.code == 0);
  CHECK(one.out.find("inv 0\n") != std::string::npos);

  const auto v4 = temp_path("v4.tbl");
  const auto v4m = temp_path("v4m.tbl");
  cli({"generate", "zprod:2,2", "-o", v4});
  cli({"expand", v4, "-o", v4m});
  CHECK(cli({"decompose", v4m}).out.rfind("factors: 2 2\n", 0) == 0);

  const auto z7 = temp_path("z7.tbl");
  const auto z7m = temp_path("z7m.tbl");
  cli({"generate", "zmod:7", "-o", z7});
  cli({"expand", z7, "--flavor", "distinct", "-o", z7m});
  CHECK(cli({"decompose", z7m}).out.rfind("factors: 7\n", 0) == 0);
  CHECK(cli({"check", "--suite", "skmd", "--structure", "table:" + z7m, "--exhaustive"}).code == 0);
  CHECK(cli({"check", "--suite", "skmd", "--structure", "table:" + z7, "--exhaustive"}).code == 3);

  const auto broken = temp_path("broken.tbl");
  std::ofstream(broken) << "ring 2\nneg 0 1\nadd 0 1\nadd 1 1\nmul 0 0\nmul 0 1\n";
  CHECK(cli({"expand", broken}).code == 2);
  CHECK(cli({"expand", temp_path("missing.tbl")}).code == 2);
  CHECK(cli({"generate", "zmod:0"}).code == 2);

  for (const auto& p : {z6, z6m, z4, z1, v4, v4m, z7, z7m, broken, prefix + ".factor0.tbl", prefix + ".factor1.tbl"})
    std::remove(p.c_str());
}

TEST_CASE("demos") {
  const auto m = cli({"demo", "matrix-counterexample"});
  CHECK(m.code == 0);
  CHECK(m.out.find("inv(P) = [[1/2,1/2],[0,0]]") != std::string::npos);
  const auto u = cli({"demo", "uniqueness"});
  CHECK(u.code == 0);
  CHECK(u.out.find("uniqueness: fail at (2, 4)") != std::string::npos);
  const auto r = cli({"demo", "unit-regular", "--samples", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == cli({"demo", "unit-regular", "--samples", "3"}).out);
  CHECK(cli({"demo", "unit-regular", "--structure", "h0"}).code == 0);
  CHECK(cli({"demo", "nothing"}).code == 2);
  CHECK(cli({"demo", "uniqueness", "--modulus", "12"}).code == 4);
}

TEST_CASE("help") { CHECK(cli({"--help"}).code == 0); }
