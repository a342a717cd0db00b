#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef VYBE_BIN
#error "VYBE_BIN must point at the CLI binary"
#endif
#ifndef VYBE_FIXTURES
#error "VYBE_FIXTURES must point at the fixture directory"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_raw(const std::string& cmd_line) {
  std::string cmd = cmd_line + " 2>&1";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) { return run_raw(std::string(VYBE_BIN) + " " + args); }

std::string fx(const std::string& name) { return std::string(VYBE_FIXTURES) + "/" + name; }

std::string tmp_path(const std::string& name) { return "/tmp/vybe_cli_" + name; }

}  // namespace

TEST_CASE("check-voa: heisenberg passes, corrupted config exits 2") {
  RunResult r = run("check-voa --algebra " + fx("heisenberg.json") + " --max-degree 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);

  RunResult bad = run("check-voa --algebra " + fx("heisenberg_bad.json"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("error:") != std::string::npos);

  RunResult missing = run("check-voa --algebra /nonexistent.json");
  CHECK(missing.exit_code == 2);

  RunResult usage = run("check-voa");
  CHECK(usage.exit_code != 0);
}

TEST_CASE("check-voa: sl2 level 1 passes") {
  RunResult r = run("check-voa --algebra " + fx("sl2_k1.json") + " --max-degree 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("virasoro-relation(c=1)") != std::string::npos);
}

TEST_CASE("check-rbo: shipped example fixtures") {
  RunResult l1 = run("check-rbo --algebra " + fx("heisenberg.json") +
                     " --module adjoint --map " + fx("ex210.json") +
                     " --m 0 --max-degree 4");
  CHECK(l1.exit_code == 0);

  RunResult l2 = run("check-rbo --algebra " + fx("heisenberg.json") +
                     " --module adjoint --map " + fx("ex211.json") +
                     " --m 1 --max-degree 4");
  CHECK(l2.exit_code == 0);

  RunResult fock = run("check-rbo --algebra " + fx("heisenberg.json") +
                       " --module fock:1 --map " + fx("ex212.json") +
                       " --m 0 --max-degree 4");
  CHECK(fock.exit_code == 0);

  // perturbed level-two map fails with exit 1 and a witness
  std::string bad = tmp_path("ex211_bad.json");
  {
    std::ifstream in(fx("ex211.json"));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    auto pos = s.find("\"-1\", \"1\"");
    REQUIRE(pos != std::string::npos);
    s.replace(pos, 9, "\"0\", \"1\"");
    std::ofstream out(bad);
    out << s;
  }
  RunResult fail = run("check-rbo --algebra " + fx("heisenberg.json") +
                       " --module adjoint --map " + bad + " --m 1 --max-degree 4");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("witness") != std::string::npos);

  // carrier mismatch: the fock-sourced map against the adjoint module
  RunResult mism = run("check-rbo --algebra " + fx("heisenberg.json") +
                       " --module adjoint --map " + fx("ex212.json") + " --m 0");
  CHECK(mism.exit_code == 2);
  CHECK(mism.out.find("does not match") != std::string::npos);
}

TEST_CASE("build-r then check-voybe: the semidirect pipeline") {
  std::string rfile = tmp_path("r210.json");
  RunResult build = run("build-r --algebra " + fx("heisenberg.json") +
                        " --module adjoint --map " + fx("ex210.json") +
                        " --max-degree 4 --out " + rfile);
  CHECK(build.exit_code == 0);
  RunResult voybe = run("check-voybe --algebra " + fx("heisenberg.json") +
                        " --module adjoint --tensor " + rfile + " --m 0 --max-degree 4");
  CHECK(voybe.exit_code == 0);
  CHECK(voybe.out.find("m-set:") != std::string::npos);
  CHECK(voybe.out.find("partial check") != std::string::npos);
}

TEST_CASE("convert round trip is byte-identical") {
  // tensor -> map -> tensor reproduces the canonicalized tensor file
  std::string map1 = tmp_path("r_eh_map.json");
  std::string ten1 = tmp_path("r_eh_back.json");
  std::string ten2 = tmp_path("r_eh_back2.json");
  RunResult toMap = run("convert --algebra " + fx("sl2_k1.json") + " --to map --tensor " +
                        fx("r_eh_sl2.json") + " --out " + map1);
  CHECK(toMap.exit_code == 0);
  RunResult toTen = run("convert --algebra " + fx("sl2_k1.json") + " --to tensor --map " +
                        map1 + " --out " + ten1);
  CHECK(toTen.exit_code == 0);
  RunResult toMap2 = run("convert --algebra " + fx("sl2_k1.json") + " --to map --tensor " +
                         ten1 + " --out " + tmp_path("r_eh_map2.json"));
  CHECK(toMap2.exit_code == 0);
  RunResult toTen2 = run("convert --algebra " + fx("sl2_k1.json") + " --to tensor --map " +
                         tmp_path("r_eh_map2.json") + " --out " + ten2);
  CHECK(toTen2.exit_code == 0);
  std::ifstream f1(ten1), f2(ten2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK_FALSE(s1.str().empty());
}

TEST_CASE("voybe rejects a non-skewsymmetric tensor with exit 2") {
  std::string bad = tmp_path("nonskew.json");
  {
    std::ofstream out(bad);
    out << R"({"kind":"diagonal_tensor","carrier":"voa","levels":{
      "1":[{"left":{"terms":[{"mono":[[0,-1]],"coeff":"1"}]},
            "right":{"terms":[{"mono":[[0,-1]],"coeff":"1"}]},
            "coeff":"1"}]}})";
  }
  RunResult r = run("check-voybe --algebra " + fx("heisenberg.json") + " --tensor " + bad +
                    " --m 0 --max-degree 3");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("skewsymmetric") != std::string::npos);
}

TEST_CASE("reduce-level1 and verify-reduction on the classical fixture") {
  RunResult red = run("reduce-level1 --algebra " + fx("sl2_k1.json") + " --tensor " +
                      fx("r_eh_sl2.json") + " --out " + tmp_path("r_eh_lie.json"));
  CHECK(red.exit_code == 0);
  std::ifstream f(tmp_path("r_eh_lie.json"));
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("\"lie\"") != std::string::npos);

  RunResult ver = run("verify-reduction --algebra " + fx("sl2_k1.json") + " --tensor " +
                      fx("r_eh_sl2.json"));
  CHECK(ver.exit_code == 0);

  RunResult vmap = run("verify-reduction --algebra " + fx("heisenberg.json") +
                       " --module adjoint --map " + fx("ex210.json") + " --max-degree 3");
  CHECK(vmap.exit_code == 0);
}

TEST_CASE("check-strong-rbo on the level-one extension") {
  RunResult r = run("check-strong-rbo --algebra " + fx("heisenberg.json") +
                    " --module adjoint --map " + fx("ex210.json") + " --m 0 --max-degree 3");
  CHECK(r.exit_code == 0);
}

TEST_CASE("reports are byte-identical across runs and honor --format json") {
  std::string cmd = "check-rbo --algebra " + fx("heisenberg.json") +
                    " --module adjoint --map " + fx("ex210.json") +
                    " --m 0 --max-degree 4 --format json";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"schema\": \"1\"") != std::string::npos);

  // the thread cap changes scheduling, never the report
  RunResult c = run_raw("VYBE_THREADS=1 " + std::string(VYBE_BIN) + " " + cmd);
  CHECK(c.exit_code == 0);
  CHECK(c.out == a.out);
}
