// Drives the installed CLI binary end to end: writes HopfSpec files to a
// scratch directory, runs subcommands, checks exit codes and output.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hopf/hopfspec.hpp"

using namespace hopf;

#ifndef HOPF_CLI_PATH
#error "HOPF_CLI_PATH must point at the hopf binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/hopf_cli_out.txt";
  std::string cmd = std::string(HOPF_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream os;
  os << in.rdbuf();
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return RunResult{code, os.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  std::string path = dir + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string h4_file(const Field& f) {
  HopfSpecDoc doc;
  doc.field = f;
  doc.hopfs.push_back({"H4", make_h4(f)});
  return serialize_hopfspec(doc);
}

}  // namespace

TEST_CASE("check: valid H4 exits 0, corrupted file exits 1 with a witness") {
  std::string ok_path = write_temp("h4_ok.hopfspec", h4_file(Field::rationals()));
  RunResult ok = run("check " + ok_path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("ok   associativity") != std::string::npos);

  // corrupt one comult line: Delta(h) = h (x) 1 + 1 (x) h
  std::string text = h4_file(Field::rationals());
  size_t pos = text.find("comult h h g 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 14, "comult h h 1 1");
  std::string bad_path = write_temp("h4_bad.hopfspec", text);
  RunResult bad = run("check " + bad_path);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("witness") != std::string::npos);
}

TEST_CASE("parse errors exit 2 with line and column") {
  std::string path = write_temp("broken.hopfspec", "hopfspec 1\nfield rationals\nhopf X\n");
  RunResult r = run("check " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("line") != std::string::npos);
  RunResult missing = run("check /nonexistent/file.hopfspec");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("dual, variant and double emit parseable HopfSpec") {
  std::string path = write_temp("h4.hopfspec", h4_file(Field::rationals()));
  RunResult d = run("dual " + path);
  CHECK(d.exit_code == 0);
  HopfSpecDoc doc = parse_hopfspec(d.out);
  CHECK(same_structure(*doc.hopfs.at(0).algebra, dual(*make_h4(Field::rationals()))));

  RunResult v = run("variant --op " + path);
  CHECK(v.exit_code == 0);
  HopfSpecDoc vdoc = parse_hopfspec(v.out);
  CHECK(same_structure(*vdoc.hopfs.at(0).algebra,
                       variant(*make_h4(Field::rationals()), VariantKind::op)));

  RunResult dd = run("double " + path);
  CHECK(dd.exit_code == 0);
  HopfSpecDoc ddoc = parse_hopfspec(dd.out);
  CHECK(ddoc.hopfs.at(0).algebra->dim() == 16);
  CHECK(ddoc.rmatrices.size() == 1);
}

TEST_CASE("twist by the built-in sigma cocycle reproduces H4") {
  std::string path = write_temp("h4q.hopfspec", h4_file(Field::rationals()));
  RunResult r = run("twist " + path + " --cocycle sigma:t=1");
  CHECK(r.exit_code == 0);
  HopfSpecDoc doc = parse_hopfspec(r.out);
  CHECK(same_structure(*doc.hopfs.at(0).algebra, *make_h4(Field::rationals())));

  // twisting by a non-cocycle fails with exit 1
  Field Q = Field::rationals();
  auto H = make_h4(Q);
  Functional junk(H, 2);
  junk.at(1, 1) = Scalar::one(Q);  // not unital
  HopfSpecDoc jd;
  jd.field = Q;
  jd.hopfs.push_back({"H4", H});
  jd.functionals.push_back({"junk", "H4", junk});
  std::string jpath = write_temp("junk.hopfspec", serialize_hopfspec(jd));
  RunResult jr = run("twist " + jpath + " --cocycle junk");
  CHECK(jr.exit_code == 1);
}

TEST_CASE("rform-check with the built-in family") {
  std::string path = write_temp("h4r.hopfspec", h4_file(Field::rationals()));
  RunResult r = run("rform-check " + path + " --form r:t=2 --cotriangular");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cotriangularity") != std::string::npos);
}

TEST_CASE("yd-check and azumaya subcommands") {
  Field Q = Field::rationals();
  auto H = make_h4(Q);
  H4Family fam = h4_family(H, Scalar::from_int(Q, 1));
  HopfSpecDoc doc;
  doc.field = Q;
  doc.hopfs.push_back({"H4", H});
  doc.ydmodules.push_back({"V", "H4", graded_comodule_v(H, fam.r)});
  doc.ydalgebras.push_back(
      {"EndV", "H4", end_algebra(graded_comodule_v(H, fam.r), EndSide::standard)});
  doc.ydalgebras.push_back({"kx2", "H4", kx2_trivial_algebra(H)});
  std::string path = write_temp("yd.hopfspec", serialize_hopfspec(doc));

  RunResult y = run("yd-check " + path);
  CHECK(y.exit_code == 0);
  CHECK(y.out.find("ydmodule V: ok") != std::string::npos);

  RunResult a = run("azumaya " + path);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("EndV: Azumaya") != std::string::npos);
  CHECK(a.out.find("kx2: not Azumaya") != std::string::npos);
}

TEST_CASE("report subcommand over a small prime field") {
  RunResult r = run("report --field gf:5 --t 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("P12 PASS") != std::string::npos);
  RunResult j = run("report --field gf:5 --t 3 --json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"all_pass\": true") != std::string::npos);
  RunResult bad = run("report --field gf:9");
  CHECK(bad.exit_code == 2);
}
