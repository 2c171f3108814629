// End-to-end tests of the command line driver: exit-code contract,
// report determinism, and the construct -> check round trip.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

fs::path work_dir() {
  fs::path d = fs::temp_directory_path() / "gkoszul_cli_test";
  fs::create_directories(d);
  return d;
}

std::string bin() { return std::string(GKOSZUL_BIN); }

int run(const std::string& args) {
  std::string cmd = bin() + " " + args + " >/dev/null 2>/dev/null";
  int st = std::system(cmd.c_str());
  REQUIRE(st != -1);
  return WEXITSTATUS(st);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void put(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const fs::path dir = work_dir();

fs::path two_cubes_file() {
  fs::path p = dir / "x3y3.json";
  put(p, "{\"field\":101,\"variables\":[\"x\",\"y\"],"
         "\"generators\":[\"x^3\",\"y^3\"]}");
  return p;
}

}  // namespace

TEST_CASE("construct writes a deterministic ring description") {
  fs::path a = dir / "c1.json";
  fs::path b = dir / "c2.json";
  CHECK(run("construct --embdim 2 --socle 4 --seed 1 --out " + a.string()) ==
        0);
  CHECK(run("construct --embdim 2 --socle 4 --seed 1 --out " + b.string()) ==
        0);
  CHECK(slurp(a) == slurp(b));
  CHECK(contains(slurp(a), "\"truncation\""));

  // explicit dual form: the compressed quartic behind the two-cubes ring
  fs::path c = dir / "c3.json";
  CHECK(run("construct --embdim 2 --socle 4 --dual-form X^2*Y^2 --out " +
            c.string()) == 0);
  CHECK(contains(slurp(c), "x^3"));

  // a quartic whose apolar algebra is too short
  CHECK(run("construct --embdim 2 --socle 4 --dual-form X^4+Y^4") == 1);

  // flag errors
  CHECK(run("construct --embdim 2 --socle 4 --field 100") == 2);
  CHECK(run("construct --socle 4") == 2);
  CHECK(run("construct --embdim 2 --socle 4 --dual-form X^4+") == 2);
}

TEST_CASE("check reports properties and exits 0 on computation") {
  fs::path ring = dir / "chk.json";
  REQUIRE(run("construct --embdim 2 --socle 4 --seed 1 --out " +
              ring.string()) == 0);
  fs::path r1 = dir / "chk1.json";
  fs::path r2 = dir / "chk2.json";
  CHECK(run("check " + ring.string() + " --out " + r1.string()) == 0);
  CHECK(run("check " + ring.string() + " --out " + r2.string()) == 0);
  std::string doc = slurp(r1);
  CHECK(doc == slurp(r2));
  CHECK(contains(doc, "\"schema\": 1"));
  CHECK(contains(doc, "\"K2\""));
  CHECK(contains(doc, "\"verdict\": true"));
  CHECK(contains(doc, "\"hilbert\""));
  CHECK(contains(doc, "\"compressed\": true"));
  CHECK_FALSE(contains(doc, "wall-time"));

  fs::path t = dir / "chk.txt";
  CHECK(run("check " + ring.string() +
            " --props v,thom --format text --out " + t.string()) == 0);
  std::string txt = slurp(t);
  CHECK(contains(txt, "v: 3"));
  CHECK(contains(txt, "thom: true"));
}

TEST_CASE("check maps input problems to exit 2") {
  CHECK(run("check " + (dir / "no_such_file.json").string()) == 2);

  fs::path bad = dir / "bad.json";
  put(bad, "definitely not json");
  CHECK(run("check " + bad.string()) == 2);

  fs::path notart = dir / "notart.json";
  put(notart, "{\"field\":101,\"variables\":[\"x\",\"y\"],"
              "\"generators\":[\"x^2\"]}");
  CHECK(run("check " + notart.string()) == 2);

  CHECK(run("check " + two_cubes_file().string() + " --props nonsense") == 2);
}

TEST_CASE("audit exit codes follow the verdicts") {
  fs::path ring = two_cubes_file();
  fs::path r1 = dir / "a1.json";
  fs::path r2 = dir / "a2.json";
  CHECK(run("audit k2 " + ring.string() + " --out " + r1.string()) == 0);
  CHECK(run("audit k2 " + ring.string() + " --out " + r2.string()) == 0);
  CHECK(slurp(r1) == slurp(r2));
  CHECK(contains(slurp(r1), "\"pass\": true"));

  CHECK(run("audit main " + ring.string()) == 0);
  CHECK(run("audit not0 " + ring.string()) == 0);
  CHECK(run("audit t1 " + ring.string()) == 0);

  // t beyond v(R) violates the audit's precondition
  CHECK(run("audit k2 " + ring.string() + " --t 4") == 2);

  // the socle-degree audit rejects a non-Gorenstein ring
  fs::path qn3 = dir / "qn3.json";
  put(qn3, "{\"field\":101,\"variables\":[\"x\",\"y\"],"
           "\"generators\":[],\"truncation\":3}");
  CHECK(run("audit main " + qn3.string()) == 2);

  // file-based audits need a file
  CHECK(run("audit k2") == 2);
  CHECK(run("audit bogus " + ring.string()) == 2);
}

TEST_CASE("question harness on a small grid") {
  fs::path out = dir / "q1.json";
  fs::path out2 = dir / "q2.json";
  CHECK(run("audit q1 --trials 2 --socle-range 4:4 --out " + out.string()) ==
        0);
  CHECK(run("audit q1 --trials 2 --socle-range 4:4 --out " + out2.string()) ==
        0);
  std::string doc = slurp(out);
  CHECK(doc == slurp(out2));
  CHECK(contains(doc, "\"question\": \"q1\""));
  CHECK(contains(doc, "\"pass\": true"));
  CHECK(contains(doc, "\"candidates\": []"));
  CHECK(run("audit q2 --trials 1 --socle-range 4:4") == 0);
  CHECK(run("audit q1 --trials 1 --socle-range 1:1") == 2);
}

TEST_CASE("resolve and series print the expected tables") {
  fs::path ring = dir / "rs.json";
  REQUIRE(run("construct --embdim 2 --socle 4 --seed 1 --out " +
              ring.string()) == 0);
  fs::path t = dir / "rs.txt";
  CHECK(run("series " + ring.string() + " --module k --format text --out " +
            t.string()) == 0);
  CHECK(contains(slurp(t), "series of k to depth 6: 1, 2, 3, 4, 5, 6, 7"));

  CHECK(run("resolve " + ring.string() +
            " --module R/m^2 --format text --depth 4 --out " + t.string()) ==
        0);
  CHECK(contains(slurp(t), "betti of R/m^2 to depth 4:"));

  CHECK(run("resolve " + ring.string() + " --module m^9") == 2);
  CHECK(run("resolve " + ring.string() + " --module junk") == 2);
  CHECK(run("series " + ring.string() + " --module m^x") == 2);
}
