#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

/* Runs the installed command-line binary against every golden transcript
   and insists on byte equality.  BRADE_BIN and GOLDEN_DIR come from the
   build system. */

namespace {

std::string run_cmd(const std::string& args, int& rc) {
  std::string cmd = std::string(BRADE_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int status = pclose(p);
  rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct GoldenCase {
  const char* file;
  const char* args;
};

const std::vector<GoldenCase> cases = {
    {"roots_A2.txt", "roots A2"},
    {"roots_D4.txt", "roots D4"},
    {"orbits_D4.txt", "orbits D4"},
    {"orbits_A3.txt", "orbits A3"},
    {"poset_A3_orbit2.txt", "poset A3 --orbit 2"},
    {"poset_D4_orbit1_dot.txt", "poset D4 --orbit 1 --dot"},
    {"closure_D4.txt", "closure D4 --roots 1,2,4"},
    {"act_A3.txt", "act A3 --word \"E2 R1\" --set 1,3"},
    {"relations_A2.txt", "relations A2"},
    {"morita_A3.txt", "morita A3"},
    {"morita_E6_bmw.txt", "morita E6 --bmw"},
    {"wedderburn_A3.txt", "wedderburn A3"},
    {"gram_3_1.txt", "gram --strands 3 --arcs 1"},
    {"semisimple_3_1.txt", "semisimple --strands 3 --delta 1"},
    {"dnss_4.txt", "dnss 4 --delta 1"},
    {"dnss_4_char5.txt", "dnss 4 --delta 1 --char 5"},
    {"zset_3.txt", "zset 3"},
    {"cellposet_d4.txt", "cellposet-d 4"},
    {"cellposet_d4_dot.txt", "cellposet-d 4 --dot"},
};

}  // namespace

TEST_CASE("every subcommand reproduces its golden transcript") {
  for (const GoldenCase& c : cases) {
    CAPTURE(c.args);
    int rc = -1;
    std::string got = run_cmd(c.args, rc);
    CHECK(rc == 0);
    CHECK(got == slurp(c.file));
  }
}

TEST_CASE("output is byte-identical across repeated runs") {
  for (size_t idx : {2u, 10u, 12u}) {
    const GoldenCase& c = cases[idx];
    int rc1 = -1, rc2 = -1;
    std::string a = run_cmd(c.args, rc1);
    std::string b = run_cmd(c.args, rc2);
    CHECK(rc1 == 0);
    CHECK(rc2 == 0);
    CHECK(a == b);
  }
}

TEST_CASE("error paths exit with the right codes") {
  int rc = -1;
  (void)run_cmd("roots Q9", rc);
  CHECK(rc == 1);
  (void)run_cmd("gram --strands 9 --arcs 0", rc);
  CHECK(rc == 1);
  (void)run_cmd("orbits E8", rc);
  CHECK(rc == 1);
  (void)run_cmd("act A3 --word \"R7\" --set 1", rc);
  CHECK(rc == 1);
}
