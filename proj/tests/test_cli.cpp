// End-to-end checks of the command-line tool. The binary path comes from
// the DIMSHIFT_BIN environment variable (set by the test harness).

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string binary() {
  const char* p = std::getenv("DIMSHIFT_BIN");
  REQUIRE_MESSAGE(p != nullptr, "DIMSHIFT_BIN must point at the CLI binary");
  return p;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("prefix command") {
  CHECK(run("prefix -q 3 -m 3 11").out == "l=1 nbar=9\n");
  CHECK(run("prefix -q 3 -m 3 7").out == "l=3 nbar=7\n");
  CHECK(run("prefix -q 3 -m 3 0").out == "l=1 nbar=0\n");
  CHECK(run("prefix -q 3 -m 3 27").code == 2);  // out of range
  CHECK(run("prefix -q 3 3").code == 2);        // missing -m
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("charpoly command") {
  const RunResult r4 = run("charpoly -q 3 -m 3 4");
  CHECK(r4.code == 0);
  CHECK(r4.out.find("a=(2,1,2)") != std::string::npos);
  CHECK(r4.out.find("trailing=20") != std::string::npos);
  const RunResult r0 = run("charpoly -q 3 -m 3 0");
  CHECK(r0.out.find("a=(3,0,0)") != std::string::npos);
  const RunResult oracle = run("charpoly -q 2 -m 2 1 --oracle");
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("oracle=match") != std::string::npos);
  const RunResult json = run("charpoly -q 3 -m 3 4 --json");
  CHECK(json.out.find("\"a\":[2,1,2]") != std::string::npos);
  // the environment can shrink the dense budget below the oracle's need
  CHECK(run("charpoly -q 3 -m 3 0 --oracle", "DIMSHIFT_DENSE_BUDGET=4 ").code == 2);
  CHECK(run("charpoly -q 3 -m 3 0 --oracle", "DIMSHIFT_DENSE_BUDGET=27 ").code == 0);
}

TEST_CASE("table command") {
  const RunResult t = run("table -q 2 -m 1");
  CHECK(t.code == 0);
  CHECK(t.out == "i ibar a1 l\n0 0 2 1\n1 1 1 1\n");
  const RunResult t22 = run("table -q 2 -m 2");
  CHECK(t22.code == 0);
  CHECK(t22.out.find("i ibar a1 a2 l d1\n") == 0);
}

TEST_CASE("dim command") {
  const RunResult exact = run("dim -q 3 -m 1 -i 1");
  CHECK(exact.code == 0);
  CHECK(exact.out.find("phi=0.63092975357145742") != std::string::npos);
  const RunResult one = run("dim -q 3 -m 1 -i 0");
  CHECK(one.out.find("phi=1") != std::string::npos);
  const RunResult frac = run("dim -q 3 -c 4/27");
  CHECK(frac.code == 0);
  CHECK(frac.out.find("c=4/27") != std::string::npos);
  const RunResult bracket = run("dim -q 3 -m 3 -c 0.4");
  CHECK(bracket.code == 0);
  CHECK(bracket.out.find("bracket") != std::string::npos);
  CHECK(bracket.out.find("lower: i=11") != std::string::npos);
  CHECK(bracket.out.find("upper: i=10") != std::string::npos);
  CHECK(run("dim -q 3 -c 4/28").code == 2);   // denominator not a power of q
  CHECK(run("dim -q 3 -m 2 -c 4/27").code == 2);
  CHECK(run("dim -q 3 -m 1 -i 5").code == 2);
}

TEST_CASE("sweep command emits deterministic ordered CSV") {
  const RunResult a = run("sweep -q 2 -m 3");
  const RunResult b = run("sweep -q 2 -m 3 --jobs 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // worker count must not affect the bytes
  CHECK(a.out.find("q,m,i,c_num,c_den,rho,phi,psi,residual\n") == 0);
  // 8 rows plus header
  std::size_t lines = 0;
  for (char ch : a.out) lines += ch == '\n';
  CHECK(lines == 9);
  CHECK(a.out.find("\n2,3,0,0,8,2,1,,0\n") != std::string::npos);
  const RunResult withpsi = run("sweep -q 3 -m 1 --psi");
  CHECK(withpsi.code == 0);
  CHECK(withpsi.out.find(",,") == std::string::npos);  // psi filled in
  const RunResult ranged = run("sweep -q 3 -m 2 --from 2 --to 4");
  std::size_t rlines = 0;
  for (char ch : ranged.out) rlines += ch == '\n';
  CHECK(rlines == 4);
  CHECK(run("sweep -q 3 -m 2 --from 5 --to 2").code == 2);
  const RunResult js = run("sweep -q 2 -m 1 --format json");
  CHECK(js.out.find("[{") == 0);
}

TEST_CASE("verify command") {
  CHECK(run("verify --q-max 2 --m-max 1").code == 0);
  const RunResult v = run("verify --q-max 2 --m-max 2");
  CHECK(v.code == 0);
  CHECK(v.out.find("verify: all checks passed") != std::string::npos);
}

TEST_CASE("asym command") {
  const RunResult a = run("asym -c 0 -q 2");
  CHECK(a.code == 0);
  CHECK(a.out.find("ratio=1 ") != std::string::npos);
  const RunResult b = run("asym -c 0.5 -q 10,100,1000");
  CHECK(b.code == 0);
  CHECK(b.out.find("FAIL") == std::string::npos);
  const RunResult c = run("asym -c 0.9 -q 100");
  CHECK(c.code == 0);
  CHECK(run("asym -c 1.5 -q 10").code == 2);
}

TEST_CASE("matrix dump") {
  const RunResult g = run("matrix -q 2 -m 1");
  CHECK(g.code == 0);
  CHECK(g.out == "11\n11\n");
  CHECK(run("matrix -q 3 -m 2", "DIMSHIFT_DENSE_BUDGET=4 ").code == 2);
}
