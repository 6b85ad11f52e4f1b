// End-to-end tests driving the installed binary named by AMEFORGE_BIN.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("AMEFORGE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "AMEFORGE_BIN must point at the CLI binary");
  return std::string("\"") + bin + "\"";
}

// Runs a full shell command line (so pipes and env prefixes work) and
// captures stdout; stderr is discarded.
RunResult shell(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  result.code = WEXITSTATUS(status);
  return result;
}

RunResult run(const std::string& args) { return shell(binary() + " " + args); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kSudoku =
    "816249573\n357681924\n492735168\n735168492\n249573816\n"
    "681924357\n924357681\n168492735\n573816249\n";

}  // namespace

TEST_CASE("every catalog state verifies at its uniformity level") {
  const std::map<std::string, int> levels = {
      {"omega43", 2}, {"ups52", 2}, {"xi62", 3}, {"ame64", 3}, {"ame54", 2},
      {"omega52_logical", 2}, {"hs", 1}, {"hd", 1}, {"l", 1}, {"m", 1}};
  for (const auto& [name, k] : levels) {
    std::string path = "/tmp/cli_" + name + ".json";
    REQUIRE(run("catalog emit " + name + " --out " + path).code == 0);
    RunResult verdict = run("verify " + path + " --k " + std::to_string(k));
    INFO("entry: ", name);
    CHECK(verdict.code == 0);
    CHECK(verdict.out.find("-uniform") != std::string::npos);
  }
}

TEST_CASE("both catalog matrices verify as multi-unitary") {
  for (std::string name : {"o8", "oa16_perm"}) {
    std::string path = "/tmp/cli_" + name + ".json";
    REQUIRE(run("catalog emit " + name + " --out " + path).code == 0);
    RunResult verdict = run("verify-matrix " + path);
    CHECK(verdict.code == 0);
    CHECK(verdict.out.find("-unitary") != std::string::npos);
  }
}

TEST_CASE("emitted states verify through a pipe") {
  RunResult piped = shell(binary() + " catalog emit omega43 | " + binary() + " verify - --k 2");
  CHECK(piped.code == 0);
}

TEST_CASE("catalog list names every entry") {
  RunResult list = run("catalog list");
  CHECK(list.code == 0);
  for (const char* name : {"omega43", "ups52", "xi62", "ame64", "ame54",
                           "omega52_logical", "hs", "hd", "l", "m", "o8", "oa16_perm"}) {
    CHECK(list.out.find(name) != std::string::npos);
  }
}

TEST_CASE("a product state fails verification with exit code 1") {
  json state = {{"num_parties", 2},
                {"local_dim", 2},
                {"terms", json::array({{{"ket", {0, 0}}, {"re", 1.0}, {"im", 0.0}}})}};
  write_file("/tmp/cli_product.json", state.dump());
  RunResult verdict = run("verify /tmp/cli_product.json --k 1");
  CHECK(verdict.code == 1);
  CHECK(verdict.out.find("not 1-uniform") != std::string::npos);
}

TEST_CASE("bad input and bad usage exit with code 2") {
  write_file("/tmp/cli_broken.json", "{ not json");
  CHECK(run("verify /tmp/cli_broken.json").code == 2);
  CHECK(run("verify /tmp/cli_missing_file.json").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify").code == 2);                      // missing file argument
  CHECK(run("catalog emit no_such_entry").code == 2);
  CHECK(run("--bogus-flag").code == 2);
}

TEST_CASE("json verification output is machine readable") {
  REQUIRE(run("catalog emit omega43 --out /tmp/cli_omega.json").code == 0);
  RunResult verdict = run("verify /tmp/cli_omega.json --k 2 --json");
  REQUIRE(verdict.code == 0);
  json parsed = json::parse(verdict.out);
  CHECK(parsed.at("num_parties") == 4);
  CHECK(parsed.at("local_dim") == 3);
  CHECK(parsed.at("k") == 2);
  CHECK(parsed.at("is_uniform") == true);
  CHECK(parsed.at("max_deviation").get<double>() < 1e-12);
}

TEST_CASE("constructed codes verify as MDS") {
  RunResult piped = shell(binary() + " construct rs 3 | " + binary() + " code verify -");
  CHECK(piped.code == 0);
  CHECK(piped.out.find("MDS") != std::string::npos);

  REQUIRE(run("construct rs 3 --out /tmp/cli_rs3.txt").code == 0);
  CHECK(read_file("/tmp/cli_rs3.txt") ==
        "0000\n0112\n0221\n1011\n1120\n1202\n2022\n2101\n2210\n");
}

TEST_CASE("code verify reports the distance in json") {
  REQUIRE(run("construct rs 3 --out /tmp/cli_rs3.txt").code == 0);
  RunResult verdict = run("code verify /tmp/cli_rs3.txt --json");
  REQUIRE(verdict.code == 0);
  json parsed = json::parse(verdict.out);
  CHECK(parsed.at("min_distance") == 3);
  CHECK(parsed.at("is_mds") == true);
}

TEST_CASE("the greedy search fails for four binary parties") {
  RunResult result = run("search-mds 4 2");
  CHECK(result.code == 1);
  CHECK(result.out.find("no such code exists") != std::string::npos);
}

TEST_CASE("the greedy search writes the frozen qutrit words") {
  RunResult result = run("search-mds 4 3 --out /tmp/cli_greedy43.txt");
  CHECK(result.code == 0);
  CHECK(read_file("/tmp/cli_greedy43.txt") ==
        "0000\n0111\n0222\n1012\n1120\n1201\n2021\n2102\n2210\n");
}

TEST_CASE("shortening and puncturing run through the code subcommand") {
  REQUIRE(run("construct rs 3 --out /tmp/cli_rs3.txt").code == 0);
  RunResult shortened = run("code shorten /tmp/cli_rs3.txt");
  CHECK(shortened.code == 0);
  CHECK(shortened.out.find("000\n112\n221\n") != std::string::npos);

  RunResult dropped = run("code shorten /tmp/cli_rs3.txt --drop 0 --out /tmp/cli_dropped.txt");
  CHECK(dropped.code == 0);
  std::string text = read_file("/tmp/cli_dropped.txt");
  CHECK(std::count(text.begin(), text.end(), '\n') == 9);
  CHECK(text.find("112") != std::string::npos);
}

TEST_CASE("mols prints a table for prime powers and rejects others") {
  RunResult ok = run("mols 4");
  CHECK(ok.code == 0);
  CHECK_FALSE(ok.out.empty());
  CHECK(run("mols 6").code == 2);
}

TEST_CASE("sudoku verification passes the symmetric grid") {
  write_file("/tmp/cli_s9.txt", kSudoku);
  RunResult verdict = run("sudoku verify /tmp/cli_s9.txt");
  CHECK(verdict.code == 0);
  CHECK(verdict.out.find("symmetric sudoku") != std::string::npos);

  RunResult parsed_run = run("sudoku verify /tmp/cli_s9.txt --json");
  REQUIRE(parsed_run.code == 0);
  json parsed = json::parse(parsed_run.out);
  CHECK(parsed.at("is_symmetric") == true);
  CHECK(parsed.at("families").size() == 6);
}

TEST_CASE("sudoku verification fails a perturbed grid") {
  std::string grid = kSudoku;
  std::swap(grid[0], grid[1]);  // swaps the digits 8 and 1 in place
  write_file("/tmp/cli_s9_bad.txt", grid);
  CHECK(run("sudoku verify /tmp/cli_s9_bad.txt").code == 1);
}

TEST_CASE("sudoku extract produces the frozen digit permutation") {
  write_file("/tmp/cli_s9.txt", kSudoku);
  RunResult result = run("sudoku extract /tmp/cli_s9.txt 5 --out /tmp/cli_p5.json");
  CHECK(result.code == 0);
  CHECK(result.out.find("(6, 1, 5, 2, 3, 7, 4, 8, 0)") != std::string::npos);
  CHECK(result.out.find("2-unitary: yes") != std::string::npos);

  RunResult verdict = run("verify-matrix /tmp/cli_p5.json");
  CHECK(verdict.code == 0);
}

TEST_CASE("annealing writes a loadable state file") {
  RunResult result = run(
      "anneal 4 2 --sweeps 40 --moves 40 --restarts 2 --seed 3 --out /tmp/cli_best.json");
  REQUIRE(result.code == 0);
  CHECK(result.out.find("best mean balanced purity") != std::string::npos);
  json parsed = json::parse(read_file("/tmp/cli_best.json"));
  CHECK(parsed.at("num_parties") == 4);
  CHECK(parsed.at("local_dim") == 2);
  REQUIRE(run("verify /tmp/cli_best.json --k 1 --tolerance 1").code == 0);
}

TEST_CASE("annealing is reproducible across invocations") {
  std::string args = "anneal 4 2 --sweeps 30 --moves 30 --restarts 2 --seed 9 --json";
  RunResult a = run(args);
  RunResult b = run(args);
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out).at("best_value") == json::parse(b.out).at("best_value"));
}

TEST_CASE("page entropy sampling reports mean and stderr") {
  RunResult result = run("page-entropy 4 --samples 100 --seed 1");
  CHECK(result.code == 0);
  CHECK(result.out.find("mean half-chain entropy") != std::string::npos);

  RunResult parsed_run = run("page-entropy 4 --samples 100 --seed 1 --json");
  REQUIRE(parsed_run.code == 0);
  json parsed = json::parse(parsed_run.out);
  double mean = parsed.at("mean").get<double>();
  CHECK(mean > 0.0);
  CHECK(mean < std::log(4.0));
  CHECK(run("page-entropy 5 --samples 100").code == 2);  // odd qubit count
}

TEST_CASE("the preparation circuit simulates to the target state") {
  RunResult listing = run("circuit ame43");
  CHECK(listing.code == 0);
  CHECK(listing.out.find("F(0)") != std::string::npos);
  CHECK(run("circuit ame43 --simulate").code == 0);
}

TEST_CASE("loose tolerances can be set by flag and environment") {
  json state = {{"num_parties", 2},
                {"local_dim", 2},
                {"terms", json::array({{{"ket", {0, 0}}, {"re", 1.0}, {"im", 0.0}}})}};
  write_file("/tmp/cli_product.json", state.dump());
  CHECK(run("verify /tmp/cli_product.json --k 1").code == 1);
  CHECK(run("verify /tmp/cli_product.json --k 1 --tolerance 0.9").code == 0);
  CHECK(shell("AMEFORGE_TOLERANCE=0.9 " + binary() +
              " verify /tmp/cli_product.json --k 1").code == 0);
  // The explicit flag wins over the environment.
  CHECK(shell("AMEFORGE_TOLERANCE=1e-30 " + binary() +
              " verify /tmp/cli_product.json --k 1 --tolerance 0.9").code == 0);
}
