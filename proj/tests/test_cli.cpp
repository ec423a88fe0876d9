#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(DOMAINKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
    result.output += buffer.data();
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("order answers with documented exit codes") {
  const auto bot = write_temp("dk_bot.json", R"({"kind":"classical","p":[[1,3],[1,3],[1,3]]})");
  const auto e1 = write_temp("dk_e1.json", R"({"kind":"classical","p":[1.0,0.0,0.0]})");

  const RunResult yes = run_cli("order --a " + bot.string() + " --b " + e1.string());
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.rfind("true", 0) == 0);

  const RunResult no = run_cli("order --a " + e1.string() + " --b " + bot.string());
  CHECK(no.exit_code == 1);
  CHECK(no.output.rfind("false", 0) == 0);

  const RunResult explained =
      run_cli("order --a " + bot.string() + " --b " + e1.string() + " --explain");
  CHECK(explained.exit_code == 0);
  CHECK(explained.output.find("arrangement:") != std::string::npos);

  const auto broken = write_temp("dk_broken.json", R"({"kind":"classical","p":[0.5,0.6]})");
  CHECK(run_cli("order --a " + broken.string() + " --b " + e1.string()).exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("order --a missing.json --b also-missing.json").exit_code == 2);
}

TEST_CASE("density documents compare through the spectral order") {
  const auto lo = write_temp(
      "dk_rho.json", R"({"kind":"density","re":[[0.3333333333333333,0],[0,0.6666666666666667]],"im":[[0,0],[0,0]]})");
  const auto hi =
      write_temp("dk_sigma.json", R"({"kind":"density","re":[[0.25,0],[0,0.75]],"im":[[0,0],[0,0]]})");
  const RunResult yes = run_cli("order --a " + lo.string() + " --b " + hi.string() + " --explain");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("true") != std::string::npos);
  CHECK(run_cli("order --a " + hi.string() + " --b " + lo.string()).exit_code == 1);
}

TEST_CASE("interval documents compare by reverse inclusion") {
  const auto wide = write_temp("dk_wide.json", R"({"kind":"interval","lo":0,"hi":2})");
  const auto tight = write_temp("dk_tight.json", R"({"kind":"interval","lo":0.5,"hi":1})");
  CHECK(run_cli("order --a " + wide.string() + " --b " + tight.string()).exit_code == 0);
  CHECK(run_cli("order --a " + tight.string() + " --b " + wide.string()).exit_code == 1);
  // Mixed kinds are a usage error.
  const auto e1 = write_temp("dk_e1b.json", R"({"kind":"classical","p":[1.0,0.0]})");
  CHECK(run_cli("order --a " + wide.string() + " --b " + e1.string()).exit_code == 2);
}

TEST_CASE("entropy command") {
  const auto bot = write_temp("dk_bot3.json", R"({"kind":"classical","p":[[1,3],[1,3],[1,3]]})");
  const RunResult r = run_cli("entropy --in " + bot.string());
  CHECK(r.exit_code == 0);
  CHECK(std::abs(std::stod(r.output) - std::log(3.0)) <= 1e-9);

  const RunResult bits = run_cli("entropy --in " + bot.string() + " --base 2");
  CHECK(std::abs(std::stod(bits.output) - std::log2(3.0)) <= 1e-9);
}

TEST_CASE("irreducibles and hasse export") {
  const RunResult json = run_cli("irreducibles --n 3 --format json");
  CHECK(json.exit_code == 0);
  std::size_t count = 0;
  for (std::size_t pos = json.output.find("\"kind\""); pos != std::string::npos;
       pos = json.output.find("\"kind\"", pos + 1)) {
    ++count;
  }
  CHECK(count == 7);

  const RunResult dot = run_cli("hasse --n 3 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("digraph") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = dot.output.find("->"); pos != std::string::npos;
       pos = dot.output.find("->", pos + 1)) {
    ++edges;
  }
  CHECK(edges == 9);

  CHECK(run_cli("hasse --n 3 --format yaml").exit_code == 2);
}

TEST_CASE("embedding, derivative and fixpoint commands") {
  const auto x = write_temp("dk_x.json", R"({"kind":"classical","p":[0.2,0.3,0.5]})");
  const RunResult embed = run_cli("embed --in " + x.string());
  CHECK(embed.exit_code == 0);
  CHECK(embed.output.find("\"kind\": \"density\"") != std::string::npos);
  const RunResult verified = run_cli("embed --in " + x.string() + " --verify");
  CHECK(verified.exit_code == 0);
  CHECK(verified.output.find("\"conserved\": true") != std::string::npos);

  const RunResult deriv = run_cli("derivative --fn square --p 2");
  CHECK(deriv.exit_code == 0);
  CHECK(std::abs(std::stod(deriv.output) - 4.0) <= 1e-4);
  CHECK(run_cli("derivative --fn unknown --p 2").exit_code == 2);

  const RunResult fix = run_cli("fixpoint --fn halfplus --lo 0 --hi 10 --steps 60");
  CHECK(fix.exit_code == 0);
  CHECK(fix.output.find("[2") != std::string::npos);
}

TEST_CASE("plot output is deterministic") {
  const auto half = write_temp("dk_half.json", R"({"kind":"classical","p":[0.5,0.5,0.0]})");
  const RunResult a = run_cli("plot-updown --in " + half.string() + " --grid 16");
  const RunResult b = run_cli("plot-updown --in " + half.string() + " --grid 16");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("<svg", 0) == 0);
  CHECK(run_cli("plot-updown --in " + half.string() + " --grid 4000").exit_code == 2);
}

TEST_CASE("check runner reports machine-readable results") {
  const RunResult r = run_cli("check --samples 25 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"all_passed\": true") != std::string::npos);
  const RunResult again = run_cli("check --samples 25 --seed 7");
  CHECK(r.output == again.output);  // identical argv and seed, identical bytes

  const RunResult one_suite = run_cli("check --samples 25 --suite kernel");
  CHECK(one_suite.exit_code == 0);
  CHECK(one_suite.output.find("\"suite\": \"kernel\"") != std::string::npos);
  CHECK(run_cli("check --suite nonsense").exit_code == 2);
}
