// test_cli_exec.cpp — end-to-end tests of the command-line binary: exit
// codes, CSV layout, numeric spot checks, determinism, config round trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the built binary with `args` through the shell; BIRQI_TOL leaks from
// the test environment are scrubbed unless the caller sets one explicitly.
RunResult run(const std::string& args, const std::string& env = "") {
  unsetenv("BIRQI_TOL");
  const std::string out_path = "/tmp/birqi_cli_out.txt";
  const std::string err_path = "/tmp/birqi_cli_err.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + BIRQI_CLI_PATH +
                          " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) fields.push_back(cell);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

// The data row whose first cell is exactly `key`, split into cells.
std::vector<std::string> row_at(const std::string& csv, const std::string& key) {
  for (const std::string& line : lines_of(csv)) {
    const std::vector<std::string> f = fields_of(line);
    if (!f.empty() && f[0] == key) return f;
  }
  return {};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/birqi_cli_" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

const std::string kDecoupled = write_temp(
    "decoupled.json",
    R"({"preset": "emission", "V": [[[0,0],[0,0]]], "W": [[[0,0],[0,0]]]})");

}  // namespace

TEST_CASE("help and argument errors") {
  CHECK(run("--help").code == 0);
  CHECK(run("entanglement-curve --help").code == 0);
  CHECK(run("").code == 2);                 // a subcommand is required
  CHECK(run("frobnicate").code == 2);       // unknown subcommand
  CHECK(run("entanglement-curve --initial e1e0 --frobnicate").code == 2);

  const RunResult bad = run("entanglement-curve --config banana --initial e1e0");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("emission") != std::string::npos);  // presets are listed

  // --initial is required for the curve command
  CHECK(run("entanglement-curve --config emission").code == 2);
  // gibbs needs a temperature
  CHECK(run("entanglement-curve --initial e1e0 --ancilla gibbs").code == 2);
  CHECK(run("thermal --config chain1 --beta -2").code == 2);
}

TEST_CASE("entanglement curve output") {
  const RunResult r = run("entanglement-curve --config emission --initial e1e0"
                          " --t-max 10 --dt 0.05");
  REQUIRE(r.code == 0);
  const std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 202);  // header + 201 grid points
  CHECK(lines[0] == "t,concurrence,eof,pop_00,pop_01,pop_10,pop_11,x_residual");
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(r.out.back() == '\n');

  SUBCASE("the t = 1 row matches the closed form to high precision") {
    const std::vector<std::string> row = row_at(r.out, "1");
    REQUIRE(row.size() == 8);
    const double e = std::exp(-1.0);
    CHECK(std::abs(std::stod(row[1]) - 2.0 * e) < 1e-8);          // concurrence
    CHECK(std::abs(std::stod(row[2]) - 0.6375964989348992) < 1e-8);  // eof
    CHECK(std::abs(std::stod(row[3]) - (1.0 - 2.0 * e)) < 1e-10);
    CHECK(std::abs(std::stod(row[4]) - e) < 1e-10);
    CHECK(std::abs(std::stod(row[5]) - e) < 1e-10);
    CHECK(std::abs(std::stod(row[6]) - 0.0) < 1e-12);
    CHECK(std::stod(row[7]) < 1e-12);  // stays an X state
  }

  SUBCASE("separable initial states stay at concurrence zero") {
    for (const std::string& initial : {"e0e0", "e0e1"}) {
      const RunResult sep = run("entanglement-curve --config emission"
                                " --initial " + initial +
                                " --t-max 5 --dt 0.5");
      REQUIRE(sep.code == 0);
      const std::vector<std::string> body = lines_of(sep.out);
      for (size_t k = 1; k < body.size(); ++k) {
        const std::vector<std::string> f = fields_of(body[k]);
        REQUIRE(f.size() == 8);
        CHECK(std::stod(f[1]) == 0.0);
        CHECK(std::stod(f[2]) == 0.0);
      }
    }
  }

  SUBCASE("byte-identical across runs, and --out mirrors stdout") {
    const RunResult again = run("entanglement-curve --config emission"
                                " --initial e1e0 --t-max 10 --dt 0.05");
    CHECK(again.out == r.out);
    const std::string path = "/tmp/birqi_cli_curve.csv";
    const RunResult to_file = run("entanglement-curve --config emission"
                                  " --initial e1e0 --t-max 10 --dt 0.05"
                                  " --out " + path);
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(path) == r.out);
  }

  SUBCASE("a Gibbs ancilla changes the curve but not the format") {
    const RunResult g = run("entanglement-curve --config emission"
                            " --initial e1e0 --t-max 2 --dt 0.5"
                            " --ancilla gibbs --beta 1");
    REQUIRE(g.code == 0);
    CHECK(lines_of(g.out)[0] ==
          "t,concurrence,eof,pop_00,pop_01,pop_10,pop_11,x_residual");
  }
}

TEST_CASE("validation tolerance trips mid-run") {
  const std::string cmd = "entanglement-curve --config emission"
                          " --initial e1e0 --t-max 10 --dt 0.05";
  const RunResult strict = run(cmd, "BIRQI_TOL=1e-30");
  CHECK(strict.code == 3);
  CHECK(strict.err.find("density defect") != std::string::npos);
  CHECK(run(cmd, "BIRQI_TOL=1e-6").code == 0);
}

TEST_CASE("discrete-to-continuous convergence table") {
  const RunResult r = run("convergence --config emission --initial e1e1"
                          " --t-max 1");
  REQUIRE(r.code == 0);
  const std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "h,steps,trace_distance,observed_order");

  const std::vector<std::string> first = fields_of(lines[1]);
  REQUIRE(first.size() == 4);
  CHECK(first[0] == "0.1");
  CHECK(first[1] == "10");
  CHECK(first[3].empty());  // nothing to compare the first row against

  double prev_d = std::stod(first[2]);
  const std::vector<int> steps = {20, 40, 80};
  for (int k = 2; k <= 4; ++k) {
    const std::vector<std::string> f = fields_of(lines[k]);
    REQUIRE(f.size() == 4);
    CHECK(std::stoi(f[1]) == steps[k - 2]);
    const double d = std::stod(f[2]);
    CHECK(d < prev_d);
    prev_d = d;
    const double order = std::stod(f[3]);
    CHECK(order > 0.8);
    CHECK(order < 1.3);
  }

  SUBCASE("explicit h list and thermal ancilla") {
    const RunResult g = run("convergence --config emission --initial e1e1"
                            " --t-max 1 --h 0.2,0.1,0.05"
                            " --ancilla gibbs --beta 1");
    REQUIRE(g.code == 0);
    CHECK(lines_of(g.out).size() == 4);
    CHECK(run("convergence --initial e1e1 --h 0.1,0.2").code == 2);  // not decreasing
  }

  SUBCASE("a decoupled model evolves exactly at any step size") {
    const RunResult d = run("convergence --config " + kDecoupled +
                            " --initial e1e1 --t-max 1");
    REQUIRE(d.code == 0);
    const std::vector<std::string> body = lines_of(d.out);
    for (size_t k = 1; k < body.size(); ++k)
      CHECK(std::stod(fields_of(body[k])[2]) < 1e-10);
  }
}

TEST_CASE("effective Hamiltonian output") {
  const RunResult text = run("effective-hamiltonian --config emission");
  REQUIRE(text.code == 0);
  CHECK(text.out.find("H_eff (4 x 4):") != std::string::npos);
  CHECK(text.out.find("interaction (4 x 4):") != std::string::npos);

  const RunResult j = run("effective-hamiltonian --config emission --json");
  REQUIRE(j.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["dim_A"] == 2);
  CHECK(doc["ancilla"] == "ground");
  CHECK(doc["H_eff"][2][1][0].get<double>() == 0.0);
  CHECK(doc["H_eff"][2][1][1].get<double>() == 0.5);
  CHECK(doc["H_eff"][1][2][1].get<double>() == -0.5);
  CHECK(doc["H_eff"][0][0][0].get<double>() == 2.0);
  CHECK(doc["interaction"][0][0][0].get<double>() == 0.0);

  // a temperature switches the implied ancilla from ground to Gibbs
  const RunResult g = run("effective-hamiltonian --config emission --json"
                          " --beta 1");
  REQUIRE(g.code == 0);
  const nlohmann::json gd = nlohmann::json::parse(g.out);
  const double half_tanh = std::tanh(1.0) / 2;
  CHECK(std::abs(gd["interaction"][1][2][1].get<double>() - half_tanh) < 1e-12);
  CHECK(std::abs(gd["interaction"][2][1][1].get<double>() + half_tanh) < 1e-12);
  CHECK(gd["beta"].get<double>() == 1.0);
}

TEST_CASE("thermal return-to-equilibrium command") {
  const RunResult r = run("thermal --config chain1 --beta 1 --t-max 40 --dt 0.5");
  REQUIRE(r.code == 0);
  const std::vector<std::string> lines = lines_of(r.out);
  CHECK(lines[0] == "t,trace_distance_to_gibbs");

  const std::string& verdict = lines.back();
  CHECK(verdict.rfind("verdict: criterion satisfied; invariant residual ", 0)
        == 0);
  CHECK(verdict.find("; spectral gap 0.455994") != std::string::npos);
  CHECK(verdict.find("; fitted rate ") != std::string::npos);
  CHECK(verdict.find("n/a") == std::string::npos);

  // the distance column decays below the acceptance threshold
  const std::vector<std::string> last_row = fields_of(lines[lines.size() - 2]);
  REQUIRE(last_row.size() == 2);
  CHECK(std::stod(last_row[1]) < 1e-6);

  SUBCASE("verdict goes to stdout even when the CSV goes to a file") {
    const std::string path = "/tmp/birqi_cli_thermal.csv";
    const RunResult f = run("thermal --config chain1 --beta 1 --t-max 40"
                            " --dt 0.5 --out " + path);
    REQUIRE(f.code == 0);
    CHECK(f.out.rfind("verdict: criterion satisfied", 0) == 0);
    CHECK(slurp(path).rfind("t,trace_distance_to_gibbs", 0) == 0);
    CHECK(slurp(path).find("verdict") == std::string::npos);
  }

  SUBCASE("no coupling is reported as such") {
    const RunResult d = run("thermal --config " + kDecoupled +
                            " --beta 1 --t-max 2 --dt 1");
    REQUIRE(d.code == 0);
    CHECK(d.out.find("verdict: criterion inconclusive (no dissipation)") !=
          std::string::npos);
    CHECK(d.out.find("fitted rate n/a") != std::string::npos);
  }
}

TEST_CASE("emit-config round trip") {
  const RunResult r = run("entanglement-curve --config chain2 --emit-config");
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["dim_A"] == 3);
  CHECK(doc["lambda"].size() == 3);

  const std::string path = write_temp("emitted.json", r.out);
  const RunResult again = run("thermal --config " + path +
                              " --beta 1 --emit-config");
  REQUIRE(again.code == 0);
  CHECK(nlohmann::json::parse(again.out) == doc);

  // the emitted config is directly usable
  CHECK(run("thermal --config " + path + " --beta 0.5 --t-max 1 --dt 0.5")
            .code == 0);
}
