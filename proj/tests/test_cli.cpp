#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs `gvdw <args>` through the shell; stderr is folded into stdout so the
// tests can grep diagnostics too.
RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + " \"" GVDW_CLI_PATH "\" " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

// First number following `key` in the gvdw key = value output.
double value_after(const std::string& text, const std::string& key) {
  const std::size_t pos = text.find(key);
  REQUIRE_MESSAGE(pos != std::string::npos, "missing `", key, "` in:\n", text);
  return std::stod(text.substr(pos + key.size()));
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "gvdw_cli_scratch";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("--version and --help exit cleanly") {
  const RunResult version = run("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.output.find("1.0.0") != std::string::npos);

  const RunResult help = run("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("eval") != std::string::npos);
  CHECK(help.output.find("reproduce") != std::string::npos);

  const RunResult eval_help = run("eval --help");
  CHECK(eval_help.exit_code == 0);
  CHECK(eval_help.output.find("--atom") != std::string::npos);
}

TEST_CASE("eval prints the frozen H/hydrodynamic value") {
  const RunResult r = run("eval --atom H --a 10");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("atom = H") != std::string::npos);
  CHECK(r.output.find("model = hydrodynamic") != std::string::npos);
  CHECK(value_after(r.output, "C3 = ") ==
        doctest::Approx(3.30510027814201e-02).epsilon(1e-6));
  CHECK(value_after(r.output, "E = ") ==
        doctest::Approx(-3.30510027814201e-02 * 4.032e-3 / 1e3).epsilon(1e-6));
}

TEST_CASE("eval reproduces the thermal Dirac headline number") {
  const RunResult r =
      run("eval --atom He* --model dirac --delta 0.1 --a 500 --temp 300");
  REQUIRE(r.exit_code == 0);
  CHECK(value_after(r.output, "C3 = ") ==
        doctest::Approx(1.83562148144313e-02).epsilon(1e-6));
  CHECK(r.output.find("T = 300 K") != std::string::npos);
}

TEST_CASE("eval converts units on request") {
  const RunResult au = run("eval --atom Na --a 20 --model dirac");
  const RunResult ev = run("eval --atom Na --a 20 --model dirac --units eV-nm");
  REQUIRE(au.exit_code == 0);
  REQUIRE(ev.exit_code == 0);
  CHECK(ev.output.find("eV nm^3") != std::string::npos);
  CHECK(value_after(ev.output, "C3 = ") ==
        doctest::Approx(value_after(au.output, "C3 = ") * 4.032e-3)
            .epsilon(1e-12));
}

TEST_CASE("bad invocations exit with 1") {
  CHECK(run("").exit_code == 1);                      // missing subcommand
  CHECK(run("frobnicate").exit_code == 1);            // unknown subcommand
  CHECK(run("eval --no-such-flag").exit_code == 1);   // unknown option
  CHECK(run("eval --atom Xe").exit_code == 1);        // unknown atom
  CHECK(run("eval --model dirac --delta 0.5").exit_code == 1);  // delta range
  CHECK(run("eval --model hydrodynamic --delta 0.1").exit_code == 1);
  CHECK(run("eval --a -4").exit_code == 1);
  CHECK(run("gapsweep --atom H").exit_code == 1);     // missing --a
  CHECK(run("sweep --format dat").exit_code == 1);    // dat needs --output

  const RunResult unknown_atom = run("eval --atom Xe");
  CHECK(unknown_atom.output.find("unknown atom 'Xe'") != std::string::npos);
  const RunResult stray_delta = run("eval --model hydrodynamic --delta 0.1");
  CHECK(stray_delta.output.find("--delta requires --model dirac") !=
        std::string::npos);
}

TEST_CASE("an exhausted quadrature budget exits with 2") {
  const RunResult r = run(
      "eval --atom H --a 10 --rel-tol 1e-15 --inner-rel-tol 1e-15 "
      "--max-subdiv 1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("did not reach") != std::string::npos);
}

TEST_CASE("sweep emits a CSV curve on stdout, deterministically") {
  const std::string args =
      "sweep --atom H --model dirac --a-min 3 --a-max 30 --n-points 4 --jobs 1";
  const RunResult a = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output.find("a_nm,c3_au,energy_eV,rel_err") != std::string::npos);
  CHECK(a.output.find("# atom=H") != std::string::npos);
  int data_rows = 0;
  std::istringstream lines(a.output);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line.find("a_nm,") != 0 &&
        std::isdigit(static_cast<unsigned char>(line[0])))
      ++data_rows;
  CHECK(data_rows == 4);

  const RunResult b = run(args);
  CHECK(a.output == b.output);  // byte-identical reruns
}

TEST_CASE("ratio defaults to the six reference separations") {
  const RunResult r = run("ratio --atom H --jobs 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("a_nm,c3_a_au,c3_b_au,ratio") != std::string::npos);
  for (const char* sep : {"\n3,", "\n5,", "\n10,", "\n20,", "\n50,", "\n100,"})
    CHECK(r.output.find(sep) != std::string::npos);
}

TEST_CASE("file outputs land in the requested format") {
  const fs::path dir = scratch_dir();

  const fs::path csv = dir / "point.csv";
  REQUIRE(run("eval --atom H --a 10 -o " + csv.string()).exit_code == 0);
  CHECK(slurp(csv).find("a_nm,c3_au,energy_eV,rel_err") != std::string::npos);

  const fs::path json = dir / "point.json";
  REQUIRE(run("eval --atom H --a 10 --format json -o " + json.string())
              .exit_code == 0);
  CHECK(slurp(json).find("\"provenance\"") != std::string::npos);
  CHECK(slurp(json).find("\"tool\": \"gvdw\"") != std::string::npos);

  const fs::path dat = dir / "curve.dat";
  REQUIRE(run("sweep --atom H --n-points 3 --a-min 5 --a-max 50 --jobs 1 "
              "--format dat -o " +
              dat.string())
              .exit_code == 0);
  const std::string text = slurp(dat);
  CHECK(text.find("# C3 [a.u.] vs a [nm]") != std::string::npos);

  const fs::path fit = dir / "fit.json";
  REQUIRE(run("fit --atom He* --jobs 1 -o " + fit.string()).exit_code == 0);
  CHECK(slurp(fit).find("\"C4_au\"") != std::string::npos);
  CHECK(slurp(fit).find("\"l_nm\"") != std::string::npos);
}

TEST_CASE("config files feed subcommand options") {
  const fs::path cfg = scratch_dir() / "gvdw.ini";
  std::ofstream(cfg) << "[eval]\natom=Na\na=7\nmodel=dirac\n";
  const RunResult r = run("--config " + cfg.string() + " eval");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("atom = Na") != std::string::npos);
  CHECK(r.output.find("a = 7 nm") != std::string::npos);
  CHECK(r.output.find("model = dirac") != std::string::npos);
}

TEST_CASE("GVDW_ATOMS extends the catalog through the environment") {
  const fs::path atoms = scratch_dir() / "atoms.txt";
  std::ofstream(atoms) << "Zz 10.0 5.0\n";
  const RunResult r =
      run("eval --atom Zz --a 10", "GVDW_ATOMS=" + atoms.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("atom = Zz") != std::string::npos);
  // same file via the flag
  const RunResult f =
      run("eval --atom Zz --a 10 --atoms-file " + atoms.string());
  CHECK(f.exit_code == 0);
  CHECK(value_after(f.output, "C3 = ") ==
        doctest::Approx(value_after(r.output, "C3 = ")).epsilon(1e-15));
}

TEST_CASE("fit prints the potential and its quality") {
  const RunResult r = run("fit --atom He* --jobs 1");
  REQUIRE(r.exit_code == 0);
  const double c4 = value_after(r.output, "C4 = ");
  const double l = value_after(r.output, "l = ");
  CHECK(c4 > 0.0);
  CHECK(l > 0.0);
  CHECK(r.output.find("max_deviation") != std::string::npos);
  CHECK(r.output.find("sub-1% window") != std::string::npos);
}

TEST_CASE("gapsweep reports spread and plateau") {
  const RunResult r = run("gapsweep --atom H --a 50 --jobs 1");
  REQUIRE(r.exit_code == 0);
  const double spread = value_after(r.output, "spread = ");
  CHECK(spread > 0.0);
  CHECK(r.output.find("plateau_delta = ") != std::string::npos);
}

TEST_CASE("reproduce writes a complete, byte-stable artifact bundle") {
  const fs::path d1 = scratch_dir() / "rep1";
  const fs::path d2 = scratch_dir() / "rep2";
  const RunResult r1 = run("reproduce --jobs 1 -o " + d1.string());
  const RunResult r2 = run("reproduce --jobs 1 -o " + d2.string());
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  CHECK(r1.output.find("overall:") != std::string::npos);

  for (const char* name :
       {"summary.txt", "fig1a_H_hydrodynamic.dat", "fig1a_H_dirac_delta0.1.dat",
        "fig1a_H_dirac_delta1e-15.dat", "fig2_H2_hydrodynamic.dat",
        "fig3_He_star_dirac_delta0.1.dat", "fig4_Na_hydrodynamic.dat",
        "fig1b_H_a5nm.dat", "ratio_H.csv", "ratio_He_star.csv",
        "thermal_He_star.json", "fit_He_star_hydrodynamic.json",
        "fit_Na_dirac_delta0.1.json", "gap_H_a5nm.csv", "gap_Na_a100nm.csv"})
    CHECK_MESSAGE(fs::exists(d1 / name), "missing artifact ", name);

  // every artifact byte-identical between the two runs
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(d1)) {
    const fs::path other = d2 / entry.path().filename();
    REQUIRE_MESSAGE(fs::exists(other), "second run missing ",
                    entry.path().filename().string());
    CHECK_MESSAGE(slurp(entry.path()) == slurp(other),
                  entry.path().filename().string(), " differs between runs");
    ++compared;
  }
  CHECK(compared >= 36);
}
