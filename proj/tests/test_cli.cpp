// End-to-end checks of the sgesim binary: exit codes, CSV/JSON shape,
// config files and the serialize/deserialize round trip.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kBinary = SGESIM_BINARY;

struct RunResult {
  int exit_code;
  std::string out_text;
  std::string err_text;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "sgesim_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out = work_dir() / "stdout.txt";
  const fs::path err = work_dir() / "stderr.txt";
  const std::string cmd =
      kBinary + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out_text = slurp(out);
  r.err_text = slurp(err);
  return r;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream is(text);
  std::string line;
  REQUIRE(std::getline(is, line));
  std::istringstream hs(line);
  std::string tok;
  while (std::getline(hs, tok, ',')) csv.header.push_back(tok);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    while (std::getline(ls, tok, ',')) row.push_back(std::stod(tok));
    csv.rows.push_back(row);
  }
  return csv;
}

std::size_t column(const Csv& csv, const std::string& name) {
  for (std::size_t i = 0; i < csv.header.size(); ++i)
    if (csv.header[i] == name) return i;
  FAIL("missing column ", name);
  return 0;
}

}  // namespace

TEST_CASE("trajectory command emits the documented csv") {
  const fs::path out = work_dir() / "traj.csv";
  const RunResult r = run("trajectory --preset R0.83 --r 1.2 --tmax 50 --out " +
                          out.string());
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  const Csv csv = parse_csv(ss.str());

  const std::vector<std::string> expect = {
      "t",     "rho11", "rho22", "rho33",    "rho44",    "rho55",    "rho66",
      "rho77", "rho88", "rho99", "re_rho37", "im_rho37", "re_rho68", "im_rho68",
      "negativity"};
  CHECK(csv.header == expect);
  REQUIRE(csv.rows.size() > 100);

  const std::size_t t_col = column(csv, "t");
  const std::size_t n_col = column(csv, "negativity");
  CHECK(csv.rows.front()[t_col] == 0.0);
  CHECK(csv.rows.front()[n_col] == 0.0);  // |e mu> start is separable
  double peak = 0.0;
  for (const auto& row : csv.rows) peak = std::max(peak, row[n_col]);
  CHECK(peak > 1e-3);                      // transient entanglement appears
  CHECK(peak <= 1.0);
  CHECK(csv.rows.back()[n_col] < 1e-4);    // and has decayed by ten relaxation times
  CHECK(csv.rows.back()[t_col] == doctest::Approx(50.0).epsilon(1e-9));
}

TEST_CASE("pumped trajectories integrate and conserve the trace") {
  const RunResult r =
      run("trajectory --preset R0.83 --r 1.2 --Lambda 0.08 --tmax 2");
  REQUIRE(r.exit_code == 0);
  const Csv csv = parse_csv(r.out_text);
  double trace = 0.0;
  for (int i = 0; i < 9; ++i) trace += csv.rows.back()[column(csv, "rho11") + i];
  CHECK(trace == doctest::Approx(1.0).epsilon(1e-9));
  // pumping populates the doubly excited states, unlike the free decay
  CHECK(csv.rows.back()[column(csv, "rho11")] > 0.0);
}

TEST_CASE("unpumped steady state is the ground state") {
  const RunResult r = run("steady --Gamma 0.96 --r 1.2 --Lambda 0");
  REQUIRE(r.exit_code == 0);
  const Csv csv = parse_csv(r.out_text);
  REQUIRE(csv.rows.size() == 1);
  CHECK(csv.rows[0][column(csv, "rho99")] == 1.0);
  CHECK(csv.rows[0][column(csv, "negativity")] == 0.0);
}

TEST_CASE("optimum command brackets the best pump rate") {
  const RunResult r = run("optimum --Gamma 0.96 --r 1.2 --bracket 0.005 0.5");
  REQUIRE(r.exit_code == 0);
  const Csv csv = parse_csv(r.out_text);
  REQUIRE(csv.rows.size() == 1);
  const double lambda_star = csv.rows[0][column(csv, "lambda_star")];
  CHECK(lambda_star >= 0.04);
  CHECK(lambda_star <= 0.16);
  CHECK(csv.rows[0][column(csv, "entangled")] == 1.0);
}

TEST_CASE("gamma1 rescales the time column only") {
  const RunResult a = run("trajectory --Gamma 0.9 --G 2.4 --r 1.2 --tmax 1");
  const RunResult b = run("trajectory --Gamma 0.9 --G 2.4 --r 1.2 --tmax 1 --gamma1 2");
  const Csv ca = parse_csv(a.out_text), cb = parse_csv(b.out_text);
  REQUIRE(ca.rows.size() == cb.rows.size());
  const std::size_t t_col = column(ca, "t");
  const std::size_t p_col = column(ca, "rho99");
  CHECK(cb.rows.back()[t_col] == doctest::Approx(ca.rows.back()[t_col] / 2.0));
  CHECK(cb.rows.back()[p_col] == ca.rows.back()[p_col]);
}

TEST_CASE("json output round-trips into an identical run") {
  const fs::path first = work_dir() / "sweep_a.json";
  const fs::path second = work_dir() / "sweep_b.json";
  REQUIRE(run("sweep-pump --Gamma 0.96 --G 2.4 --r 1.2 --grid 0.01:0.2:0.01 "
              "--format json --out " + first.string()).exit_code == 0);
  // the emitted document serves directly as the input configuration
  REQUIRE(run("--config " + first.string() + " --out " + second.string())
              .exit_code == 0);

  std::ifstream fa(first), fb(second);
  const nlohmann::json da = nlohmann::json::parse(fa);
  const nlohmann::json db = nlohmann::json::parse(fb);
  CHECK(da["rows"] == db["rows"]);
  CHECK(da["metadata"]["config"] == db["metadata"]["config"]);
}

TEST_CASE("flat config files work and flags override them") {
  const fs::path cfg = work_dir() / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "# pumped steady state\n"
        << "command = steady\n"
        << "Gamma = 0.9\n"
        << "G = 2.4\n"
        << "r = 1.0\n"
        << "Lambda = 0.08\n"
        << "format = json\n";
  }
  const RunResult base = run("--config " + cfg.string());
  REQUIRE(base.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(base.out_text);
  CHECK(doc["metadata"]["config"]["r"].get<std::string>().substr(0, 1) == "1");

  const RunResult overridden = run("steady --config " + cfg.string() + " --r 1.2");
  REQUIRE(overridden.exit_code == 0);
  const nlohmann::json doc2 = nlohmann::json::parse(overridden.out_text);
  CHECK(doc2["metadata"]["config"]["r"].get<std::string>().substr(0, 3) == "1.2");
}

TEST_CASE("invalid flags produce a nonzero exit") {
  CHECK(run("trajectory --no-such-flag 1").exit_code != 0);
  CHECK(run("steady --format yaml").exit_code != 0);
}

TEST_CASE("errors carry a machine-readable record") {
  const RunResult r = run("steady --preset R9.99 --r 1.2 --Lambda 0.1");
  CHECK(r.exit_code == 1);
  const nlohmann::json err = nlohmann::json::parse(r.err_text);
  CHECK(err.contains("error"));
  CHECK(err["message"].get<std::string>().find("R9.99") != std::string::npos);
}

TEST_CASE("preset and explicit couplings are mutually exclusive") {
  const RunResult r = run("steady --preset R0.83 --Gamma 0.9 --r 1.2 --Lambda 0.1");
  CHECK(r.exit_code == 1);
  CHECK(r.err_text.find("mutually exclusive") != std::string::npos);
}

TEST_CASE("sweep-distance orders the presets by entanglement") {
  const RunResult r = run("sweep-distance --Lambda 0.08 --r 1.2");
  REQUIRE(r.exit_code == 0);
  const Csv csv = parse_csv(r.out_text);
  REQUIRE(csv.rows.size() == 4);
  const std::size_t n_col = column(csv, "negativity");
  CHECK(csv.rows[0][n_col] > csv.rows[1][n_col]);
  CHECK(csv.rows[1][n_col] > csv.rows[2][n_col]);
  CHECK(csv.rows[2][n_col] > csv.rows[3][n_col]);
}

TEST_CASE("validate runs the invariant suite") {
  const RunResult r = run("validate");
  CHECK(r.exit_code == 0);
  CHECK(r.out_text.find("PASS") != std::string::npos);
  CHECK(r.out_text.find("FAIL") == std::string::npos);
}

TEST_CASE("validate emits a machine-readable report on request") {
  const RunResult r = run("validate --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out_text);
  REQUIRE(doc.contains("checks"));
  CHECK(doc["checks"].size() >= 7);
  for (const auto& c : doc["checks"]) {
    CHECK(c["pass"].get<bool>());
    CHECK(c.contains("metric"));
  }
}
