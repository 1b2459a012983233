#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "spinchain/dynamics.hpp"
#include "spinchain/experiments.hpp"
#include "spinchain/util.hpp"

using namespace spinchain;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("spinchain_test_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("toml subset parsing") {
  const std::string toml = R"(
# comment
experiment = "coeffs"   # trailing comment
dt = 0.25
horizon = 2.0
seed = 42
flag = true

[spec.uniform]
N = 1
J = 1.0
J0 = 1.0
h = 0.0
h0 = 0.0
)";
  const auto cfg = parse_config_text(toml, "toml");
  CHECK(cfg.experiment == "coeffs");
  CHECK(cfg.dt == 0.25);
  CHECK(cfg.horizon == 2.0);
  CHECK(cfg.seed == 42);
  CHECK(cfg.spec.is_uniform(1.0, 1.0, 0.0, 0.0));
}

TEST_CASE("toml arrays, dotted keys and json equivalence") {
  const std::string toml = R"(
experiment = "measure-sweep"
h_values = [0.0, 0.5,
            1.0]
j0_values = [1.0]
spec.uniform.N = 10
spec.uniform.J = 1.0
spec.uniform.J0 = 1.0
spec.uniform.h = 0.0
spec.uniform.h0 = 0.0
)";
  const auto cfg = parse_config_text(toml, "toml");
  CHECK(cfg.h_values == std::vector<double>{0.0, 0.5, 1.0});

  const std::string json = R"({
    "experiment": "measure-sweep",
    "h_values": [0.0, 0.5, 1.0],
    "j0_values": [1.0],
    "spec": {"uniform": {"N": 10, "J": 1.0, "J0": 1.0, "h": 0.0, "h0": 0.0}}
  })";
  const auto jcfg = parse_config_text(json, "auto");
  CHECK(jcfg.h_values == cfg.h_values);
  CHECK(jcfg.spec.n_sites == cfg.spec.n_sites);
}

TEST_CASE("config validation failures") {
  CHECK_THROWS(parse_config_text("dt = 0.1\n", "toml"));  // no experiment
  CHECK_THROWS(parse_config_text(
      "experiment = \"nope\"\nspec.uniform.N = 4\nspec.uniform.J = 1.0\n"
      "spec.uniform.J0 = 1.0\nspec.uniform.h = 0.0\nspec.uniform.h0 = 0.0\n",
      "toml"));
  // randomized experiment without a seed
  CHECK_THROWS(parse_config_text(
      "experiment = \"fixed-point\"\nspec.uniform.N = 4\nspec.uniform.J = 1.0\n"
      "spec.uniform.J0 = 1.0\nspec.uniform.h = 0.0\nspec.uniform.h0 = 0.0\n",
      "toml"));
  CHECK_THROWS(parse_config_text("experiment = \"coeffs\"\nbad line\n", "toml"));
}

TEST_CASE("coeffs experiment: two-site chain gives a cosine column") {
  TempDir tmp("coeffs");
  ExperimentConfig cfg;
  cfg.experiment = "coeffs";
  cfg.spec = ChainSpec::uniform(1, 1.0, 1.0, 0.0, 0.0);
  cfg.dt = 0.5;
  cfg.horizon = 2.0;
  cfg.out_dir = tmp.path.string();
  const auto files = run_experiment(cfg);
  REQUIRE(files.size() == 1);
  std::ifstream in(files[0]);
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "t,pi0,delta0,f,d_pi0,d_delta0,norm_x_deficit");
  int rows = 0;
  while (std::getline(in, line)) {
    const double t = std::stod(line);
    const double pi0 = std::stod(line.substr(line.find(',') + 1));
    CHECK(pi0 == doctest::Approx(std::cos(t)).epsilon(1e-12));
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("experiments are byte-deterministic") {
  for (const std::string exp : {"measure-sweep", "fixed-point"}) {
    TempDir a("det_a_" + exp), b("det_b_" + exp);
    ExperimentConfig cfg;
    cfg.experiment = exp;
    cfg.spec = ChainSpec::uniform(20, 1.0, 1.0, 0.5, 0.0);
    cfg.h_values = {0.0, 0.5};
    cfg.j0_values = {1.0};
    cfg.horizon = 10.0;
    cfg.dt = 0.1;
    cfg.seed = 7;
    cfg.seed_set = true;
    cfg.n_states = 40;
    cfg.threads = 3;
    cfg.out_dir = a.path.string();
    const auto fa = run_experiment(cfg);
    cfg.out_dir = b.path.string();
    cfg.threads = 1;  // thread count must not change the bytes
    const auto fb = run_experiment(cfg);
    REQUIRE(fa.size() == fb.size());
    for (std::size_t i = 0; i < fa.size(); ++i)
      CHECK(read_text_file(fa[i]) == read_text_file(fb[i]));
  }
}

TEST_CASE("figure presets cover figures 1 through 8") {
  for (const std::string name :
       {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"}) {
    const auto cfg = figure_preset(name);
    CHECK(!cfg.experiment.empty());
    CHECK(cfg.seed_set);
  }
  CHECK_THROWS(figure_preset("fig9"));
  // protocol spot checks
  CHECK(figure_preset("fig1").spec.n_sites == 100);
  CHECK(figure_preset("fig2").spec.n_sites == 200);
  CHECK(figure_preset("fig7").n_states == 500);
  CHECK(figure_preset("fig8").dt == 0.2);
  CHECK(figure_preset("fig8").horizon == 100.0);
}

TEST_CASE("spec round trips through TOML") {
  const auto spec = spec_from_toml_text(R"(
n_sites = 3
jx = [1.0, 0.8, 0.6]
jy = [1.0, 0.8, 0.6]
fields = [0.0, 0.5, 0.5, 0.5]
)");
  CHECK(spec.n_sites == 3);
  CHECK(spec.jx == std::vector<double>{1.0, 0.8, 0.6});
  CHECK(spec.fields[0] == 0.0);
  const auto uniform = spec_from_toml_text(
      "uniform.N = 4\nuniform.J = 1.0\nuniform.J0 = 1.2\n"
      "uniform.h = 0.3\nuniform.h0 = 0.0\n");
  CHECK(uniform.is_uniform(1.0, 1.2, 0.3, 0.0));
}

TEST_CASE("correlator and trajectory debug dumps") {
  TempDir tmp("dumps");
  const auto corr = correlators(5, 0.0);
  const auto files = dump_correlators(corr, tmp.path.string());
  REQUIRE(files.size() == 2);
  CHECK(read_text_file(files[0]).rfind("site,sigma_z", 0) == 0);
  CHECK(read_text_file(files[1]).rfind("n,m,g_nm", 0) == 0);

  const auto spec = ChainSpec::uniform(5, 1.0, 1.0, 0.0, 0.0);
  CoefficientEvaluator eval(spec);
  const std::string traj = dump_trajectory(
      plus_state(), eval, corr, {0.0, 0.5, 1.0},
      (tmp.path / "traj.csv").string());
  const std::string text = read_text_file(traj);
  CHECK(text.rfind("t,rho00,re_rho01,im_rho01,rx,ry,rz", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}

TEST_CASE("non-XX specs are rejected by the XX-only experiments") {
  TempDir tmp("xy");
  ExperimentConfig cfg;
  cfg.experiment = "flux";
  cfg.spec = ChainSpec::uniform(6, 1.0, 1.0, 0.0, 0.0);
  cfg.spec.jy[2] = 0.5;
  cfg.horizon = 2.0;
  cfg.out_dir = tmp.path.string();
  CHECK_THROWS_AS(run_experiment(cfg), std::runtime_error);
  cfg.experiment = "coeffs";  // the raw coefficients handle XY
  CHECK_NOTHROW(run_experiment(cfg));
}

TEST_CASE("spectrum experiment writes the classification table") {
  TempDir tmp("spec");
  ExperimentConfig cfg;
  cfg.experiment = "spectrum";
  cfg.spec = ChainSpec::uniform(120, 1.0, 1.0, 0.0, 0.0);
  cfg.h_values = {0.0, 0.9};
  cfg.j0_values = {1.0};
  cfg.out_dir = tmp.path.string();
  const auto files = run_experiment(cfg);
  const std::string text = read_text_file(files[0]);
  CHECK(text.find("h,j0,analytic,numeric,boundary") == 0);
  CHECK(text.find("0.9") != std::string::npos);
}
