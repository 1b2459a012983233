#include "spinchain/experiments.hpp"

#include <cmath>
#include <filesystem>

#include "spinchain/channels.hpp"
#include "spinchain/ed_oracle.hpp"
#include "spinchain/nonmarkov.hpp"
#include "spinchain/spectral.hpp"
#include "spinchain/util.hpp"

namespace spinchain {

namespace {

namespace fs = std::filesystem;

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

double default_horizon(const ExperimentConfig& cfg) {
  if (cfg.horizon > 0) return cfg.horizon;
  return 2.0 * cfg.spec.n_sites / 3.0;
}

std::string htag(double h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", h);
  return buf;
}

ChainSpec with_h(const ChainSpec& base, double h) {
  ChainSpec s = base;
  for (std::size_t i = 1; i < s.fields.size(); ++i) s.fields[i] = h;
  return s;
}

std::vector<double> sweep_fields(const ExperimentConfig& cfg) {
  if (!cfg.h_values.empty()) return cfg.h_values;
  return {cfg.spec.fields.back()};
}

// --- experiment bodies ------------------------------------------------------

std::vector<std::string> run_coeffs(const ExperimentConfig& cfg) {
  const auto decomp = build_adjacency(cfg.spec);
  const auto set = coefficients(decomp, time_grid(default_horizon(cfg), cfg.dt));
  const std::string path = join(cfg.out_dir, "coefficients.csv");
  CsvWriter csv(path,
                "t,pi0,delta0,f,d_pi0,d_delta0,norm_x_deficit");
  const int nt = static_cast<int>(set.times.size());
  for (int k = 0; k < nt; ++k) {
    const double p0 = set.pi_x(0, k), d0 = set.delta_x(0, k);
    const double norm = set.pi_x.col(k).squaredNorm() + set.delta_x.col(k).squaredNorm();
    csv.row({set.times(k), p0, d0, p0 * p0 + d0 * d0, set.d_pi_x(0, k),
             set.d_delta_x(0, k), 1.0 - norm});
  }
  return {path};
}

std::vector<std::string> run_measure_sweep(const ExperimentConfig& cfg) {
  const double horizon = default_horizon(cfg);
  std::vector<double> j0s = cfg.j0_values;
  if (j0s.empty()) j0s = {cfg.spec.jx.front()};
  const auto rows = sweep_measure(cfg.spec.n_sites, cfg.spec.fields.front(),
                                  sweep_fields(cfg), j0s, horizon, cfg.threads,
                                  cfg.dt);
  const std::string path = join(cfg.out_dir, "measure_sweep.csv");
  CsvWriter csv(path, "h_over_J,j0_over_J,measure,diverging,horizon");
  for (const auto& r : rows)
    csv.raw_row(CsvWriter::format(r.h_over_j) + "," +
                CsvWriter::format(r.j0_over_j) + "," +
                CsvWriter::format(r.measure) + "," +
                (r.diverging ? "1" : "0") + "," + CsvWriter::format(r.horizon));
  return {path};
}

std::vector<std::string> run_flux(const ExperimentConfig& cfg) {
  const double horizon = default_horizon(cfg);
  std::vector<std::string> files;
  for (double h : sweep_fields(cfg)) {
    const ChainSpec spec = with_h(cfg.spec, h);
    CoefficientEvaluator eval(spec);
    const FluxProfile prof =
        flux(eval, plus_state(), minus_state(), horizon, cfg.dt);
    const std::string path = join(cfg.out_dir, "flux_h" + htag(h) + ".csv");
    CsvWriter csv(path, "t,trace_distance,sigma");
    for (std::size_t i = 0; i < prof.times.size(); ++i)
      csv.row({prof.times[i], prof.d_values[i], prof.sigma[i]});
    const std::string wpath =
        join(cfg.out_dir, "flux_windows_h" + htag(h) + ".csv");
    CsvWriter wcsv(wpath, "a,b,d_a,d_b,increment");
    for (const auto& w : prof.windows)
      wcsv.row({w.a, w.b, w.d_a, w.d_b, w.increment()});
    files.push_back(path);
    files.push_back(wpath);
  }
  return files;
}

std::vector<std::string> run_divisibility(const ExperimentConfig& cfg) {
  const double tmax = cfg.t_max2 > 0 ? cfg.t_max2 : 30.0;
  std::vector<std::string> files;
  for (double h : sweep_fields(cfg)) {
    const ChainSpec spec = with_h(cfg.spec, h);
    CoefficientEvaluator eval(spec);
    const auto corr = correlators(spec.n_sites,
                                  spec.fields.back() / spec.jx.back());
    const auto ts = time_grid(2.0 * tmax, cfg.dt);
    std::vector<MapSnapshot> snaps(ts.size());
    parallel_for(ts.size(), cfg.threads, [&](std::size_t i) {
      snaps[i] = snapshot_at(eval, corr, ts[i]);
    });
    const std::string path =
        join(cfg.out_dir, "divisibility_h" + htag(h) + ".csv");
    CsvWriter csv(path, "t,t1,C,choi_min_eigenvalue");
    const std::size_t n = ts.size() / 2;
    const QubitState probe = plus_state();
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k <= n; ++k) {
        const auto im = make_intermediate(snaps[i], snaps[i + k]);
        csv.row({ts[i], ts[k], divisibility_C(im, probe),
                 choi_eigenvalues(im)[0]});
      }
    }
    files.push_back(path);
  }
  return files;
}

std::vector<std::string> run_qpt(const ExperimentConfig& cfg) {
  const double horizon = default_horizon(cfg);
  CoefficientEvaluator eval(cfg.spec);
  const auto corr = correlators(cfg.spec.n_sites,
                                cfg.spec.fields.back() / cfg.spec.jx.back());
  const auto ts = time_grid(horizon, cfg.dt);
  const int n_states = cfg.n_states > 0 ? cfg.n_states : 100;

  Rng rng(cfg.seed);
  std::vector<QubitState> probes;
  for (int i = 0; i < n_states; ++i) probes.push_back(random_pure_state(rng));

  struct Row {
    double t, min_eig, completeness, roundtrip;
    int n_kraus;
  };
  std::vector<Row> rows(ts.size());
  parallel_for(ts.size(), cfg.threads, [&](std::size_t i) {
    const MapSnapshot snap = snapshot_at(eval, corr, ts[i]);
    const ChiMatrix chi = chi_of_snapshot(snap);
    const KrausSet kraus = kraus_from_chi(chi);
    double rt = 0.0;
    for (const auto& p : probes) {
      Matrix2cd acc = Matrix2cd::Zero();
      const Matrix2cd rho = to_matrix(p);
      for (const auto& k : kraus.ops) acc += k * rho * k.adjoint();
      rt = std::max(rt, (acc - to_matrix(evolve(p, snap))).cwiseAbs().maxCoeff());
    }
    rows[i] = Row{ts[i], chi.min_eigenvalue(), kraus.completeness_error(), rt,
                  static_cast<int>(kraus.ops.size())};
  });
  const std::string path = join(cfg.out_dir, "qpt.csv");
  CsvWriter csv(path, "t,chi_min_eigenvalue,kraus_completeness_error,"
                      "roundtrip_error,n_kraus");
  for (const auto& r : rows)
    csv.raw_row(CsvWriter::format(r.t) + "," + CsvWriter::format(r.min_eig) +
                "," + CsvWriter::format(r.completeness) + "," +
                CsvWriter::format(r.roundtrip) + "," + std::to_string(r.n_kraus));
  return {path};
}

std::vector<std::string> run_spectrum(const ExperimentConfig& cfg) {
  std::vector<double> j0s = cfg.j0_values;
  if (j0s.empty()) j0s = {cfg.spec.jx.front()};
  const auto hs = sweep_fields(cfg);
  struct Row {
    double h, j0;
    int analytic, numeric;
    bool boundary;
  };
  std::vector<Row> rows(hs.size() * j0s.size());
  parallel_for(rows.size(), cfg.threads, [&](std::size_t idx) {
    const double h = hs[idx / j0s.size()];
    const double j0 = j0s[idx % j0s.size()];
    const ChainSpec spec =
        ChainSpec::uniform(cfg.spec.n_sites, 1.0, j0, h, cfg.spec.fields.front());
    const auto rep = numeric_localized_levels(spec);
    rows[idx] = Row{h, j0, rep.analytic_count, rep.numeric_count,
                    rep.boundary_flag};
  });
  const std::string path = join(cfg.out_dir, "spectrum.csv");
  CsvWriter csv(path, "h,j0,analytic,numeric,boundary");
  for (const auto& r : rows)
    csv.raw_row(CsvWriter::format(r.h) + "," + CsvWriter::format(r.j0) + "," +
                std::to_string(r.analytic) + "," + std::to_string(r.numeric) +
                "," + (r.boundary ? "1" : "0"));
  return {path};
}

std::vector<std::string> run_excitations(const ExperimentConfig& cfg) {
  std::vector<std::string> files;
  for (double h : sweep_fields(cfg)) {
    const ChainSpec spec = with_h(cfg.spec, h);
    const auto dist = excitation_distribution(spec);
    const auto exc = excitation_numbers(dist);
    const std::string path =
        join(cfg.out_dir, "excitations_h" + htag(h) + ".csv");
    CsvWriter csv(path, "energy,occupation,excitation");
    for (int i = 0; i < dist.energies.size(); ++i)
      csv.row({dist.energies(i), dist.occupations(i), exc(i)});
    files.push_back(path);
  }
  return files;
}

std::vector<std::string> run_gad_fit(const ExperimentConfig& cfg) {
  const double horizon = default_horizon(cfg);
  CoefficientEvaluator eval(cfg.spec);
  const auto corr = correlators(cfg.spec.n_sites,
                                cfg.spec.fields.back() / cfg.spec.jx.back());
  auto ts = time_grid(horizon, cfg.dt);
  ts.erase(ts.begin());  // the t = 0 channel is the identity, nothing to fit

  std::vector<GadFitResult> fits(ts.size());
  std::vector<ChiMatrix> chis(ts.size());
  parallel_for(ts.size(), cfg.threads, [&](std::size_t i) {
    chis[i] = chi_of_snapshot(snapshot_at(eval, corr, ts[i]));
  });
  // warm starts propagate along the grid, so fit serially
  const GadChannelParams* warm = nullptr;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    fits[i] = fit_gad(chis[i], cfg.seed_set ? cfg.seed : 2024, warm);
    warm = &fits[i].params;
  }
  const std::string path = join(cfg.out_dir, "gad_fit.csv");
  CsvWriter csv(path, "t,fp,mu,gamma,big_gamma");
  for (std::size_t i = 0; i < ts.size(); ++i)
    csv.row({ts[i], fits[i].fidelity, fits[i].params.mu, fits[i].params.gamma,
             fits[i].params.big_gamma});
  return {path};
}

std::vector<std::string> run_fixed_point(const ExperimentConfig& cfg) {
  const double horizon = default_horizon(cfg);
  const int n_states = cfg.n_states > 0 ? cfg.n_states : 500;
  std::vector<std::string> files;
  for (double h : sweep_fields(cfg)) {
    const ChainSpec spec = with_h(cfg.spec, h);
    CoefficientEvaluator eval(spec);
    const auto corr = correlators(spec.n_sites,
                                  spec.fields.back() / spec.jx.back());
    Rng rng(cfg.seed);
    std::vector<QubitState> inputs;
    for (int i = 0; i < n_states; ++i) inputs.push_back(random_pure_state(rng));

    // full trajectories for a small ensemble (the Bloch-spiral picture)
    if (n_states <= 20) {
      const std::string tpath =
          join(cfg.out_dir, "trajectories_h" + htag(h) + ".csv");
      CsvWriter csv(tpath, "t,state_id,rx,ry,rz");
      for (double t : time_grid(horizon, cfg.dt)) {
        const MapSnapshot snap = snapshot_at(eval, corr, t);
        for (std::size_t s = 0; s < inputs.size(); ++s) {
          const auto r = evolve(inputs[s], snap).bloch();
          csv.raw_row(CsvWriter::format(t) + "," + std::to_string(s) + "," +
                      CsvWriter::format(r[0]) + "," + CsvWriter::format(r[1]) +
                      "," + CsvWriter::format(r[2]));
        }
      }
      files.push_back(tpath);
      continue;
    }

    const MapSnapshot snap = snapshot_at(eval, corr, horizon);
    const std::string path =
        join(cfg.out_dir, "final_states_h" + htag(h) + ".csv");
    CsvWriter csv(path, "state_id,rx,ry,rz");
    double max_d = 0.0;
    std::vector<QubitState> outs;
    for (std::size_t s = 0; s < inputs.size(); ++s) {
      outs.push_back(evolve(inputs[s], snap));
      const auto r = outs.back().bloch();
      csv.raw_row(std::to_string(s) + "," + CsvWriter::format(r[0]) + "," +
                  CsvWriter::format(r[1]) + "," + CsvWriter::format(r[2]));
    }
    for (std::size_t a = 0; a < outs.size(); ++a)
      for (std::size_t b = a + 1; b < outs.size(); ++b)
        max_d = std::max(max_d, trace_distance(outs[a], outs[b]));
    double cx = 0, cy = 0, cz = 0;
    for (const auto& o : outs) {
      const auto r = o.bloch();
      cx += r[0]; cy += r[1]; cz += r[2];
    }
    const double inv = 1.0 / static_cast<double>(outs.size());
    const std::string spath =
        join(cfg.out_dir, "fixed_point_summary_h" + htag(h) + ".csv");
    CsvWriter sum(spath,
                  "t,n_states,max_pairwise_distance,centroid_rx,centroid_ry,"
                  "centroid_rz,fixed_point_rz");
    sum.row({horizon, static_cast<double>(outs.size()), max_d, cx * inv,
             cy * inv, cz * inv, snap.g / (2.0 * (1.0 - snap.f))});
    files.push_back(path);
    files.push_back(spath);
  }
  return files;
}

}  // namespace

std::vector<std::string> run_experiment(const ExperimentConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  // everything past the raw coefficients uses the XX closed forms
  if (cfg.experiment != "coeffs" && !cfg.spec.is_xx())
    throw std::runtime_error("run_experiment: '" + cfg.experiment +
                             "' needs an XX spec (jx == jy)");
  if (cfg.experiment == "coeffs") return run_coeffs(cfg);
  if (cfg.experiment == "measure-sweep") return run_measure_sweep(cfg);
  if (cfg.experiment == "flux") return run_flux(cfg);
  if (cfg.experiment == "divisibility") return run_divisibility(cfg);
  if (cfg.experiment == "qpt") return run_qpt(cfg);
  if (cfg.experiment == "spectrum") return run_spectrum(cfg);
  if (cfg.experiment == "excitations") return run_excitations(cfg);
  if (cfg.experiment == "gad-fit") return run_gad_fit(cfg);
  if (cfg.experiment == "fixed-point") return run_fixed_point(cfg);
  throw std::runtime_error("run_experiment: unknown experiment '" +
                           cfg.experiment + "'");
}

}  // namespace spinchain
