#include "owc/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <vector>

#include "owc/classical.hpp"
#include "owc/diagnostics.hpp"
#include "owc/errors.hpp"
#include "owc/format.hpp"
#include "owc/io.hpp"
#include "owc/state.hpp"
#include "owc/stepper.hpp"

namespace owc {

namespace {

long long step_count(const TimeControls& tc) {
  return std::llround(std::ceil(tc.t_end / tc.dt - 1e-9));
}

// Snapshot requests snap to the nearest time step; the file keeps the
// requested time as its label.
std::map<long long, std::vector<double>> snapshot_schedule(
    const std::vector<double>& times, double dt, long long n_steps) {
  std::map<long long, std::vector<double>> plan;
  for (double t : times) {
    long long k = std::llround(t / dt);
    k = std::clamp(k, 0LL, n_steps);
    plan[k].push_back(t);
  }
  return plan;
}

int nearest_node(const Grid& grid, double x) {
  const auto it = std::lower_bound(grid.x.begin(), grid.x.end(), x);
  if (it == grid.x.begin()) return 0;
  if (it == grid.x.end()) return static_cast<int>(grid.x.size()) - 1;
  const int hi = static_cast<int>(it - grid.x.begin());
  return (x - grid.x[hi - 1] <= grid.x[hi] - x) ? hi - 1 : hi;
}

struct Sample {
  double zeta = 0.0;
  double q = 0.0;
};

Sample sample_state(const State& s, const PhysicalConfig& cfg,
                    const Grid& grid, int node) {
  if (node <= grid.i_step) return {s.e0.zeta[node], s.e0.q[node]};
  if (node <= grid.i_wall_left) {
    return {s.e1.zeta[node - grid.i_step], s.e1.q[node - grid.i_step]};
  }
  if (node < grid.i_wall_right) return {cfg.zeta_w, s.q_i};
  return {s.e2.zeta[node - grid.i_wall_right], s.e2.q[node - grid.i_wall_right]};
}

Sample sample_classical(const ClassicalState& s, const PhysicalConfig& cfg,
                        const Grid& grid, int node) {
  if (node <= grid.i_wall_left) return {s.zeta[node], s.q[node]};
  if (node < grid.i_wall_right) return {cfg.zeta_w, s.q_i};
  return {s.zeta2[node - grid.i_wall_right], s.q2[node - grid.i_wall_right]};
}

struct Probe {
  double x = 0.0;  // requested position, reported in the gauge file
  int node = 0;
};

std::vector<Probe> make_probes(const std::vector<double>& gauges,
                               const Grid& grid) {
  std::vector<Probe> probes;
  probes.reserve(gauges.size());
  for (double x : gauges) probes.push_back({x, nearest_node(grid, x)});
  return probes;
}

// One full split-domain simulation with all owc-mode outputs. File names
// take an optional variant suffix so compare_step runs coexist in one
// directory. Returns first-crest arrival times per probe (NaN if the crest
// never arrives).
std::vector<double> run_owc_loop(const PhysicalConfig& cfg, const Grid& grid,
                                 const TimeControls& tc,
                                 const std::vector<Probe>& probes,
                                 const std::vector<double>& snapshot_times,
                                 const std::string& out_dir,
                                 const std::string& suffix,
                                 double crest_threshold, ExecPolicy policy) {
  const long long n_steps = step_count(tc);
  const auto plan = snapshot_schedule(snapshot_times, tc.dt, n_steps);
  const double arrival_level = crest_threshold * cfg.amplitude;

  CsvWriter gauges_csv(out_dir + "/gauges" + suffix + ".csv", "t,x,zeta,q");
  CsvWriter energy_csv(
      out_dir + "/energy" + suffix + ".csv",
      "t,E_fluid,e_int,f_int,flux_entry,flux_step_left,flux_step_right,q_i");

  std::vector<double> arrivals(probes.size(),
                               std::numeric_limits<double>::quiet_NaN());

  State s = initial_state(cfg, grid);
  double dpdx = 0.0;
  const auto emit = [&](long long k) {
    for (std::size_t p = 0; p < probes.size(); ++p) {
      const Sample v = sample_state(s, cfg, grid, probes[p].node);
      gauges_csv.row({s.t, probes[p].x, v.zeta, v.q});
      if (std::isnan(arrivals[p]) && v.zeta > arrival_level) {
        arrivals[p] = s.t;
      }
    }
    const EnergyReport rep = energy_audit(s, cfg, grid, dpdx);
    energy_csv.row({s.t, rep.E_fluid, rep.e_int, rep.f_int, rep.flux_entry,
                    rep.flux_step_left, rep.flux_step_right, s.q_i});
    if (const auto it = plan.find(k); it != plan.end()) {
      for (double label : it->second) {
        write_snapshot(s, cfg, grid,
                       out_dir + "/snapshot" + suffix + "_t" + gshort(label) +
                           ".csv");
      }
    }
  };

  emit(0);
  for (long long k = 1; k <= n_steps; ++k) {
    State next = advance(s, cfg, grid, tc, policy);
    dpdx = interior_pressure_gradient(s.q_i, next.q_i, tc.dt, cfg);
    s = std::move(next);
    emit(k);
  }
  return arrivals;
}

void run_classical_loop(const PhysicalConfig& cfg, const Grid& grid,
                        const TimeControls& tc,
                        const std::vector<Probe>& probes,
                        const std::vector<double>& snapshot_times,
                        const std::string& out_dir) {
  const long long n_steps = step_count(tc);
  const auto plan = snapshot_schedule(snapshot_times, tc.dt, n_steps);
  CsvWriter gauges_csv(out_dir + "/gauges.csv", "t,x,zeta,q");

  ClassicalState s = classical_initial(cfg, grid);
  const auto emit = [&](long long k) {
    for (const Probe& p : probes) {
      const Sample v = sample_classical(s, cfg, grid, p.node);
      gauges_csv.row({s.t, p.x, v.zeta, v.q});
    }
    if (const auto it = plan.find(k); it != plan.end()) {
      for (double label : it->second) {
        write_rows_csv(out_dir + "/snapshot_t" + gshort(label) + ".csv",
                       classical_snapshot_rows(s, cfg, grid));
      }
    }
  };

  emit(0);
  for (long long k = 1; k <= n_steps; ++k) {
    classical_advance(s, cfg, grid, tc);
    emit(k);
  }
}

void run_accuracy_check(const Scenario& sc, const Grid& grid,
                        const TimeControls& tc, const std::string& out_dir,
                        ExecPolicy policy) {
  // Both runs use the no-step configuration; the difference then isolates
  // the transmission machinery at x = 0 from everything else.
  PhysicalConfig flat = sc.physical;
  flat.h_0 = flat.h_s;
  validate(flat);

  State a = initial_state(flat, grid);
  ClassicalState b = classical_initial(flat, grid);
  CsvWriter diff(out_dir + "/difference.csv",
                 "t,max_abs_dzeta,max_abs_dq,abs_dq_i");

  const auto emit = [&] {
    double dz = 0.0, dq = 0.0;
    for (int i = 0; i <= grid.n1; ++i) {
      dz = std::max(dz, std::abs(a.e0.zeta[i] - b.zeta[i]));
      dq = std::max(dq, std::abs(a.e0.q[i] - b.q[i]));
    }
    for (int j = 0; j <= grid.n2; ++j) {
      dz = std::max(dz, std::abs(a.e1.zeta[j] - b.zeta[grid.n1 + j]));
      dq = std::max(dq, std::abs(a.e1.q[j] - b.q[grid.n1 + j]));
    }
    for (int j = 0; j <= grid.n4; ++j) {
      dz = std::max(dz, std::abs(a.e2.zeta[j] - b.zeta2[j]));
      dq = std::max(dq, std::abs(a.e2.q[j] - b.q2[j]));
    }
    diff.row({a.t, dz, dq, std::abs(a.q_i - b.q_i)});
  };

  emit();
  const long long n_steps = step_count(tc);
  for (long long k = 1; k <= n_steps; ++k) {
    a = advance(a, flat, grid, tc, policy);
    classical_advance(b, flat, grid, tc);
    emit();
  }
}

void write_power_report(const PhysicalConfig& cfg, double width,
                        const std::string& out_dir) {
  const PowerReport rep = incident_power(cfg, width);
  CsvWriter out(out_dir + "/power_report.csv",
                "omega,k,c_g,c_g_shallow,E_inc,P_inc,width");
  out.row({rep.omega, rep.k, rep.c_g, rep.c_g_shallow, rep.E_inc, rep.P_inc,
           rep.width});
}

}  // namespace

void run_scenario(const Scenario& sc, const std::string& out_dir,
                  const RunnerOptions& opts) {
  std::filesystem::create_directories(out_dir);
  const Grid grid = build_grid(sc.physical, sc.dx);
  const TimeControls tc = make_controls(sc.physical, sc.dx, sc.cfl, sc.t_end);
  const std::vector<Probe> probes = make_probes(sc.gauges, grid);

  switch (sc.mode) {
    case RunMode::owc: {
      run_owc_loop(sc.physical, grid, tc, probes, sc.snapshot_times, out_dir,
                   "", opts.crest_threshold, opts.policy);
      write_power_report(sc.physical, opts.width, out_dir);
      return;
    }
    case RunMode::classical_nsw: {
      run_classical_loop(sc.physical, grid, tc, probes, sc.snapshot_times,
                         out_dir);
      return;
    }
    case RunMode::accuracy_check: {
      run_accuracy_check(sc, grid, tc, out_dir, opts.policy);
      return;
    }
    case RunMode::compare_step: {
      const std::pair<double, double> heights = opts.step_heights.value_or(
          std::pair<double, double>{0.0, sc.physical.step_height()});
      CsvWriter arrivals_csv(out_dir + "/arrivals.csv",
                             "gauge_x,step_height,arrival_time");
      for (double height : {heights.first, heights.second}) {
        PhysicalConfig variant = sc.physical;
        variant.h_0 = variant.h_s - height;
        try {
          validate(variant);
        } catch (const ConfigError& e) {
          throw ConfigError("compare_step variant s=" + gshort(height) + ": " +
                            e.what());
        }
        const std::vector<double> arrivals = run_owc_loop(
            variant, grid, tc, probes, sc.snapshot_times, out_dir,
            "_s" + gshort(height), opts.crest_threshold, opts.policy);
        for (std::size_t p = 0; p < probes.size(); ++p) {
          arrivals_csv.row({probes[p].x, height, arrivals[p]});
        }
      }
      return;
    }
  }
  throw ConfigError("unhandled run mode");
}

}  // namespace owc
