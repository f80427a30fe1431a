// Command-line surface: protocol tables, witness sweeps, physical estimates
// and negative controls, emitted as CSV/JSON for external plotting.
//
// Exit codes: 0 success, 1 usage or config error, 2 numerical-contract
// violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gravmem/jaynes_cummings.hpp"
#include "gravmem/locc.hpp"
#include "gravmem/parallel.hpp"
#include "gravmem/physical.hpp"
#include "gravmem/sdp.hpp"
#include "gravmem/witness.hpp"

using json = nlohmann::json;
using namespace gravmem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitContract = 2;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// Strict config reader: unknown keys and wrong types are usage errors with an
// explicit path.
class Config {
  public:
    Config() = default;
    explicit Config(const std::string& path) {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file: " + path);
        try {
            data_ = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::runtime_error(std::string("config parse error: ") + e.what());
        }
        if (!data_.is_object()) throw std::runtime_error("config: expected a JSON object");
    }

    std::optional<double> number(const std::string& key) const {
        if (!data_.contains(key)) return std::nullopt;
        if (!data_[key].is_number())
            throw std::runtime_error("config." + key + ": expected a number");
        seen_.push_back(key);
        return data_[key].get<double>();
    }

    std::optional<std::uint64_t> unsigned_int(const std::string& key) const {
        if (!data_.contains(key)) return std::nullopt;
        if (!data_[key].is_number_unsigned())
            throw std::runtime_error("config." + key + ": expected a nonnegative integer");
        seen_.push_back(key);
        return data_[key].get<std::uint64_t>();
    }

    void reject_unknown() const {
        for (const auto& [key, value] : data_.items()) {
            if (std::find(seen_.begin(), seen_.end(), key) == seen_.end())
                throw std::runtime_error("config." + key + ": unknown key");
        }
    }

  private:
    json data_ = json::object();
    mutable std::vector<std::string> seen_;
};

std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
    if (steps == 0) throw std::runtime_error("empty grid");
    std::vector<double> g(steps);
    for (std::size_t i = 0; i < steps; ++i)
        g[i] = steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1);
    return g;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::max_iter: return "max_iter";
        case SolveStatus::infeasible: return "infeasible";
    }
    return "unknown";
}

struct GridFlags {
    double lo = 0.0, hi = 0.0;
    std::size_t steps = 0;
    double single = std::nan("");
};

std::vector<double> resolve_grid(const GridFlags& flags, const char* what) {
    if (!std::isnan(flags.single)) return {flags.single};
    if (flags.steps == 0)
        throw std::runtime_error(std::string(what) + ": grid not specified (empty)");
    return linear_grid(flags.lo, flags.hi, flags.steps);
}

int cmd_two_qubit(const std::vector<double>& grid, double lambda, const std::string& out_path) {
    Output out(out_path);
    out.stream() << "theta,c_z1,c_xx2,c_zz2,w_analytical,closed_form_w,certificate_valid\n";
    const WitnessCertificate cert = certify_witness(analytical_witness_operators(lambda));
    std::vector<std::string> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const DynamicsPair pair = dynamics_pair(TwoQubitProtocol::with_theta(grid[i]));
        const CorrelatorSet corr = correlators_of(pair);
        const double w = analytical_witness(corr, lambda);
        const double closed = lambda * (1.0 / 3.0 + std::cos(4.0 * grid[i]));
        rows[i] = num(grid[i]) + "," + num(corr.c_z1) + "," + num(corr.c_xx2) + "," +
                  num(corr.c_zz2) + "," + num(w) + "," + num(closed) + "," +
                  (cert.valid ? "1" : "0");
    });
    for (const std::string& r : rows) out.stream() << r << "\n";
    return 0;
}

int cmd_sdp_sweep(const std::vector<double>& grid, double tol, int max_iter,
                  const std::string& out_path) {
    Output out(out_path);
    const std::vector<SweepRow> rows = sweep(grid, tol, max_iter);
    out.stream() << "theta,w_star,status,iterations,primal_res,dual_res\n";
    int warnings = 0;
    for (const SweepRow& r : rows) {
        if (r.status != SolveStatus::optimal) ++warnings;
        out.stream() << num(r.theta) << "," << num(r.w_star) << "," << status_name(r.status)
                     << "," << r.iterations << "," << num(r.primal_residual) << ","
                     << num(r.dual_residual) << "\n";
    }
    if (warnings > 0)
        std::cerr << "warning: " << warnings << " grid point(s) did not converge\n";
    return 0;
}

int cmd_jc(const std::vector<double>& g_grid, const std::vector<double>& delta_grid,
           bool quadratic, const std::string& out_path) {
    Output out(out_path);
    out.stream() << "g,delta,w_measured,w_closed_form,discrepancy";
    if (quadratic) out.stream() << ",w_quadratic";
    out.stream() << "\n";
    bool contract_ok = true;
    for (double g : g_grid) {
        for (double delta : delta_grid) {
            if (g == 0.0 && delta == 0.0) {
                std::cerr << "warning: skipping degenerate point (g, delta) = (0, 0)\n";
                continue;
            }
            const JCWitnessResult r = jc_witness_detail(g, delta);
            if (r.discrepancy >= 1e-7) contract_ok = false;
            out.stream() << num(g) << "," << num(delta) << "," << num(r.measured) << ","
                         << num(r.closed_form) << "," << num(r.discrepancy);
            if (quadratic) out.stream() << "," << num(-2.0 * g * g / (delta * delta));
            out.stream() << "\n";
        }
    }
    return contract_ok ? 0 : kExitContract;
}

int cmd_estimate_qq(const Config& cfg, const std::string& out_path) {
    QubitQubitSetup setup;
    setup.memory_mass = cfg.number("memory_mass_kg").value_or(1e-14);
    setup.probe_mass = cfg.number("probe_mass_kg").value_or(1e-14);
    setup.delta_x_memory = cfg.number("memory_separation_m").value_or(1e-4);
    setup.delta_x_probe = cfg.number("probe_separation_m").value_or(3e-4);
    setup.vertical_offset = cfg.number("vertical_offset_m").value_or(0.0);
    cfg.reject_unknown();
    const double g = qubit_qubit_coupling(setup);
    json report = {
        {"setup", "qubit-qubit"},
        {"inputs",
         {{"memory_mass_kg", setup.memory_mass},
          {"probe_mass_kg", setup.probe_mass},
          {"memory_separation_m", setup.delta_x_memory},
          {"probe_separation_m", setup.delta_x_probe},
          {"vertical_offset_m", setup.vertical_offset}}},
        {"coupling_rad_per_s", g},
        {"tau_min_s", min_negative_time(g)},
    };
    Output out(out_path);
    out.stream() << report.dump(2) << "\n";
    return 0;
}

int cmd_estimate_osc(const Config& cfg, const std::string& out_path) {
    const double oscillator_mass = cfg.number("oscillator_mass_kg").value_or(1e-6);
    const double frequency = cfg.number("frequency_hz").value_or(10.0);
    const double surface_left = cfg.number("surface_left_m").value_or(100e-6);
    const double surface_right = cfg.number("surface_right_m").value_or(350e-6);
    const double density = cfg.number("density_kg_per_m3").value_or(kTungstenDensity);
    const double target = cfg.number("target_witness_magnitude").value_or(1e-6);
    const double tau = cfg.number("interaction_time_s").value_or(100.0);
    const std::optional<double> probe_mass = cfg.number("probe_mass_kg");
    cfg.reject_unknown();

    const QubitOscillatorSetup geometry = QubitOscillatorSetup::from_surface_distances(
        oscillator_mass, frequency, surface_left, surface_right, probe_mass.value_or(0.0),
        density);
    json report = {
        {"setup", "qubit-oscillator"},
        {"inputs",
         {{"oscillator_mass_kg", oscillator_mass},
          {"frequency_hz", frequency},
          {"surface_left_m", surface_left},
          {"surface_right_m", surface_right},
          {"density_kg_per_m3", density},
          {"sphere_radius_m", geometry.sphere_radius()}}},
    };
    if (probe_mass) {
        report["inputs"]["probe_mass_kg"] = *probe_mass;
        report["coupling_rad_per_s"] = qubit_osc_coupling(geometry);
    } else {
        report["inputs"]["target_witness_magnitude"] = target;
        report["inputs"]["interaction_time_s"] = tau;
        report["required_probe_mass_kg"] = required_probe_mass(geometry, target, tau);
    }
    Output out(out_path);
    out.stream() << report.dump(2) << "\n";
    return 0;
}

int cmd_locc_check(std::uint64_t seed, std::size_t count, double tol,
                   const std::string& out_path) {
    const WitnessSdpSolver& solver = WitnessSdpSolver::shared();
    std::vector<double> analytical(count), optimum(count);
    parallel_for(count, [&](std::size_t k) {
        const DynamicsPair pair =
            realize_dynamics_pair(classical_decomposition(random_separable(seed + k)));
        analytical[k] = analytical_witness(correlators_of(pair), 1.0);
        optimum[k] = solver.solve(build_witness_sdp(pair)).objective;
    });
    double min_analytical = analytical[0], min_optimum = optimum[0];
    for (std::size_t k = 1; k < count; ++k) {
        min_analytical = std::min(min_analytical, analytical[k]);
        min_optimum = std::min(min_optimum, optimum[k]);
    }
    const bool pass = min_analytical >= -tol && min_optimum >= -tol;
    json report = {
        {"instances", count},
        {"seed", seed},
        {"min_analytical_witness", min_analytical},
        {"min_sdp_optimum", min_optimum},
        {"tolerance", tol},
        {"pass", pass},
    };
    Output out(out_path);
    out.stream() << report.dump(2) << "\n";
    return pass ? 0 : kExitContract;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-sided quantum-memory witness toolkit for gravitational dynamics"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    double tol = 1e-8;
    int max_iter = 50000;
    int workers = 0;
    std::uint64_t seed = 42;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--tol", tol, "solver tolerance");
    app.add_option("--workers", workers, "worker threads (0 = all cores)");
    app.add_option("--seed", seed, "random seed");

    GridFlags theta;
    double lambda = 1.0;
    CLI::App* two_qubit = app.add_subcommand("two-qubit", "protocol correlators and witness");
    two_qubit->add_option("--theta", theta.single, "single theta value");
    two_qubit->add_option("--theta-min", theta.lo);
    two_qubit->add_option("--theta-max", theta.hi);
    two_qubit->add_option("--theta-steps", theta.steps);
    two_qubit->add_option("--lambda", lambda, "witness normalization");

    GridFlags sweep_theta;
    CLI::App* sdp_sweep = app.add_subcommand("sdp-sweep", "optimized witness over a theta grid");
    sdp_sweep->add_option("--theta-min", sweep_theta.lo);
    sdp_sweep->add_option("--theta-max", sweep_theta.hi);
    sdp_sweep->add_option("--theta-steps", sweep_theta.steps);
    sdp_sweep->add_option("--theta", sweep_theta.single, "single theta value");
    sdp_sweep->add_option("--max-iter", max_iter, "solver iteration cap");

    GridFlags jc_g, jc_delta;
    bool quadratic = false;
    CLI::App* jc = app.add_subcommand("jc", "qubit-oscillator concurrence witness");
    jc->add_option("--g", jc_g.single, "single coupling value");
    jc->add_option("--g-min", jc_g.lo);
    jc->add_option("--g-max", jc_g.hi);
    jc->add_option("--g-steps", jc_g.steps);
    jc->add_option("--delta", jc_delta.single, "single detuning value");
    jc->add_option("--delta-min", jc_delta.lo);
    jc->add_option("--delta-max", jc_delta.hi);
    jc->add_option("--delta-steps", jc_delta.steps);
    jc->add_flag("--quadratic", quadratic, "add the weak-coupling column -2 g^2 / delta^2");

    std::string estimate_setup = "qubit-qubit";
    CLI::App* estimate = app.add_subcommand("estimate", "laboratory-parameter estimates");
    estimate->add_option("--setup", estimate_setup, "qubit-qubit or qubit-oscillator");

    std::size_t count = 50;
    CLI::App* locc = app.add_subcommand("locc-check", "seeded classical negative control");
    locc->add_option("--count", count, "number of random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        set_worker_count(workers);
        const Config cfg(config_path);
        if (two_qubit->parsed()) {
            return cmd_two_qubit(resolve_grid(theta, "theta"), lambda, out_path);
        }
        if (sdp_sweep->parsed()) {
            return cmd_sdp_sweep(resolve_grid(sweep_theta, "theta"), tol, max_iter, out_path);
        }
        if (jc->parsed()) {
            return cmd_jc(resolve_grid(jc_g, "g"), resolve_grid(jc_delta, "delta"), quadratic,
                          out_path);
        }
        if (estimate->parsed()) {
            if (estimate_setup == "qubit-qubit") return cmd_estimate_qq(cfg, out_path);
            if (estimate_setup == "qubit-oscillator") return cmd_estimate_osc(cfg, out_path);
            throw std::runtime_error("estimate: unknown setup '" + estimate_setup + "'");
        }
        if (locc->parsed()) {
            if (count < 1) throw std::runtime_error("locc-check: count must be >= 1");
            return cmd_locc_check(seed, count, 1e-7, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
