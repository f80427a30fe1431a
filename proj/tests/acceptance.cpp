// Acceptance suite: every release-gating numerical contract, one verdict line
// each. Exit code is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gravmem/jaynes_cummings.hpp"
#include "gravmem/locc.hpp"
#include "gravmem/parallel.hpp"
#include "gravmem/physical.hpp"
#include "gravmem/sdp.hpp"
#include "gravmem/witness.hpp"

using namespace gravmem;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void verdict(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

// 1. E2 echoes the identity channel for every theta.
void criterion_echo_identity() {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double theta = kPi / 2.0 * k / 49.0;
        const DynamicsPair pair = dynamics_pair(TwoQubitProtocol::with_theta(theta));
        worst = std::max(worst, max_abs_diff(pair.e2, bell_projector(2)));
    }
    verdict(1, "echo identity over 50 theta values", worst < 1e-10,
            fmt("max deviation %.3e < 1e-10", worst));
}

// 2. Simulated-correlator witness matches the closed form; -2/3 at the damped point.
void criterion_closed_form_witness() {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double theta = kPi / 2.0 * k / 49.0;
        const DynamicsPair pair = dynamics_pair(TwoQubitProtocol::with_theta(theta));
        const double w = analytical_witness(correlators_of(pair), 1.0);
        worst = std::max(worst, std::abs(w - (1.0 / 3.0 + std::cos(4.0 * theta))));
    }
    const double at45 = analytical_witness(
        correlators_of(dynamics_pair(TwoQubitProtocol::with_theta(kPi / 4.0))), 1.0);
    const bool pass = worst < 1e-9 && std::abs(at45 + 2.0 / 3.0) < 1e-9;
    verdict(2, "closed-form witness lambda[1/3 + cos 4 g tau]", pass,
            fmt("max deviation %.3e, value at the damped point %+.9f", worst, at45));
}

// 3. The published witness certificate verifies.
void criterion_witness_certificate() {
    const WitnessCertificate cert = certify_witness(analytical_witness_operators(1.0));
    const bool pass = cert.valid && cert.min_eig_Q >= -1e-10 && cert.min_eig_R >= -1e-10;
    verdict(3, "witness certificate with R = |kappa><kappa|", pass,
            fmt("min eig Q %.3e >= -1e-10, residual %.2e", cert.min_eig_Q, cert.residual));
}

// 4. SDP sweep: negative everywhere, minimum nearest pi/4, damped-point bound,
//    independent verification on every point.
void criterion_sdp_sweep() {
    std::vector<double> grid;
    for (int k = 1; k <= 9; ++k) grid.push_back(0.15 * k);

    const WitnessSdpSolver& solver = WitnessSdpSolver::shared();
    std::vector<double> w(grid.size());
    std::vector<bool> verified(grid.size());
    std::vector<double> residuals(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const SdpProblem problem =
            build_witness_sdp(dynamics_pair(TwoQubitProtocol::with_theta(grid[i])));
        const SdpSolution sol = solver.solve(problem);
        const VerifyReport rep = verify_solution(problem, sol);
        w[i] = sol.objective;
        verified[i] = rep.feasible && sol.status == SolveStatus::optimal;
        residuals[i] = std::max({rep.equality_residual, sol.primal_residual, sol.dual_residual});
    });
    bool all_negative = true, all_verified = true;
    double worst_residual = 0.0;
    std::size_t argmin = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(w[i] < 0.0)) all_negative = false;
        if (!verified[i]) all_verified = false;
        worst_residual = std::max(worst_residual, residuals[i]);
        if (w[i] < w[argmin]) argmin = i;
    }
    const SdpSolution at45 =
        solver.solve(build_witness_sdp(dynamics_pair(TwoQubitProtocol::with_theta(kPi / 4.0))));
    const bool minimum_placed = std::abs(grid[argmin] - 0.75) < 1e-12;
    const bool bound = at45.objective <= -1.0 / 6.0 + 1e-4;
    const bool pass =
        all_negative && minimum_placed && bound && all_verified && worst_residual < 1e-7;
    verdict(4, "sdp sweep negative with minimum nearest pi/4", pass,
            fmt("w*(pi/4) = %.7f, worst residual %.2e", at45.objective, worst_residual));
}

// 5. Closed-form Choi state against truncated-Fock propagation; excitation conserved.
void criterion_jc_cross_validation() {
    const double gs[5] = {0.2, 0.45, 0.7, 1.1, 1.5};
    const double ds[5] = {0.3, 0.8, 1.3, 1.9, 2.5};
    const double ts[5] = {0.0, 0.6, 1.4, 2.3, 3.3};
    double worst = 0.0;
    for (double g : gs)
        for (double d : ds)
            for (double t : ts) {
                const CMatrix propagated = jc_choi(JCModel::ground(g, d), t).matrix;
                const CMatrix closed = jc_choi_ground_closed_form(g, d, t).matrix;
                worst = std::max(worst, max_abs_diff(propagated, closed));
            }
    double drift = 0.0;
    const JCModel model = JCModel::ground(0.7, 1.3, 6);
    const double reference = jc_coefficients(1, model, 0.0).excitation_number();
    for (double t = 0.0; t <= 4.0; t += 0.2)
        drift = std::max(drift,
                         std::abs(jc_coefficients(1, model, t).excitation_number() - reference));
    const bool pass = worst < 1e-8 && drift < 1e-10;
    verdict(5, "jc closed form vs truncated-Fock propagation", pass,
            fmt("max deviation %.3e < 1e-8, excitation drift %.3e < 1e-10", worst, drift));
}

// 6. Concurrence-based witness against the vacuum closed form; negative everywhere.
void criterion_jc_witness() {
    double worst = 0.0;
    bool negative = true;
    const double delta = 1.0;
    for (double ratio = 0.01; ratio <= 1.0 + 1e-12; ratio += 0.0499) {
        const JCWitnessResult r = jc_witness_detail(ratio * delta, delta);
        worst = std::max(worst, r.discrepancy);
        if (!(r.measured < 0.0)) negative = false;
    }
    const bool pass = worst < 1e-7 && negative;
    verdict(6, "jc concurrence witness vs closed form", pass,
            fmt("max discrepancy %.3e < 1e-7, negative for all g > 0: %.0f", worst,
                negative ? 1.0 : 0.0));
}

// 7. Experimental estimates for both setups.
void criterion_physical_estimates() {
    const QubitQubitSetup qq{1e-14, 1e-14, 1e-4, 3e-4, 0.0};
    const double tau = min_negative_time(qubit_qubit_coupling(qq));
    const bool tau_ok = tau >= 2.9 && tau <= 3.2;

    const QubitOscillatorSetup geometry =
        QubitOscillatorSetup::from_surface_distances(1e-6, 10.0, 100e-6, 350e-6);
    const double mass = required_probe_mass(geometry, 1e-6, 100.0);
    const bool mass_ok = mass >= 0.5e-14 && mass <= 2e-14;

    verdict(7, "experimental estimates", tau_ok && mass_ok,
            fmt("tau_min = %.3f s in [2.9, 3.2], probe mass = %.3e kg within 2x of 1e-14", tau,
                mass));
}

// 8. Negative control: seeded classical realizations under both witnesses.
void criterion_negative_control() {
    const WitnessSdpSolver& solver = WitnessSdpSolver::shared();
    std::vector<double> analytical(50), optimum(50);
    parallel_for(50, [&](std::size_t k) {
        const DynamicsPair pair =
            realize_dynamics_pair(classical_decomposition(random_separable(1000 + k)));
        analytical[k] = analytical_witness(correlators_of(pair), 1.0);
        optimum[k] = solver.solve(build_witness_sdp(pair)).objective;
    });
    const double min_analytical = *std::min_element(analytical.begin(), analytical.end());
    const double min_optimum = *std::min_element(optimum.begin(), optimum.end());
    const bool pass = min_analytical >= -1e-7 && min_optimum >= -1e-7;
    verdict(8, "negative control over 50 classical realizations", pass,
            fmt("min analytical %.3e, min sdp optimum %.3e, both >= -1e-7", min_analytical,
                min_optimum));
}

// 9. Property suites across the toolkit.
void criterion_property_suites() {
    bool pass = true;
    std::string detail = "all sub-properties hold";

    // Choi invariants on protocol channels
    for (double theta : {0.1, 0.6, 1.2}) {
        const DynamicsPair pair = dynamics_pair(TwoQubitProtocol::with_theta(theta));
        for (const CMatrix* e : {&pair.e1, &pair.e2}) {
            const ChoiCheck c = check_choi(*e);
            if (!c.cpt(1e-10)) {
                pass = false;
                detail = "protocol Choi invariants violated";
            }
        }
    }
    // and on jc channels
    for (double t : {0.5, 2.0}) {
        const ChoiCheck c = check_choi(jc_choi(JCModel::ground(0.6, 1.1), t).matrix);
        if (!c.cpt(1e-9)) {
            pass = false;
            detail = "jc Choi invariants violated";
        }
    }

    // concurrence oracles
    if (std::abs(concurrence(bell_projector(2) * cplx(0.5)) - 1.0) > 1e-10) {
        pass = false;
        detail = "Bell concurrence";
    }
    CMatrix product_state(4, 4);
    product_state(0, 0) = 1.0;
    if (concurrence(product_state) > 1e-12) {
        pass = false;
        detail = "product concurrence";
    }
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int k = 0; k < 100; ++k) {
        cplx amp[4];
        double norm = 0.0;
        for (cplx& a : amp) {
            a = cplx(dist(rng), dist(rng));
            norm += std::norm(a);
        }
        for (cplx& a : amp) a /= std::sqrt(norm);
        CMatrix rho(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) rho(i, j) = amp[i] * std::conj(amp[j]);
        const double brute = 2.0 * std::abs(amp[0] * amp[3] - amp[1] * amp[2]);
        if (std::abs(concurrence(rho) - brute) > 1e-10) {
            pass = false;
            detail = "pure-state concurrence oracle";
        }
    }

    // partial-transpose involution and eigendecomposition reconstruction
    CMatrix h(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        h(i, i) = dist(rng);
        for (std::size_t j = i + 1; j < 8; ++j) {
            h(i, j) = cplx(dist(rng), dist(rng));
            h(j, i) = std::conj(h(i, j));
        }
    }
    if (max_abs_diff(partial_transpose(partial_transpose(h, {2, 4}, {1}), {2, 4}, {1}), h) >
        1e-14) {
        pass = false;
        detail = "partial transpose involution";
    }
    const HermEig eig = herm_eig(h);
    CMatrix rec(8, 8);
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t k = 0; k < 8; ++k)
                rec(i, k) +=
                    eig.eigenvectors(i, j) * eig.eigenvalues[j] * std::conj(eig.eigenvectors(k, j));
    if (max_abs_diff(rec, h) > 1e-10) {
        pass = false;
        detail = "eigendecomposition reconstruction";
    }

    verdict(9, "property suites", pass, detail);
}

}  // namespace

int main() {
    criterion_echo_identity();
    criterion_closed_form_witness();
    criterion_witness_certificate();
    criterion_sdp_sweep();
    criterion_jc_cross_validation();
    criterion_jc_witness();
    criterion_physical_estimates();
    criterion_negative_control();
    criterion_property_suites();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
