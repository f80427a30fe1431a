#include "gravmem/sdp.hpp"

#include <cmath>
#include <stdexcept>

#include "gravmem/parallel.hpp"

namespace gravmem {

namespace {

// variable layout: c(4) | Q vec(256) | R vec(256) | Y vec(64) | Z vec(4)
constexpr std::size_t kOffC = 0;
constexpr std::size_t kOffQ = 4;
constexpr std::size_t kOffR = kOffQ + 256;
constexpr std::size_t kOffY = kOffR + 256;
constexpr std::size_t kOffZ = kOffY + 64;
constexpr std::size_t kDim = kOffZ + 4;
constexpr std::size_t kRows = 258;  // 256 decomposition + normalization + tr Z

CMatrix pt_dprime_b(const CMatrix& m) { return partial_transpose(m, {4, 4}, {1}); }

// decomposition basis against (w11, w1z, wxx, wzz); identity weight doubled
CMatrix lhs_of(const std::array<double, 4>& c) {
    return witness_lhs(WitnessOperators{2.0 * c[0], c[1], c[2], c[3]});
}

}  // namespace

struct WitnessSdpSolver::Impl {
    ConeProgram skeleton;  // objective filled per solve
    AffineProjector projector;

    Impl(ConeProgram prog, AffineProjector proj)
        : skeleton(std::move(prog)), projector(std::move(proj)) {}
};

namespace {

ConeProgram build_skeleton() {
    ConeProgram prog;
    prog.blocks = {
        {ConeBlock::Kind::free_block, 4},    // coefficients
        {ConeBlock::Kind::psd_block, 16},    // Q
        {ConeBlock::Kind::psd_block, 16},    // R
        {ConeBlock::Kind::free_block, 64},   // gauge Y
        {ConeBlock::Kind::free_block, 4},    // gauge Z
    };
    prog.a = RMatrix(kRows, kDim);
    prog.b.assign(kRows, 0.0);
    prog.objective.assign(kDim, 0.0);

    // decomposition rows: vec( lhs(c) - Q - R^T - gauge(Y, Z) ) = 0
    std::vector<double> col(256);
    auto set_column = [&](std::size_t col_index, const CMatrix& image) {
        herm_to_vec(image, col.data());
        for (std::size_t row = 0; row < 256; ++row) prog.a(row, col_index) = col[row];
    };
    for (std::size_t k = 0; k < 4; ++k) {
        std::array<double, 4> e{};
        e[k] = 1.0;
        set_column(kOffC + k, lhs_of(e));
    }
    for (std::size_t k = 0; k < 256; ++k) {
        std::vector<double> e(256, 0.0);
        e[k] = 1.0;
        set_column(kOffQ + k, vec_to_herm(e.data(), 16) * cplx(-1.0));
        set_column(kOffR + k, pt_dprime_b(vec_to_herm(e.data(), 16)) * cplx(-1.0));
    }
    for (std::size_t k = 0; k < 64; ++k) {
        std::vector<double> e(64, 0.0);
        e[k] = 1.0;
        set_column(kOffY + k, gauge_term(vec_to_herm(e.data(), 8), CMatrix(2, 2)) * cplx(-1.0));
    }
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<double> e(4, 0.0);
        e[k] = 1.0;
        set_column(kOffZ + k, gauge_term(CMatrix(8, 8), vec_to_herm(e.data(), 2)) * cplx(-1.0));
    }
    // normalization tr W1 + tr W2 = 4 w11 = 1
    prog.a(256, kOffC + 0) = 4.0;
    prog.b[256] = 1.0;
    // tr Z = 0
    prog.a(257, kOffZ + 0) = 1.0;
    prog.a(257, kOffZ + 1) = 1.0;
    return prog;
}

}  // namespace

WitnessSdpSolver::WitnessSdpSolver() {
    ConeProgram prog = build_skeleton();
    AffineProjector proj(prog.a, prog.b);
    impl_ = std::make_unique<Impl>(std::move(prog), std::move(proj));
}

WitnessSdpSolver::~WitnessSdpSolver() = default;

const WitnessSdpSolver& WitnessSdpSolver::shared() {
    static const WitnessSdpSolver solver;
    return solver;
}

SdpProblem build_witness_sdp(const DynamicsPair& pair) {
    SdpProblem p;
    p.e1 = pair.e1;
    p.e2 = pair.e2;
    // identity component pairs with tr E1 + tr E2 (= 4 for a CPT pair)
    p.objective[0] = (pair.e1.trace() + pair.e2.trace()).real();
    p.objective[1] = correlator(pair.e1, CMatrix::identity(2), pauli_z());
    p.objective[2] = correlator(pair.e2, pauli_x(), pauli_x());
    p.objective[3] = correlator(pair.e2, pauli_z(), pauli_z());
    return p;
}

SdpSolution WitnessSdpSolver::solve(const SdpProblem& problem, double tol, int max_iter) const {
    ConeProgram prog = impl_->skeleton;
    for (std::size_t k = 0; k < 4; ++k) prog.objective[kOffC + k] = problem.objective[k];

    AdmmOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    const AdmmSolution raw = solve_cone_program(prog, impl_->projector, opts);

    SdpSolution sol;
    // coefficients from the affine point (normalization exact); cone blocks
    // from the cone point (PSD exact); the gap between them is the primal
    // residual.
    for (std::size_t k = 0; k < 4; ++k) sol.coefficients[k] = raw.affine_point[kOffC + k];
    sol.Q = vec_to_herm(raw.cone_point.data() + kOffQ, 16);
    sol.R = vec_to_herm(raw.cone_point.data() + kOffR, 16);
    sol.gauge_y = vec_to_herm(raw.affine_point.data() + kOffY, 8);
    sol.gauge_z = vec_to_herm(raw.affine_point.data() + kOffZ, 2);
    sol.objective = 0.0;
    for (std::size_t k = 0; k < 4; ++k) sol.objective += problem.objective[k] * sol.coefficients[k];
    sol.primal_residual = raw.primal_residual;
    sol.dual_residual = raw.dual_residual;
    sol.iterations = raw.iterations;
    sol.status = raw.status;
    return sol;
}

SdpSolution solve_sdp(const SdpProblem& problem, double tol, int max_iter) {
    return WitnessSdpSolver::shared().solve(problem, tol, max_iter);
}

CMatrix constraint_residual(const SdpSolution& sol) {
    CMatrix r = sol.Q + pt_dprime_b(sol.R) + gauge_term(sol.gauge_y, sol.gauge_z);
    r -= lhs_of(sol.coefficients);
    return r;
}

VerifyReport verify_solution(const SdpProblem& problem, const SdpSolution& sol) {
    VerifyReport rep;
    rep.min_eig_Q = herm_eig(sol.Q).eigenvalues.back();
    rep.min_eig_R = herm_eig(sol.R).eigenvalues.back();
    rep.equality_residual = constraint_residual(sol).max_abs();
    rep.normalization_defect = std::abs(4.0 * sol.coefficients[0] - 1.0);
    rep.certified_w = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
        rep.certified_w += problem.objective[k] * sol.coefficients[k];
    const double tr_z = sol.gauge_z.trace().real();
    rep.feasible = rep.min_eig_Q >= -1e-7 && rep.min_eig_R >= -1e-7 &&
                   rep.equality_residual <= 1e-7 && rep.normalization_defect <= 1e-8 &&
                   std::abs(tr_z) <= 1e-8;
    return rep;
}

std::vector<SweepRow> sweep(const std::vector<double>& theta_grid, double tol, int max_iter) {
    if (theta_grid.empty()) throw std::invalid_argument("sweep: empty grid");
    const WitnessSdpSolver& solver = WitnessSdpSolver::shared();
    std::vector<SweepRow> rows(theta_grid.size());
    parallel_for(theta_grid.size(), [&](std::size_t i) {
        const double theta = theta_grid[i];
        const SdpProblem problem =
            build_witness_sdp(dynamics_pair(TwoQubitProtocol::with_theta(theta)));
        const SdpSolution sol = solver.solve(problem, tol, max_iter);
        rows[i] = {theta,          sol.objective,      sol.status,
                   sol.iterations, sol.primal_residual, sol.dual_residual};
    });
    return rows;
}

}  // namespace gravmem
