#pragma once

#include <array>
#include <memory>
#include <vector>

#include "gravmem/admm.hpp"
#include "gravmem/witness.hpp"

namespace gravmem {

// Semidefinite search for the best witness of the four-coefficient family on
// a given dynamics pair:
//
//   w* = min  4 w11 + c_z1 w1z + c_xx2 wxx + c_zz2 wzz
//        s.t. the witness is certified valid (decomposition with PSD Q, R and
//             the classicality-neutral gauge terms), tr W1 + tr W2 = 1.
//
// The objective coefficients are the measured correlators of the pair; the
// identity coefficient pairs with both trace-preservation sum rules, giving
// the constant 4 for any CPT pair.

struct SdpProblem {
    CMatrix e1, e2;
    std::array<double, 4> objective{};  // against (w11, w1z, wxx, wzz)
};

struct SdpSolution {
    std::array<double, 4> coefficients{};
    CMatrix Q, R;            // 16x16 PSD
    CMatrix gauge_y;         // 8x8 Hermitian on A,D,D'
    CMatrix gauge_z;         // 2x2 traceless Hermitian on A
    double objective = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    int iterations = 0;
    SolveStatus status = SolveStatus::max_iter;

    WitnessOperators witness() const {
        return {coefficients[0], coefficients[1], coefficients[2], coefficients[3]};
    }
};

SdpProblem build_witness_sdp(const DynamicsPair& pair);

// Decomposition residual Q + R^{T_{D'B}} + gauge - lhs(coefficients); its
// max-abs entry is the equality-constraint residual reported by the verifier.
// The certificate couples the identity component with weight 2*w11, matching
// the correlator normalization in which the constant term is 4.
CMatrix constraint_residual(const SdpSolution& sol);

SdpSolution solve_sdp(const SdpProblem& problem, double tol = 1e-8, int max_iter = 50000);

struct VerifyReport {
    bool feasible = false;
    double certified_w = 0.0;
    double min_eig_Q = 0.0;
    double min_eig_R = 0.0;
    double equality_residual = 0.0;
    double normalization_defect = 0.0;
};

// Independent re-check of a solution with fresh spectral calls.
VerifyReport verify_solution(const SdpProblem& problem, const SdpSolution& sol);

struct SweepRow {
    double theta = 0.0;
    double w_star = 0.0;
    SolveStatus status = SolveStatus::max_iter;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
};

// One solve per grid point, dispatched to the worker pool; rows come back in
// input order.
std::vector<SweepRow> sweep(const std::vector<double>& theta_grid, double tol = 1e-8,
                            int max_iter = 50000);

// Prefactored solver: the constraint system is identical for every dynamics
// pair, so the Gram factorization is built once and shared across solves.
// solve() is const and safe to call from concurrent workers.
class WitnessSdpSolver {
  public:
    WitnessSdpSolver();
    ~WitnessSdpSolver();
    WitnessSdpSolver(const WitnessSdpSolver&) = delete;
    WitnessSdpSolver& operator=(const WitnessSdpSolver&) = delete;

    SdpSolution solve(const SdpProblem& problem, double tol = 1e-8, int max_iter = 50000) const;

    static const WitnessSdpSolver& shared();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace gravmem
