#pragma once

#include <cstddef>
#include <vector>

#include "gravmem/linalg.hpp"

namespace gravmem {

// Dense real matrix, row-major; just enough for the solver's normal equations.
class RMatrix {
  public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

// Isometric real parametrization of Hermitian matrices: n diagonal entries,
// then (sqrt2 Re, sqrt2 Im) for each upper off-diagonal pair. Euclidean norm
// of the vector equals the Frobenius norm of the matrix.
std::size_t herm_vec_dim(std::size_t n);
void herm_to_vec(const CMatrix& h, double* out);
CMatrix vec_to_herm(const double* v, std::size_t n);

// Variable block of a cone program. PSD blocks hold an n x n Hermitian matrix
// in the vec parametrization (n*n reals); free blocks are unconstrained reals.
struct ConeBlock {
    enum class Kind { free_block, psd_block };
    Kind kind;
    std::size_t size;  // raw dim for free blocks, matrix order n for PSD blocks

    std::size_t vec_dim() const {
        return kind == Kind::psd_block ? size * size : size;
    }
};

// minimize <objective, v>  subject to  A v = b,  v in (cross product of blocks)
struct ConeProgram {
    std::vector<ConeBlock> blocks;
    RMatrix a;
    std::vector<double> b;
    std::vector<double> objective;

    std::size_t total_dim() const;
};

// Euclidean projector onto {v : A v = b}; the Gram matrix A A^T is factorized
// once so repeated projections cost two matvecs and two triangular solves.
class AffineProjector {
  public:
    AffineProjector(RMatrix a, std::vector<double> b);
    void project(std::vector<double>& v) const;

  private:
    RMatrix a_;
    RMatrix at_;    // transpose, stored row-major for the second matvec
    std::vector<double> b_;
    RMatrix chol_;  // lower Cholesky factor of A A^T
};

enum class SolveStatus { optimal, max_iter, infeasible };

struct AdmmOptions {
    double rho = 1.0;
    double over_relaxation = 1.6;
    double tol = 1e-8;
    int max_iter = 50000;
};

struct AdmmSolution {
    std::vector<double> affine_point;  // satisfies the equalities exactly
    std::vector<double> cone_point;    // satisfies the cone constraints exactly
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    SolveStatus status = SolveStatus::max_iter;
};

// Operator-splitting solve: alternate the affine projection with spectral
// projection of the PSD blocks, with fixed over-relaxation. Terminates when
// both consensus residuals drop below tol.
AdmmSolution solve_cone_program(const ConeProgram& prog, const AffineProjector& projector,
                                const AdmmOptions& opts = {});
AdmmSolution solve_cone_program(const ConeProgram& prog, const AdmmOptions& opts = {});

}  // namespace gravmem
