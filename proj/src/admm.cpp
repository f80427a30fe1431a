#include "gravmem/admm.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gravmem {

std::size_t herm_vec_dim(std::size_t n) { return n * n; }

void herm_to_vec(const CMatrix& h, double* out) {
    const std::size_t n = h.rows();
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) out[k++] = h(i, i).real();
    const double s2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            out[k++] = s2 * h(i, j).real();
            out[k++] = s2 * h(i, j).imag();
        }
}

CMatrix vec_to_herm(const double* v, std::size_t n) {
    CMatrix h(n, n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) h(i, i) = v[k++];
    const double inv_s2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double re = v[k++] * inv_s2;
            const double im = v[k++] * inv_s2;
            h(i, j) = cplx(re, im);
            h(j, i) = cplx(re, -im);
        }
    return h;
}

std::size_t ConeProgram::total_dim() const {
    std::size_t n = 0;
    for (const ConeBlock& blk : blocks) n += blk.vec_dim();
    return n;
}

namespace {

RMatrix cholesky(const RMatrix& k) {
    const std::size_t m = k.rows();
    RMatrix l(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = k(i, j);
            for (std::size_t p = 0; p < j; ++p) s -= l(i, p) * l(j, p);
            if (i == j) {
                if (s <= 0.0)
                    throw std::runtime_error("AffineProjector: constraint rows not independent");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

void chol_solve(const RMatrix& l, std::vector<double>& x) {
    const std::size_t m = l.rows();
    for (std::size_t i = 0; i < m; ++i) {
        double s = x[i];
        const double* li = l.row(i);
        for (std::size_t j = 0; j < i; ++j) s -= li[j] * x[j];
        x[i] = s / li[i];
    }
    for (std::size_t i = m; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < m; ++j) s -= l(j, i) * x[j];
        x[i] = s / l(i, i);
    }
}

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

AffineProjector::AffineProjector(RMatrix a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
    const std::size_t m = a_.rows(), n = a_.cols();
    if (b_.size() != m) throw std::invalid_argument("AffineProjector: b size mismatch");
    at_ = RMatrix(n, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) at_(j, i) = a_(i, j);
    RMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double g = dot(a_.row(i), a_.row(j), n);
            gram(i, j) = g;
            gram(j, i) = g;
        }
    chol_ = cholesky(gram);
}

void AffineProjector::project(std::vector<double>& v) const {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::vector<double> resid(m);
    for (std::size_t i = 0; i < m; ++i) resid[i] = dot(a_.row(i), v.data(), n) - b_[i];
    chol_solve(chol_, resid);
    for (std::size_t j = 0; j < n; ++j) v[j] -= dot(at_.row(j), resid.data(), m);
}

namespace {

void project_cones(const ConeProgram& prog, std::vector<double>& v) {
    std::size_t off = 0;
    for (const ConeBlock& blk : prog.blocks) {
        if (blk.kind == ConeBlock::Kind::psd_block) {
            CMatrix h = vec_to_herm(v.data() + off, blk.size);
            const HermEig eig = herm_eig(h);
            CMatrix scaled(blk.size, blk.size);
            for (std::size_t j = 0; j < blk.size; ++j) {
                const double w = std::max(eig.eigenvalues[j], 0.0);
                for (std::size_t i = 0; i < blk.size; ++i)
                    scaled(i, j) = eig.eigenvectors(i, j) * w;
            }
            herm_to_vec(scaled * eig.eigenvectors.adjoint(), v.data() + off);
        }
        off += blk.vec_dim();
    }
}

double norm2_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

AdmmSolution solve_cone_program(const ConeProgram& prog, const AffineProjector& projector,
                                const AdmmOptions& opts) {
    const std::size_t n = prog.total_dim();
    if (prog.objective.size() != n || prog.a.cols() != n)
        throw std::invalid_argument("solve_cone_program: dimension mismatch");

    std::vector<double> x(n, 0.0), z(n, 0.0), u(n, 0.0);
    std::vector<double> z_prev(n), xh(n);
    AdmmSolution sol;
    double best_primal = 1.0 / 0.0;

    for (int it = 1; it <= opts.max_iter; ++it) {
        // x-step: projection onto the equalities with the objective tilt
        for (std::size_t k = 0; k < n; ++k)
            x[k] = z[k] - u[k] - prog.objective[k] / opts.rho;
        projector.project(x);

        // z-step on the over-relaxed point, then the dual update
        z_prev = z;
        for (std::size_t k = 0; k < n; ++k)
            xh[k] = opts.over_relaxation * x[k] + (1.0 - opts.over_relaxation) * z[k];
        for (std::size_t k = 0; k < n; ++k) z[k] = xh[k] + u[k];
        project_cones(prog, z);
        for (std::size_t k = 0; k < n; ++k) u[k] += xh[k] - z[k];

        const double primal = norm2_diff(x, z);
        const double dual = opts.rho * norm2_diff(z, z_prev);
        sol.iterations = it;
        sol.primal_residual = primal;
        sol.dual_residual = dual;
        best_primal = std::min(best_primal, primal);
        if (primal < opts.tol && dual < opts.tol) {
            sol.status = SolveStatus::optimal;
            break;
        }
        if (it > 1000 && (!std::isfinite(primal) || primal > 1e8 * (best_primal + 1.0))) {
            sol.status = SolveStatus::infeasible;
            break;
        }
    }
    sol.affine_point = std::move(x);
    sol.cone_point = std::move(z);
    return sol;
}

AdmmSolution solve_cone_program(const ConeProgram& prog, const AdmmOptions& opts) {
    AffineProjector projector(prog.a, prog.b);
    return solve_cone_program(prog, projector, opts);
}

}  // namespace gravmem
