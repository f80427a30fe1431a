#include "gravmem/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "gravmem/parallel.hpp"

namespace gravmem {

namespace {
std::atomic<int> g_workers{0};
}

void set_worker_count(int n) { g_workers.store(n < 0 ? 0 : n); }

int worker_count() {
    int n = g_workers.load();
#ifdef _OPENMP
    if (n == 0) n = omp_get_max_threads();
#else
    if (n == 0) n = 1;
#endif
    return n;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries)
    : rows_(rows), cols_(cols), data_(entries) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("CMatrix: entry count does not match rows*cols");
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMatrix CMatrix::conj() const {
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = std::conj(data_[k]);
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx CMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::hermiticity_defect() const {
    if (rows_ != cols_) return 1.0 / 0.0;
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("operator+=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("operator-=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, cplx s) { return a *= s; }

namespace {

void matmul_into(CMatrix& out, const CMatrix& a, const CMatrix& b, bool parallel) {
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    auto row_product = [&](std::size_t i) {
        for (std::size_t j = 0; j < m; ++j) {
            cplx acc = 0.0;
            for (std::size_t l = 0; l < k; ++l) acc += a(i, l) * b(l, j);
            out(i, j) = acc;
        }
    };
#ifdef _OPENMP
    if (parallel && n >= 64) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            row_product(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < n; ++i) row_product(i);
}

void kron_into(CMatrix& out, const CMatrix& a, const CMatrix& b, bool parallel) {
    const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    auto block_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < ac; ++j) {
            const cplx aij = a(i, j);
            for (std::size_t p = 0; p < br; ++p)
                for (std::size_t q = 0; q < bc; ++q)
                    out(i * br + p, j * bc + q) = aij * b(p, q);
        }
    };
#ifdef _OPENMP
    if (parallel && ar * br >= 128) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
        for (long long i = 0; i < static_cast<long long>(ar); ++i)
            block_row(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < ar; ++i) block_row(i);
}

}  // namespace

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
    CMatrix out(a.rows(), b.cols());
    matmul_into(out, a, b, true);
    return out;
}

namespace serial {

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
    CMatrix out(a.rows(), b.cols());
    matmul_into(out, a, b, false);
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    kron_into(out, a, b, false);
    return out;
}

}  // namespace serial

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    kron_into(out, a, b, true);
    return out;
}

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// digits of `index` in the mixed radix given by dims, most significant first
void to_digits(std::size_t index, const std::vector<std::size_t>& dims,
               std::vector<std::size_t>& digits) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
}

std::size_t from_digits(const std::vector<std::size_t>& dims,
                        const std::vector<std::size_t>& digits) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
    return index;
}

}  // namespace

CMatrix partial_trace(const CMatrix& m, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& keep) {
    const std::size_t total = product(dims);
    if (m.rows() != m.cols() || m.rows() != total)
        throw std::invalid_argument("partial_trace: dims do not match matrix dimension");
    std::vector<bool> kept(dims.size(), false);
    for (std::size_t s : keep) {
        if (s >= dims.size()) throw std::invalid_argument("partial_trace: subsystem out of range");
        kept[s] = true;
    }
    std::vector<std::size_t> keep_dims, trace_dims, keep_slots, trace_slots;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        (kept[s] ? keep_dims : trace_dims).push_back(dims[s]);
        (kept[s] ? keep_slots : trace_slots).push_back(s);
    }
    const std::size_t nk = product(keep_dims), nt = product(trace_dims);

    CMatrix out(nk, nk);
    std::vector<std::size_t> rk(keep_dims.size()), ck(keep_dims.size()), tt(trace_dims.size());
    std::vector<std::size_t> row_digits(dims.size()), col_digits(dims.size());
    for (std::size_t r = 0; r < nk; ++r) {
        to_digits(r, keep_dims, rk);
        for (std::size_t c = 0; c < nk; ++c) {
            to_digits(c, keep_dims, ck);
            cplx acc = 0.0;
            for (std::size_t t = 0; t < nt; ++t) {
                to_digits(t, trace_dims, tt);
                for (std::size_t k = 0; k < keep_slots.size(); ++k) {
                    row_digits[keep_slots[k]] = rk[k];
                    col_digits[keep_slots[k]] = ck[k];
                }
                for (std::size_t k = 0; k < trace_slots.size(); ++k) {
                    row_digits[trace_slots[k]] = tt[k];
                    col_digits[trace_slots[k]] = tt[k];
                }
                acc += m(from_digits(dims, row_digits), from_digits(dims, col_digits));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

CMatrix partial_transpose(const CMatrix& m, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& subsystems) {
    const std::size_t total = product(dims);
    if (m.rows() != m.cols() || m.rows() != total)
        throw std::invalid_argument("partial_transpose: dims do not match matrix dimension");
    std::vector<bool> flip(dims.size(), false);
    for (std::size_t s : subsystems) {
        if (s >= dims.size())
            throw std::invalid_argument("partial_transpose: subsystem out of range");
        flip[s] = true;
    }
    CMatrix out(total, total);
    std::vector<std::size_t> rd(dims.size()), cd(dims.size());
    for (std::size_t r = 0; r < total; ++r) {
        to_digits(r, dims, rd);
        for (std::size_t c = 0; c < total; ++c) {
            to_digits(c, dims, cd);
            std::vector<std::size_t> nr = rd, nc = cd;
            for (std::size_t s = 0; s < dims.size(); ++s) {
                if (flip[s]) std::swap(nr[s], nc[s]);
            }
            out(from_digits(dims, nr), from_digits(dims, nc)) = m(r, c);
        }
    }
    return out;
}

CMatrix embed_two_qubit(const CMatrix& op4, std::size_t slot_i, std::size_t slot_j,
                        std::size_t n_qubits) {
    if (op4.rows() != 4 || op4.cols() != 4)
        throw std::invalid_argument("embed_two_qubit: operator must be 4x4");
    if (slot_i == slot_j || slot_i >= n_qubits || slot_j >= n_qubits)
        throw std::invalid_argument("embed_two_qubit: bad slots");
    const std::size_t dim = std::size_t{1} << n_qubits;
    CMatrix out(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const std::size_t ri = (r >> (n_qubits - 1 - slot_i)) & 1;
        const std::size_t rj = (r >> (n_qubits - 1 - slot_j)) & 1;
        const std::size_t rrest = r & ~((std::size_t{1} << (n_qubits - 1 - slot_i)) |
                                        (std::size_t{1} << (n_qubits - 1 - slot_j)));
        for (std::size_t ci = 0; ci < 2; ++ci) {
            for (std::size_t cj = 0; cj < 2; ++cj) {
                const cplx v = op4(ri * 2 + rj, ci * 2 + cj);
                if (v == cplx{0.0}) continue;
                const std::size_t c = rrest | (ci << (n_qubits - 1 - slot_i)) |
                                      (cj << (n_qubits - 1 - slot_j));
                out(r, c) = v;
            }
        }
    }
    return out;
}

namespace {

// One cyclic sweep of two-sided Jacobi rotations; returns off-diagonal norm.
double jacobi_sweep(CMatrix& a, CMatrix& v) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double mag = std::abs(apq);
            if (mag == 0.0) continue;
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            // phase so that e^{-i phi} a_pq is real-positive
            const cplx eiphi = apq / mag;
            const double zeta = (aqq - app) / (2.0 * mag);
            double t;
            if (std::abs(zeta) > 1e15) {
                t = 1.0 / (2.0 * zeta);
            } else {
                t = ((zeta >= 0.0) ? 1.0 : -1.0) /
                    (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
            }
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            // columns: col_p' = c col_p - s conj(eiphi) col_q ; col_q' = s eiphi col_p + c col_q
            const cplx sp = s * std::conj(eiphi);
            const cplx sq = s * eiphi;
            for (std::size_t k = 0; k < n; ++k) {
                const cplx akp = a(k, p), akq = a(k, q);
                a(k, p) = c * akp - sp * akq;
                a(k, q) = sq * akp + c * akq;
                const cplx vkp = v(k, p), vkq = v(k, q);
                v(k, p) = c * vkp - sp * vkq;
                v(k, q) = sq * vkp + c * vkq;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const cplx apk = a(p, k), aqk = a(q, k);
                a(p, k) = c * apk - std::conj(sp) * aqk;
                a(q, k) = std::conj(sq) * apk + c * aqk;
            }
        }
    }
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    return std::sqrt(off);
}

}  // namespace

HermEig herm_eig(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("herm_eig: matrix not square");
    if (!m.is_hermitian(1e-10))
        throw std::invalid_argument("herm_eig: input not Hermitian within 1e-10");
    const std::size_t n = m.rows();
    // symmetrize before the sweeps
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < 60; ++sweep) {
        const double off = jacobi_sweep(a, v);
        if (off < 1e-15 * scale) break;
    }
    HermEig out;
    out.eigenvalues.resize(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

CMatrix func_herm(const CMatrix& m, const std::function<cplx(double)>& f) {
    const HermEig eig = herm_eig(m);
    const std::size_t n = m.rows();
    CMatrix scaled(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx fj = f(eig.eigenvalues[j]);
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) = eig.eigenvectors(i, j) * fj;
    }
    return scaled * eig.eigenvectors.adjoint();
}

CMatrix sqrt_psd(const CMatrix& m) {
    return func_herm(m, [](double x) -> cplx {
        if (x < -1e-10)
            throw std::invalid_argument("sqrt_psd: eigenvalue below -1e-10");
        return std::sqrt(std::max(x, 0.0));
    });
}

const CMatrix& pauli_x() {
    static const CMatrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
    return m;
}

const CMatrix& pauli_y() {
    static const CMatrix m(2, 2, {0.0, cplx(0.0, 1.0), cplx(0.0, -1.0), 0.0});
    return m;
}

const CMatrix& pauli_z() {
    static const CMatrix m(2, 2, {-1.0, 0.0, 0.0, 1.0});
    return m;
}

const CMatrix& sigma_plus() {
    static const CMatrix m(2, 2, {0.0, 0.0, 1.0, 0.0});
    return m;
}

const CMatrix& sigma_minus() {
    static const CMatrix m(2, 2, {0.0, 1.0, 0.0, 0.0});
    return m;
}

const CMatrix& phase_gate_s() {
    static const CMatrix m = [] {
        CMatrix s(2, 2);
        s(0, 0) = std::exp(cplx(0.0, std::numbers::pi / 4.0));
        s(1, 1) = std::exp(cplx(0.0, -std::numbers::pi / 4.0));
        return s;
    }();
    return m;
}

}  // namespace gravmem
