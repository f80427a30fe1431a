#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace gravmem {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Carrier for states, unitaries, witnesses.
//
// Basis conventions used throughout the library (pinned once, here):
//   - qubit basis order (|0>, |1>) with sigma_z = diag(-1, +1), i.e.
//     sigma_z |1> = +|1>,
//   - sigma_plus = |1><0|, sigma_minus = |0><1|,
//   - sigma_y = [[0, i], [-i, 0]] so that sigma_x sigma_y = i sigma_z,
//   - multi-qubit tensor order is left-to-right = most-significant-to-least-
//     significant index.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries);

    static CMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    CMatrix transpose() const;
    CMatrix conj() const;
    CMatrix adjoint() const;

    cplx trace() const;
    double max_abs() const;
    double frobenius_norm() const;

    // max |M - M^dagger| entry
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() < tol; }

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(cplx s);

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(CMatrix a, cplx s);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

// max |a - b| entry; matrices must have equal shape
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Kronecker product; dimensions multiply.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Reduced operator on the kept subsystems. `dims` are the subsystem dimensions
// left-to-right; `keep` lists 0-based subsystem indices to retain (ascending
// slot order is preserved in the output).
CMatrix partial_trace(const CMatrix& m, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& keep);

// Transpose applied on the listed subsystems only; involutive.
CMatrix partial_transpose(const CMatrix& m, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& subsystems);

// Place a two-subsystem operator on slots (i, j) of an n-qubit register.
CMatrix embed_two_qubit(const CMatrix& op4, std::size_t slot_i, std::size_t slot_j,
                        std::size_t n_qubits);

struct HermEig {
    std::vector<double> eigenvalues;  // descending
    CMatrix eigenvectors;             // columns, same order
};

// Cyclic-Jacobi eigendecomposition of a Hermitian matrix. Input must be
// Hermitian within 1e-10; it is symmetrized before the sweeps. Contract:
// max |V diag(w) V^dagger - M| < 1e-10.
HermEig herm_eig(const CMatrix& m);

// f applied to the eigenvalues in the eigenbasis.
CMatrix func_herm(const CMatrix& m, const std::function<cplx(double)>& f);

// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are
// clamped to zero; anything lower throws.
CMatrix sqrt_psd(const CMatrix& m);

// Fixed single-qubit operators in the library convention.
const CMatrix& pauli_x();
const CMatrix& pauli_y();
const CMatrix& pauli_z();
const CMatrix& sigma_plus();   // |1><0|
const CMatrix& sigma_minus();  // |0><1|
const CMatrix& phase_gate_s(); // exp(-i pi sigma_z / 4)

// Serial reference kernels kept for testing the OpenMP paths against.
namespace serial {
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);
}  // namespace serial

}  // namespace gravmem
