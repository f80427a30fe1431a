#include "gravmem/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "gravmem/admm.hpp"

namespace gravmem {

CMatrix WitnessOperators::W1() const {
    return CMatrix::identity(4) * cplx(w11) + kron(CMatrix::identity(2), pauli_z()) * cplx(w1z);
}

CMatrix WitnessOperators::W2() const {
    return kron(pauli_x(), pauli_x()) * cplx(wxx) + kron(pauli_z(), pauli_z()) * cplx(wzz);
}

WitnessOperators analytical_witness_operators(double lambda) {
    return {2.0 * lambda, -lambda, -2.0 * lambda / 3.0, -2.0 * lambda / 3.0};
}

double correlator(const CMatrix& e, const CMatrix& sigma_in, const CMatrix& sigma_out) {
    if (e.rows() != 4 || e.cols() != 4)
        throw std::invalid_argument("correlator: Choi state must be 4x4");
    for (const CMatrix* s : {&sigma_in, &sigma_out}) {
        if (s->rows() != 2 || s->cols() != 2 || s->hermiticity_defect() > 1e-12)
            throw std::invalid_argument("correlator: observables must be Hermitian 2x2");
        if (max_abs_diff(*s, s->transpose()) > 1e-12)
            throw std::invalid_argument(
                "correlator: observable is not transpose-symmetric in the computational basis "
                "(sy-type correlators are not supported; they would flip sign under the "
                "map-to-Choi transpose)");
    }
    const cplx v = (kron(sigma_in, sigma_out) * e).trace();
    if (std::abs(v.imag()) > 1e-10)
        throw std::runtime_error("correlator: imaginary residue above 1e-10 (non-physical Choi)");
    return v.real();
}

CorrelatorSet correlators_of(const DynamicsPair& pair) {
    CorrelatorSet c;
    c.c_z1 = correlator(pair.e1, CMatrix::identity(2), pauli_z());
    c.c_xx2 = correlator(pair.e2, pauli_x(), pauli_x());
    c.c_zz2 = correlator(pair.e2, pauli_z(), pauli_z());
    return c;
}

double analytical_witness(const CorrelatorSet& corrs, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("analytical_witness: lambda must be > 0");
    return lambda * (4.0 - corrs.c_z1 - (2.0 / 3.0) * (corrs.c_xx2 + corrs.c_zz2));
}

double witness_value(const WitnessOperators& w, const DynamicsPair& pair) {
    const cplx v = (w.W1() * pair.e1).trace() + (w.W2() * pair.e2).trace();
    return v.real();
}

CMatrix witness_lhs(const WitnessOperators& w) {
    // slots A(0), D(1), D'(2), B(3)
    const CMatrix w1_term = embed_two_qubit(w.W1(), 0, 1, 4) * cplx(0.5);
    const CMatrix phi = embed_two_qubit(bell_projector(2), 1, 2, 4);
    const CMatrix w2_term = embed_two_qubit(w.W2(), 0, 3, 4) * phi;
    return w1_term + w2_term;
}

CMatrix kappa_projector() {
    CMatrix r(16, 16);
    const double h = 0.5;  // amplitudes 1/sqrt(2), projector entries 1/2
    r(0b0111, 0b0111) = h;
    r(0b1110, 0b1110) = h;
    r(0b0111, 0b1110) = -h;
    r(0b1110, 0b0111) = -h;
    return r;
}

namespace {

CMatrix pt_dprime_b(const CMatrix& m) {
    return partial_transpose(m, {4, 4}, {1});
}

CMatrix trace_out_dprime(const CMatrix& y_add) {
    return partial_trace(y_add, {4, 2}, {0});
}

}  // namespace

CMatrix gauge_term(const CMatrix& y_add, const CMatrix& z_a) {
    if (y_add.rows() != 8 || z_a.rows() != 2)
        throw std::invalid_argument("gauge_term: Y must be 8x8 and Z 2x2");
    CMatrix t = kron(y_add, CMatrix::identity(2));
    t -= kron(trace_out_dprime(y_add), CMatrix::identity(4)) * cplx(0.5);
    t += kron(z_a, CMatrix::identity(8));
    return t;
}

WitnessCertificate certify_witness(const WitnessOperators& w) {
    const CMatrix lhs = witness_lhs(w);
    const double r_scale = std::max(0.0, -w.w1z);
    const CMatrix r = kappa_projector() * cplx(r_scale);
    const CMatrix q0 = lhs - pt_dprime_b(r);

    // Choose the gauge maximizing the smallest eigenvalue of
    // Q = q0 - gauge(Y, Z): maximize t with Qs := Q - t*1 PSD, tr Z = 0.
    // Variables (t, Y, Z, Qs); constraint Qs + gauge(Y, Z) + t*1 = q0.
    ConeProgram prog;
    prog.blocks = {
        {ConeBlock::Kind::free_block, 1},
        {ConeBlock::Kind::free_block, 64},
        {ConeBlock::Kind::free_block, 4},
        {ConeBlock::Kind::psd_block, 16},
    };
    const std::size_t n = prog.total_dim();
    const std::size_t m = 257;
    prog.a = RMatrix(m, n);
    prog.b.assign(m, 0.0);
    prog.objective.assign(n, 0.0);
    prog.objective[0] = -1.0;  // maximize t

    std::vector<double> col(256);
    auto set_c1_column = [&](std::size_t col_index, const CMatrix& image) {
        herm_to_vec(image, col.data());
        for (std::size_t row = 0; row < 256; ++row) prog.a(row, col_index) = col[row];
    };
    set_c1_column(0, CMatrix::identity(16));
    std::size_t off = 1;
    for (std::size_t k = 0; k < 64; ++k) {
        std::vector<double> e(64, 0.0);
        e[k] = 1.0;
        set_c1_column(off + k, gauge_term(vec_to_herm(e.data(), 8), CMatrix(2, 2)));
    }
    off += 64;
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<double> e(4, 0.0);
        e[k] = 1.0;
        set_c1_column(off + k, gauge_term(CMatrix(8, 8), vec_to_herm(e.data(), 2)));
    }
    off += 4;
    for (std::size_t k = 0; k < 256; ++k) {
        std::vector<double> e(256, 0.0);
        e[k] = 1.0;
        set_c1_column(off + k, vec_to_herm(e.data(), 16));
    }
    herm_to_vec(q0, col.data());
    for (std::size_t row = 0; row < 256; ++row) prog.b[row] = col[row];
    // tr Z = 0: first two entries of the Z block vec
    prog.a(256, 1 + 64 + 0) = 1.0;
    prog.a(256, 1 + 64 + 1) = 1.0;

    AdmmOptions opts;
    opts.tol = 1e-10;
    opts.max_iter = 100000;
    const AdmmSolution sol = solve_cone_program(prog, opts);

    WitnessCertificate cert;
    cert.R = r;
    cert.gauge_y = vec_to_herm(sol.affine_point.data() + 1, 8);
    cert.gauge_z = vec_to_herm(sol.affine_point.data() + 1 + 64, 2);
    cert.Q = q0 - gauge_term(cert.gauge_y, cert.gauge_z);
    cert.min_eig_Q = herm_eig(cert.Q).eigenvalues.back();
    cert.min_eig_R = herm_eig(cert.R).eigenvalues.back();
    cert.residual =
        max_abs_diff(lhs, cert.Q + pt_dprime_b(cert.R) + gauge_term(cert.gauge_y, cert.gauge_z));
    cert.valid = cert.min_eig_Q >= -1e-10 && cert.min_eig_R >= -1e-10;
    return cert;
}

}  // namespace gravmem
