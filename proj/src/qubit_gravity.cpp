#include "gravmem/qubit_gravity.hpp"

#include <cmath>
#include <stdexcept>

namespace gravmem {

TwoQubitProtocol TwoQubitProtocol::with_theta(double theta) {
    TwoQubitProtocol p;
    p.theta = theta;
    p.memory_state = CMatrix(2, 2);
    p.memory_state(1, 1) = 1.0;  // |1><1|, the equal superposition of |L>, |R>
    return p;
}

CMatrix grav_unitary(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("grav_unitary: theta not finite");
    const CMatrix xx = kron(pauli_x(), pauli_x());
    CMatrix u = CMatrix::identity(4) * cplx(std::cos(theta));
    u += xx * cplx(0.0, -std::sin(theta));
    return u;
}

CMatrix sequence_V(double theta) {
    const CMatrix u = grav_unitary(theta);
    return u * kron(phase_gate_s(), phase_gate_s()) * u;
}

namespace {

void validate_memory_state(const CMatrix& rho) {
    if (rho.rows() != 2 || rho.cols() != 2)
        throw std::invalid_argument("memory state must be 2x2");
    if (rho.hermiticity_defect() > 1e-12 || std::abs(rho.trace() - cplx(1.0)) > 1e-12)
        throw std::invalid_argument("memory state must be Hermitian with unit trace");
    const HermEig eig = herm_eig(rho);
    if (eig.eigenvalues.back() < -1e-12)
        throw std::invalid_argument("memory state must be positive semidefinite");
}

// Choi state of rho_S -> tr_M[ J (rho_S (x) rho_M) J^dag ] for a joint 4x4 J.
CMatrix choi_of_joint(const CMatrix& joint, const CMatrix& rho_m) {
    CMatrix choi(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            CMatrix eij(2, 2);
            eij(i, j) = 1.0;
            const CMatrix evolved = joint * kron(eij, rho_m) * joint.adjoint();
            const CMatrix reduced = partial_trace(evolved, {2, 2}, {0});
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b)
                    choi(i * 2 + a, j * 2 + b) = reduced(a, b);
        }
    return choi;
}

}  // namespace

DynamicsPair dynamics_pair(const TwoQubitProtocol& protocol) {
    validate_memory_state(protocol.memory_state);
    const CMatrix v = sequence_V(protocol.theta);
    const CMatrix echo = v * kron(pauli_z(), CMatrix::identity(2)) * v;
    DynamicsPair pair;
    pair.e1 = choi_of_joint(v, protocol.memory_state);
    pair.e2 = choi_of_joint(echo, protocol.memory_state);
    pair.theta = protocol.theta;
    pair.memory_state = protocol.memory_state;
    return pair;
}

std::vector<CMatrix> kraus_e1_closed_form(double theta) {
    const CMatrix k0 = sigma_plus() * sigma_minus() +
                       sigma_minus() * sigma_plus() * cplx(std::cos(2.0 * theta));
    const CMatrix k1 = sigma_plus() * cplx(std::sin(2.0 * theta));
    return {phase_gate_s() * k0, phase_gate_s() * k1};
}

void validate_dynamics_pair(const DynamicsPair& pair, double tol) {
    for (const CMatrix* e : {&pair.e1, &pair.e2}) {
        const ChoiCheck c = check_choi(*e);
        if (!c.cpt(tol)) throw std::runtime_error("dynamics pair violates CPT invariants");
    }
}

}  // namespace gravmem
