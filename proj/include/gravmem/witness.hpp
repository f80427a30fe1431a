#pragma once

#include "gravmem/qubit_gravity.hpp"

namespace gravmem {

// Quantum-memory witness of the four-coefficient family. The assembled
// observables are
//   W1 = w11 1(x)1 + w1z 1(x)sz   (measured against the t1 snapshot),
//   W2 = wxx sx(x)sx + wzz sz(x)sz (measured against the t2 snapshot).
struct WitnessOperators {
    double w11 = 0.0, w1z = 0.0, wxx = 0.0, wzz = 0.0;

    CMatrix W1() const;
    CMatrix W2() const;
};

// The analytical witness, in operator form. Its value on a dynamics pair is
// lambda * [4 - tr sz E1[1] - (2/3)(tr sx E2[sx] + tr sz E2[sz])]; in the
// trace-2 Choi convention the identity component carries weight 2*lambda.
WitnessOperators analytical_witness_operators(double lambda = 1.0);

// Correlators measured on the probe: prepare eigenstates, evolve, measure.
struct CorrelatorSet {
    double c_z1 = 0.0;   // tr sz E1[1]
    double c_xx2 = 0.0;  // tr sx E2[sx]
    double c_zz2 = 0.0;  // tr sz E2[sz]
};

// tr[(sigma_in (x) sigma_out) e] for a 4x4 Choi state. Both observables must
// be Hermitian and transpose-symmetric in the computational basis (sx, sz, 1);
// sy-type observables are rejected since sy^T = -sy would silently flip the
// map-side convention.
double correlator(const CMatrix& e, const CMatrix& sigma_in, const CMatrix& sigma_out);

CorrelatorSet correlators_of(const DynamicsPair& pair);

// w = lambda [4 - c_z1 - (2/3)(c_xx2 + c_zz2)]. Negative values certify
// quantum memory, given a valid witness.
double analytical_witness(const CorrelatorSet& corrs, double lambda = 1.0);

// Operator pairing tr[W1 e1] + tr[W2 e2]; equals analytical_witness for the
// operators from analytical_witness_operators.
double witness_value(const WitnessOperators& w, const DynamicsPair& pair);

// --- validity certificates -------------------------------------------------
//
// (W1, W2) is a valid witness when the four-qubit operator
//   W1^{AD} (x) 1^{D'B}/2 + W2^{AB} (x) Phi+^{DD'}
// decomposes as Q + R^{T_{D'B}} + gauge, with Q, R PSD. The gauge terms pair
// to zero against every classically realizable dynamics: Y (x) 1^B -
// (tr_{D'} Y)/2 (x) 1^{D'B} for Hermitian Y on ADD' (trace preservation of the
// conditional maps) and Z (x) 1^{DD'B} for traceless Hermitian Z on A
// (completeness of the first-step Kraus family). Slots are ordered A, D, D', B
// with A the shared input copy, D the t1 output, D' the conditional-map input
// copy and B the t2 output.

// Left side of the decomposition for the given coefficients.
CMatrix witness_lhs(const WitnessOperators& w);

// |kappa> = (|0111> - |1110>)/sqrt(2) in A,D,D',B order.
CMatrix kappa_projector();

// Gauge contributions.
CMatrix gauge_term(const CMatrix& y_add, const CMatrix& z_a);

struct WitnessCertificate {
    bool valid = false;
    CMatrix Q;             // 16x16, gauge-adjusted remainder
    CMatrix R;             // 16x16 PSD ansatz
    CMatrix gauge_y;       // 8x8 Hermitian on A,D,D'
    CMatrix gauge_z;       // 2x2 traceless Hermitian on A
    double min_eig_Q = 0.0;
    double min_eig_R = 0.0;
    double residual = 0.0;  // max |lhs - Q - R^T - gauge|
};

// Certifies validity with the rank-one ansatz R = max(0, -w1z) |kappa><kappa|
// and the gauge chosen to maximize the smallest eigenvalue of Q. Valid iff
// min_eig_Q >= -1e-10 and R is PSD. Invalid certificates are reported, not
// thrown.
WitnessCertificate certify_witness(const WitnessOperators& w);

}  // namespace gravmem
