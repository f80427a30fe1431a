#pragma once

#include <limits>
#include <vector>

#include "gravmem/channel.hpp"
#include "gravmem/linalg.hpp"

namespace gravmem {

// Two-qubit protocol: probe and memory couple through exp(-i theta sx (x) sx)
// pulses of dimensionless strength theta = g*tau, interleaved with local S
// gates on both qubits and a Z echo gate on the probe.

struct TwoQubitProtocol {
    double theta = 0.0;      // g*tau, radians
    CMatrix memory_state;    // 2x2 density matrix, defaults to |1><1|

    static TwoQubitProtocol with_theta(double theta);
};

// Probe-side snapshot maps as Choi states: e1 covers t0 -> t1 = 2 tau,
// e2 covers t0 -> t2 = 4 tau. Both trace 2, PSD, trace-preserving.
struct DynamicsPair {
    CMatrix e1;
    CMatrix e2;
    double theta = std::numeric_limits<double>::quiet_NaN();  // NaN when not protocol-generated
    CMatrix memory_state;
};

// exp(-i theta sx (x) sx) = cos(theta) 1 - i sin(theta) sx (x) sx
CMatrix grav_unitary(double theta);

// V = U (S (x) S) U, the joint evolution over one half of the echo sequence.
CMatrix sequence_V(double theta);

DynamicsPair dynamics_pair(const TwoQubitProtocol& protocol);

// Closed-form Kraus operators {S K0, S K1} of the t1 map for the default
// memory state: K0 = s+s- + cos(2 theta) s-s+, K1 = sin(2 theta) s+.
std::vector<CMatrix> kraus_e1_closed_form(double theta);

// Throws if either Choi state violates the CPT invariants.
void validate_dynamics_pair(const DynamicsPair& pair, double tol = 1e-10);

}  // namespace gravmem
