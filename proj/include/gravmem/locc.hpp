#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gravmem/qubit_gravity.hpp"

namespace gravmem {

// Separable, memoryless two-step joint dynamics: every Kraus operator factors
// into a probe part and a memory part. The constructive trace-out of such
// dynamics with any fixed memory state is realizable with classical memory,
// which makes these instances the negative control for every witness.

struct SeparableDynamics {
    // first step: branches (A_i on probe, B_i on memory)
    std::vector<std::pair<CMatrix, CMatrix>> first_step;
    // second step: per first-step branch i, a product-Kraus CPT map (C_j^i, D_j^i)
    std::vector<std::vector<std::pair<CMatrix, CMatrix>>> second_step;
    CMatrix memory_state;

    // max deviation of the joint completeness sums from the identity
    double completeness_defect() const;
};

struct ClassicalRealization {
    std::vector<CMatrix> kraus_first;                      // K_i
    std::vector<std::vector<CMatrix>> conditional_maps;    // per i: Kraus list G_j^i

    double completeness_defect() const;
};

// K_i = sqrt(tr[B_i^dag B_i rho_M]) A_i and
// G_j^i = sqrt(tr[B_i^dag D_j^dag D_j B_i rho_M] / tr[B_i^dag B_i rho_M]) C_j^i.
// Branches with probability below 1e-14 are pruned together with their
// conditional maps (the construction is only defined on support).
ClassicalRealization classical_decomposition(const SeparableDynamics& sep);

// Choi states of E1[rho] = sum_i K_i rho K_i^dag and
// E2[rho] = sum_{ij} G_j^i K_i rho K_i^dag G_j^{i dag}.
DynamicsPair realize_dynamics_pair(const ClassicalRealization& realization);

// Deterministic random instance: Haar-random local unitaries mixed with
// random completeness-normalized Kraus sets on both sides and a random
// memory state.
SeparableDynamics random_separable(std::uint64_t seed);

}  // namespace gravmem
