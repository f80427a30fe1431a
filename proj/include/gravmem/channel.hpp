#pragma once

#include <vector>

#include "gravmem/linalg.hpp"

namespace gravmem {

// Choi-state utilities. Convention: for a channel E on a d-dimensional system,
// the Choi state is (1 (x) E)[|phi+><phi+|] with the unnormalized maximally
// entangled |phi+> = sum_i |ii>, so trace(Choi) = d and the input copy is the
// first tensor slot. Trace preservation reads tr_out(Choi) = 1_in.

// |phi+><phi+| on two copies of a d-dimensional system (trace d).
CMatrix bell_projector(std::size_t d = 2);

// Choi state assembled from a Kraus list: sum_k (1 (x) K_k) |phi+><phi+| (1 (x) K_k)^dag.
CMatrix choi_from_kraus(const std::vector<CMatrix>& kraus);

// Apply a channel given by its Choi state: E[rho] = tr_in[(rho^T (x) 1) Choi].
CMatrix apply_choi(const CMatrix& choi, const CMatrix& rho);

// Marginal over the output slot; equals the identity for a trace-preserving map.
CMatrix choi_input_marginal(const CMatrix& choi);

struct ChoiCheck {
    double min_eigenvalue;       // PSD within tolerance when >= -tol
    double trace_defect;         // |tr(choi) - d|
    double marginal_defect;      // max |tr_out(choi) - 1|
    double hermiticity_defect;

    bool cpt(double tol = 1e-10) const {
        return min_eigenvalue >= -tol && trace_defect < tol && marginal_defect < tol &&
               hermiticity_defect < tol;
    }
};

ChoiCheck check_choi(const CMatrix& choi);

}  // namespace gravmem
