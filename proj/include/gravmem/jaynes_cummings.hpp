#pragma once

#include <cstddef>
#include <vector>

#include "gravmem/linalg.hpp"

namespace gravmem {

// Qubit-oscillator model in the interaction picture,
//   H / hbar = (delta/2) sz + g (exchange coupling),
// with detuning delta = omega_a - omega and the excitation-conserving
// coupling that de-excites the qubit while creating an oscillator quantum.
// The generalized Rabi frequency of the n-th single-excitation doublet is
// Omega_n = sqrt(g^2 (n+1) + delta^2/4); Omega_0 equals kappa.
struct JCModel {
    double g = 0.0;      // coupling rate, rad/s
    double delta = 0.0;  // detuning, rad/s
    std::size_t n_max = 8;
    std::vector<cplx> oscillator_amplitudes;  // c_n, n = 0..n_max, unit norm

    static JCModel ground(double g, double delta, std::size_t n_max = 2);

    double kappa() const;
    void validate() const;
};

// Joint pure-state amplitudes at time t for the qubit starting in |1> or |0>.
// Arrays carry n_max + 2 Fock levels: the |1, n_max> branch feeds
// |0, n_max + 1>, which excitation conservation caps exactly.
struct JCCoefficients {
    std::vector<cplx> c1;  // amplitudes of |1, n>
    std::vector<cplx> c0;  // amplitudes of |0, n>

    double norm_squared() const;
    double excitation_number() const;  // <a^dag a + sz/2>
};

JCCoefficients jc_coefficients(int initial_qubit, const JCModel& model, double t);

struct JCChoi {
    enum class Mode { closed_form_ground, propagated };
    CMatrix matrix;  // 4x4, trace 2
    double time = 0.0;
    Mode mode = Mode::propagated;
};

// Choi state assembled from the propagated amplitudes for both initial qubit
// basis states, cross terms included. The Fock padding is doubled until the
// result changes by less than 1e-10.
JCChoi jc_choi(const JCModel& model, double t);

// Ground-state-oscillator Choi state in closed form.
JCChoi jc_choi_ground_closed_form(double g, double delta, double t);

// Wootters concurrence of a two-qubit density matrix (trace 1).
double concurrence(const CMatrix& rho);

// Concurrence of assistance: the sum of the spin-flip singular values.
double concurrence_assistance(const CMatrix& rho);

struct JCWitnessResult {
    double measured = 0.0;     // C#[E1] - C[E2] at t1 = pi/(2 kappa), t2 = 2 t1
    double closed_form = 0.0;  // |delta| / sqrt(4 g^2 + delta^2) - 1
    double discrepancy = 0.0;
};

JCWitnessResult jc_witness_detail(double g, double delta);

// Measure-based witness value; throws if the closed form disagrees by more
// than 1e-7 (implementation-fault tripwire).
double jc_witness(double g, double delta);

// Full Rabi Hamiltonian (omega a^dag a + omega_a/2 sz + g sx (a + a^dag)), in
// angular-frequency units (H/hbar), on a truncated Fock space. Kept as a
// documented constructor for comparisons beyond the rotating-wave regime; the
// library's dynamics use the interaction-picture model above.
CMatrix rabi_hamiltonian(double omega, double omega_a, double g, std::size_t n_levels);

// Interaction-picture Hamiltonian of the model (H/hbar) on n_levels Fock
// states; qubit is the first tensor factor.
CMatrix jc_interaction_hamiltonian(double g, double delta, std::size_t n_levels);

}  // namespace gravmem
