#include "gravmem/jaynes_cummings.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gravmem {

JCModel JCModel::ground(double g, double delta, std::size_t n_max) {
    JCModel m;
    m.g = g;
    m.delta = delta;
    m.n_max = n_max;
    m.oscillator_amplitudes.assign(n_max + 1, 0.0);
    m.oscillator_amplitudes[0] = 1.0;
    return m;
}

double JCModel::kappa() const { return std::sqrt(g * g + delta * delta / 4.0); }

void JCModel::validate() const {
    if (n_max < 1) throw std::invalid_argument("JCModel: n_max must be >= 1");
    if (oscillator_amplitudes.size() != n_max + 1)
        throw std::invalid_argument("JCModel: amplitude vector must have n_max + 1 entries");
    double norm = 0.0;
    for (const cplx& c : oscillator_amplitudes) norm += std::norm(c);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("JCModel: oscillator amplitudes must be normalized");
}

double JCCoefficients::norm_squared() const {
    double s = 0.0;
    for (const cplx& c : c1) s += std::norm(c);
    for (const cplx& c : c0) s += std::norm(c);
    return s;
}

double JCCoefficients::excitation_number() const {
    double s = 0.0;
    for (std::size_t n = 0; n < c1.size(); ++n) s += (double(n) + 0.5) * std::norm(c1[n]);
    for (std::size_t n = 0; n < c0.size(); ++n) s += (double(n) - 0.5) * std::norm(c0[n]);
    return s;
}

namespace {

double omega_n(const JCModel& m, long n) {
    // n = -1 appears in the qubit-|0> branch and degenerates to |delta|/2
    if (n < 0) return std::abs(m.delta) / 2.0;
    return std::sqrt(m.g * m.g * double(n + 1) + m.delta * m.delta / 4.0);
}

JCCoefficients coefficients_padded(int initial_qubit, const JCModel& model, double t,
                                   std::size_t levels) {
    std::vector<cplx> cn(levels, 0.0);
    for (std::size_t n = 0; n < model.oscillator_amplitudes.size() && n < levels; ++n)
        cn[n] = model.oscillator_amplitudes[n];

    const double d = model.delta;
    const cplx up_phase = std::exp(cplx(0.0, d * t / 2.0));
    const cplx down_phase = std::exp(cplx(0.0, -d * t / 2.0));
    JCCoefficients out;
    out.c1.assign(levels, 0.0);
    out.c0.assign(levels, 0.0);

    if (initial_qubit == 1) {
        for (std::size_t n = 0; n < levels; ++n) {
            const double om = omega_n(model, long(n));
            out.c1[n] = cn[n] *
                        (std::cos(om * t) - cplx(0.0, d / (2.0 * om)) * std::sin(om * t)) *
                        up_phase;
            if (n >= 1) {
                const double omp = omega_n(model, long(n) - 1);
                out.c0[n] = -cn[n - 1] * cplx(0.0, model.g * std::sqrt(double(n)) / omp) *
                            std::sin(omp * t) * down_phase;
            }
        }
    } else if (initial_qubit == 0) {
        for (std::size_t n = 0; n < levels; ++n) {
            const double om = omega_n(model, long(n));
            if (n + 1 < levels) {
                out.c1[n] = -cplx(0.0, model.g * std::sqrt(double(n + 1)) / om) * cn[n + 1] *
                            std::sin(om * t) * up_phase;
            }
            const double omp = omega_n(model, long(n) - 1);
            if (n == 0 && omp == 0.0) {
                out.c0[n] = cn[n] * down_phase;  // |0,0> is stationary at delta = 0
            } else {
                out.c0[n] = cn[n] *
                            (std::cos(omp * t) + cplx(0.0, d / (2.0 * omp)) * std::sin(omp * t)) *
                            down_phase;
            }
        }
    } else {
        throw std::invalid_argument("jc_coefficients: initial qubit must be 0 or 1");
    }
    return out;
}

CMatrix choi_from_coefficients(const JCCoefficients& with1, const JCCoefficients& with0) {
    const std::size_t levels = with1.c1.size();
    CMatrix chi(4, 4);
    const JCCoefficients* by_initial[2] = {&with0, &with1};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const JCCoefficients& ci = *by_initial[i];
            const JCCoefficients& cj = *by_initial[j];
            for (std::size_t n = 0; n < levels; ++n) {
                const cplx amp_i[2] = {ci.c0[n], ci.c1[n]};
                const cplx amp_j[2] = {cj.c0[n], cj.c1[n]};
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        chi(i * 2 + k, j * 2 + l) += amp_i[k] * std::conj(amp_j[l]);
            }
        }
    }
    return chi;
}

}  // namespace

JCCoefficients jc_coefficients(int initial_qubit, const JCModel& model, double t) {
    model.validate();
    const std::size_t levels = model.n_max + 2;
    JCCoefficients out = coefficients_padded(initial_qubit, model, t, levels);
    if (std::abs(out.norm_squared() - 1.0) > 1e-8)
        throw std::runtime_error("jc_coefficients: norm drift above 1e-8, truncation too small");
    return out;
}

JCChoi jc_choi(const JCModel& model, double t) {
    model.validate();
    std::size_t levels = model.n_max + 2;
    CMatrix chi = choi_from_coefficients(coefficients_padded(1, model, t, levels),
                                         coefficients_padded(0, model, t, levels));
    // doubling check; exact dynamics conserves excitation so this settles fast
    for (int round = 0; round < 6; ++round) {
        levels *= 2;
        const CMatrix refined = choi_from_coefficients(
            coefficients_padded(1, model, t, levels), coefficients_padded(0, model, t, levels));
        const double change = max_abs_diff(chi, refined);
        chi = refined;
        if (change < 1e-10) break;
    }
    JCChoi out;
    out.matrix = std::move(chi);
    out.time = t;
    out.mode = JCChoi::Mode::propagated;
    return out;
}

JCChoi jc_choi_ground_closed_form(double g, double delta, double t) {
    const double kappa = std::sqrt(g * g + delta * delta / 4.0);
    if (kappa == 0.0)
        throw std::invalid_argument("jc_choi_ground_closed_form: degenerate (g, delta) = (0, 0)");
    CMatrix e(4, 4);
    const double k2 = kappa * kappa;
    e(3, 3) = (2.0 * g * g + delta * delta + 2.0 * g * g * std::cos(2.0 * kappa * t)) / (4.0 * k2);
    e(0, 0) = 1.0;
    const double s = std::sin(kappa * t);
    e(2, 2) = g * g * s * s / k2;
    const cplx off = std::exp(cplx(0.0, -t * delta / 2.0)) *
                     (2.0 * kappa * std::cos(kappa * t) + cplx(0.0, delta) * s) / (2.0 * kappa);
    e(0, 3) = off;
    e(3, 0) = std::conj(off);
    JCChoi out;
    out.matrix = std::move(e);
    out.time = t;
    out.mode = JCChoi::Mode::closed_form_ground;
    return out;
}

namespace {

// Spin-flip singular values of a two-qubit state, descending: the eigenvalues
// of sqrt( sqrt(rho) (sy(x)sy) rho* (sy(x)sy) sqrt(rho) ).
std::vector<double> spin_flip_lambdas(const CMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("concurrence: state must be 4x4");
    if (rho.hermiticity_defect() > 1e-10 || std::abs(rho.trace() - cplx(1.0)) > 1e-8)
        throw std::invalid_argument("concurrence: state must be Hermitian with unit trace");
    const CMatrix flip = kron(pauli_y(), pauli_y());
    const CMatrix root = sqrt_psd(rho);
    const CMatrix sandwich = root * flip * rho.conj() * flip * root;
    const HermEig eig = herm_eig(sandwich);
    std::vector<double> lam(4);
    for (std::size_t k = 0; k < 4; ++k) lam[k] = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
    return lam;
}

}  // namespace

double concurrence(const CMatrix& rho) {
    const std::vector<double> lam = spin_flip_lambdas(rho);
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence_assistance(const CMatrix& rho) {
    const std::vector<double> lam = spin_flip_lambdas(rho);
    return lam[0] + lam[1] + lam[2] + lam[3];
}

JCWitnessResult jc_witness_detail(double g, double delta) {
    const double kappa = std::sqrt(g * g + delta * delta / 4.0);
    if (kappa == 0.0) throw std::invalid_argument("jc_witness: degenerate (g, delta) = (0, 0)");
    const double t1 = std::numbers::pi / (2.0 * kappa);
    const JCModel model = JCModel::ground(g, delta);
    const CMatrix e1 = jc_choi(model, t1).matrix * cplx(0.5);
    const CMatrix e2 = jc_choi(model, 2.0 * t1).matrix * cplx(0.5);
    JCWitnessResult out;
    out.measured = concurrence_assistance(e1) - concurrence(e2);
    out.closed_form = std::abs(delta) / std::sqrt(4.0 * g * g + delta * delta) - 1.0;
    out.discrepancy = std::abs(out.measured - out.closed_form);
    return out;
}

double jc_witness(double g, double delta) {
    const JCWitnessResult r = jc_witness_detail(g, delta);
    if (r.discrepancy > 1e-7)
        throw std::runtime_error("jc_witness: measure-based and closed-form values disagree");
    return r.measured;
}

CMatrix rabi_hamiltonian(double omega, double omega_a, double g, std::size_t n_levels) {
    CMatrix a(n_levels, n_levels);
    for (std::size_t n = 1; n < n_levels; ++n) a(n - 1, n) = std::sqrt(double(n));
    const CMatrix num = a.adjoint() * a;
    CMatrix h = kron(CMatrix::identity(2), num) * cplx(omega);
    h += kron(pauli_z(), CMatrix::identity(n_levels)) * cplx(omega_a / 2.0);
    h += kron(pauli_x(), a + a.adjoint()) * cplx(g);
    return h;
}

CMatrix jc_interaction_hamiltonian(double g, double delta, std::size_t n_levels) {
    CMatrix a(n_levels, n_levels);
    for (std::size_t n = 1; n < n_levels; ++n) a(n - 1, n) = std::sqrt(double(n));
    // the qubit-lowering component pairs with a^dag: |1> decays by emitting
    CMatrix h = kron(pauli_z(), CMatrix::identity(n_levels)) * cplx(delta / 2.0);
    h += kron(sigma_minus(), a.adjoint()) * cplx(g);
    h += kron(sigma_plus(), a) * cplx(g);
    return h;
}

}  // namespace gravmem
