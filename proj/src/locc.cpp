#include "gravmem/locc.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace gravmem {

namespace {

double branch_probability(const CMatrix& b, const CMatrix& rho_m) {
    return ((b.adjoint() * b) * rho_m).trace().real();
}

CMatrix sum_kdk(const std::vector<std::pair<CMatrix, CMatrix>>& pairs) {
    CMatrix s(4, 4);
    for (const auto& [probe, memory] : pairs)
        s += kron(probe.adjoint() * probe, memory.adjoint() * memory);
    return s;
}

}  // namespace

double SeparableDynamics::completeness_defect() const {
    double defect = max_abs_diff(sum_kdk(first_step), CMatrix::identity(4));
    for (const auto& conditional : second_step)
        defect = std::max(defect, max_abs_diff(sum_kdk(conditional), CMatrix::identity(4)));
    return defect;
}

double ClassicalRealization::completeness_defect() const {
    CMatrix s(2, 2);
    for (const CMatrix& k : kraus_first) s += k.adjoint() * k;
    double defect = max_abs_diff(s, CMatrix::identity(2));
    for (const auto& graus : conditional_maps) {
        CMatrix g(2, 2);
        for (const CMatrix& gj : graus) g += gj.adjoint() * gj;
        defect = std::max(defect, max_abs_diff(g, CMatrix::identity(2)));
    }
    return defect;
}

ClassicalRealization classical_decomposition(const SeparableDynamics& sep) {
    if (sep.first_step.size() != sep.second_step.size())
        throw std::invalid_argument("classical_decomposition: branch count mismatch");
    if (sep.completeness_defect() > 1e-10)
        throw std::invalid_argument("classical_decomposition: completeness violated in input");

    ClassicalRealization out;
    for (std::size_t i = 0; i < sep.first_step.size(); ++i) {
        const auto& [a_i, b_i] = sep.first_step[i];
        const double p_i = branch_probability(b_i, sep.memory_state);
        if (p_i < 1e-14) continue;  // zero-probability branch, quotient undefined
        out.kraus_first.push_back(a_i * cplx(std::sqrt(p_i)));
        std::vector<CMatrix> graus;
        for (const auto& [c_j, d_j] : sep.second_step[i]) {
            const double q = (((d_j * b_i).adjoint() * (d_j * b_i)) * sep.memory_state)
                                 .trace()
                                 .real();
            graus.push_back(c_j * cplx(std::sqrt(std::max(q, 0.0) / p_i)));
        }
        out.conditional_maps.push_back(std::move(graus));
    }
    return out;
}

DynamicsPair realize_dynamics_pair(const ClassicalRealization& realization) {
    if (realization.completeness_defect() > 1e-10)
        throw std::invalid_argument("realize_dynamics_pair: realization violates completeness");
    DynamicsPair pair;
    pair.e1 = choi_from_kraus(realization.kraus_first);
    std::vector<CMatrix> composed;
    for (std::size_t i = 0; i < realization.kraus_first.size(); ++i)
        for (const CMatrix& g : realization.conditional_maps[i])
            composed.push_back(g * realization.kraus_first[i]);
    pair.e2 = choi_from_kraus(composed);
    return pair;
}

namespace {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        // Box-Muller on the engine's uniforms; portable across standard libraries
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {  // inclusive
        return lo + engine_() % (hi - lo + 1);
    }

    CMatrix ginibre(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(gaussian(), gaussian());
        return m;
    }

    // Haar unitary: QR of a Ginibre matrix with the phase convention fixed.
    CMatrix haar_unitary(std::size_t n) {
        CMatrix g = ginibre(n);
        // Gram-Schmidt columns
        CMatrix q(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<cplx> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = g(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, k);
            }
            double norm = 0.0;
            for (const cplx& x : v) norm += std::norm(x);
            norm = std::sqrt(norm);
            for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / norm;
            // fix the phase so the diagonal of R is positive
            cplx rjj = 0.0;
            for (std::size_t i = 0; i < n; ++i) rjj += std::conj(q(i, j)) * g(i, j);
            const cplx phase = rjj / std::abs(rjj);
            for (std::size_t i = 0; i < n; ++i) q(i, j) *= phase;
        }
        return q;
    }

    // Completeness-normalized Kraus set: G_k T^{-1/2} with T = sum G^dag G.
    std::vector<CMatrix> kraus_set(std::size_t n, std::size_t count) {
        std::vector<CMatrix> gs;
        CMatrix t(n, n);
        for (std::size_t k = 0; k < count; ++k) {
            gs.push_back(ginibre(n));
            t += gs.back().adjoint() * gs.back();
        }
        const CMatrix tinvroot = func_herm(t, [](double x) -> cplx {
            return 1.0 / std::sqrt(std::max(x, 1e-300));
        });
        for (CMatrix& g : gs) g = g * tinvroot;
        return gs;
    }

    CMatrix density_matrix(std::size_t n) {
        const CMatrix g = ginibre(n);
        CMatrix rho = g * g.adjoint();
        rho *= cplx(1.0 / rho.trace().real());
        return rho;
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Product-form CPT step: either a mixture of product unitaries or the product
// of two local Kraus sets.
std::vector<std::pair<CMatrix, CMatrix>> random_product_step(Rng& rng) {
    std::vector<std::pair<CMatrix, CMatrix>> step;
    if (rng.uniform() < 0.5) {
        const std::size_t branches = rng.integer(1, 3);
        std::vector<double> w(branches);
        double total = 0.0;
        for (double& x : w) {
            x = rng.uniform() + 1e-3;
            total += x;
        }
        for (std::size_t i = 0; i < branches; ++i) {
            const double p = w[i] / total;
            step.emplace_back(rng.haar_unitary(2) * cplx(std::sqrt(p)), rng.haar_unitary(2));
        }
    } else {
        const auto probe_set = rng.kraus_set(2, rng.integer(1, 2));
        const auto memory_set = rng.kraus_set(2, rng.integer(1, 2));
        for (const CMatrix& a : probe_set)
            for (const CMatrix& b : memory_set) step.emplace_back(a, b);
    }
    return step;
}

}  // namespace

SeparableDynamics random_separable(std::uint64_t seed) {
    Rng rng(seed);
    SeparableDynamics sep;
    sep.first_step = random_product_step(rng);
    for (std::size_t i = 0; i < sep.first_step.size(); ++i)
        sep.second_step.push_back(random_product_step(rng));
    sep.memory_state = rng.density_matrix(2);
    return sep;
}

}  // namespace gravmem
