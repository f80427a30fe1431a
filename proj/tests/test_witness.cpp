#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gravmem/witness.hpp"

using namespace gravmem;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("correlator basics") {
    const CMatrix identity_choi = bell_projector(2);
    CHECK(correlator(identity_choi, pauli_x(), pauli_x()) == doctest::Approx(2.0));
    CHECK(correlator(identity_choi, pauli_z(), pauli_z()) == doctest::Approx(2.0));

    // sy is transpose-antisymmetric and must be rejected
    CHECK_THROWS_AS(correlator(identity_choi, pauli_y(), pauli_y()), std::invalid_argument);
}

TEST_CASE("correlators of the protocol match the Kraus algebra") {
    for (double theta : {0.0, 0.2, 0.7, kPi / 4.0}) {
        const DynamicsPair pair = dynamics_pair(TwoQubitProtocol::with_theta(theta));
        const CorrelatorSet corr = correlators_of(pair);
        const double s = std::sin(2.0 * theta);
        CHECK(corr.c_z1 == doctest::Approx(2.0 * s * s).epsilon(1e-10));
        CHECK(corr.c_xx2 == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(corr.c_zz2 == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(std::abs(corr.c_z1) <= 2.0 + 1e-12);
    }
}

TEST_CASE("analytical witness closed form") {
    const DynamicsPair at45 = dynamics_pair(TwoQubitProtocol::with_theta(kPi / 4.0));
    CHECK(analytical_witness(correlators_of(at45), 1.0) ==
          doctest::Approx(-2.0 / 3.0).epsilon(1e-12));

    const DynamicsPair at0 = dynamics_pair(TwoQubitProtocol::with_theta(0.0));
    CHECK(analytical_witness(correlators_of(at0), 1.0) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    for (int k = 0; k < 50; ++k) {
        const double theta = kPi / 2.0 * k / 49.0;
        const DynamicsPair pair = dynamics_pair(TwoQubitProtocol::with_theta(theta));
        const double w = analytical_witness(correlators_of(pair), 1.0);
        CHECK(std::abs(w - (1.0 / 3.0 + std::cos(4.0 * theta))) < 1e-9);
    }

    CHECK_THROWS_AS(analytical_witness(CorrelatorSet{}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(analytical_witness(CorrelatorSet{}, -1.0), std::invalid_argument);
}

TEST_CASE("sign of w is invariant under lambda rescaling") {
    for (double theta : {0.3, 0.7, 1.2}) {
        const CorrelatorSet corr =
            correlators_of(dynamics_pair(TwoQubitProtocol::with_theta(theta)));
        const double w1 = analytical_witness(corr, 1.0);
        const double w2 = analytical_witness(corr, 0.37);
        CHECK(std::signbit(w1) == std::signbit(w2));
    }
}

TEST_CASE("operator pairing agrees with the correlator form") {
    for (double theta : {0.0, 0.45, kPi / 4.0, 1.3}) {
        const DynamicsPair pair = dynamics_pair(TwoQubitProtocol::with_theta(theta));
        for (double lambda : {1.0, 0.25}) {
            const double via_ops = witness_value(analytical_witness_operators(lambda), pair);
            const double via_corr = analytical_witness(correlators_of(pair), lambda);
            CHECK(via_ops == doctest::Approx(via_corr).epsilon(1e-12));
        }
    }
}

TEST_CASE("witness lhs is Hermitian for any real coefficients") {
    for (const WitnessOperators w :
         {WitnessOperators{0.3, -1.7, 2.2, -0.4}, WitnessOperators{-1.0, 0.0, 0.5, 3.0}}) {
        CHECK(witness_lhs(w).hermiticity_defect() < 1e-12);
        CHECK(w.W1().hermiticity_defect() < 1e-12);
        CHECK(w.W2().hermiticity_defect() < 1e-12);
    }
}

TEST_CASE("witness operators reconstruct their coefficients") {
    const WitnessOperators w{0.7, -0.3, 0.2, -1.1};
    const CMatrix w1 = w.W1(), w2 = w.W2();
    CHECK(w1.trace().real() / 4.0 == doctest::Approx(w.w11));
    CHECK((kron(CMatrix::identity(2), pauli_z()) * w1).trace().real() / 4.0 ==
          doctest::Approx(w.w1z));
    CHECK((kron(pauli_x(), pauli_x()) * w2).trace().real() / 4.0 == doctest::Approx(w.wxx));
    CHECK((kron(pauli_z(), pauli_z()) * w2).trace().real() / 4.0 == doctest::Approx(w.wzz));
}

TEST_CASE("certificate validates the analytical witness") {
    const WitnessCertificate cert = certify_witness(analytical_witness_operators(1.0));
    CHECK(cert.valid);
    CHECK(cert.min_eig_Q >= -1e-10);
    CHECK(cert.min_eig_R >= -1e-10);
    CHECK(cert.residual < 1e-8);
    // R is the rank-one kappa ansatz at scale lambda = 1
    CHECK(max_abs_diff(cert.R, kappa_projector()) < 1e-14);
    CHECK(std::abs(cert.gauge_z.trace().real()) < 1e-9);
}

TEST_CASE("certificate rejects a plainly invalid family") {
    const WitnessCertificate cert = certify_witness(WitnessOperators{0.0, 0.0, -1.0, 0.0});
    CHECK(!cert.valid);
    CHECK(cert.min_eig_Q < -1e-6);
}

TEST_CASE("pure positive family is valid without R") {
    const WitnessCertificate cert = certify_witness(WitnessOperators{1.0, 0.0, 0.0, 0.0});
    CHECK(cert.valid);
    CHECK(cert.R.max_abs() == 0.0);
}
