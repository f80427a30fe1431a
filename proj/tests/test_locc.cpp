#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gravmem/locc.hpp"
#include "gravmem/witness.hpp"

using namespace gravmem;

namespace {

// brute-force trace-out of the full separable dynamics against rho_M
DynamicsPair trace_out_oracle(const SeparableDynamics& sep) {
    auto choi_of = [&](bool second) {
        CMatrix choi(4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                CMatrix eij(2, 2);
                eij(i, j) = 1.0;
                const CMatrix input = kron(eij, sep.memory_state);
                CMatrix evolved(4, 4);
                for (std::size_t b1 = 0; b1 < sep.first_step.size(); ++b1) {
                    const CMatrix k1 =
                        kron(sep.first_step[b1].first, sep.first_step[b1].second);
                    const CMatrix mid = k1 * input * k1.adjoint();
                    if (!second) {
                        evolved += mid;
                        continue;
                    }
                    for (const auto& [c, d] : sep.second_step[b1]) {
                        const CMatrix k2 = kron(c, d);
                        evolved += k2 * mid * k2.adjoint();
                    }
                }
                const CMatrix reduced = partial_trace(evolved, {2, 2}, {0});
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b)
                        choi(i * 2 + a, j * 2 + b) = reduced(a, b);
            }
        return choi;
    };
    DynamicsPair pair;
    pair.e1 = choi_of(false);
    pair.e2 = choi_of(true);
    return pair;
}

}  // namespace

TEST_CASE("single unitary pair is trivially classical") {
    SeparableDynamics sep;
    const CMatrix u = phase_gate_s();
    sep.first_step = {{u, u}};
    sep.second_step = {{{u, u}}};
    sep.memory_state = CMatrix(2, 2);
    sep.memory_state(0, 0) = 1.0;
    const ClassicalRealization real = classical_decomposition(sep);
    REQUIRE(real.kraus_first.size() == 1);
    CHECK(max_abs_diff(real.kraus_first[0], u) < 1e-14);
    CHECK(real.completeness_defect() < 1e-12);
}

TEST_CASE("theta = 0 protocol recast as unitary steps reproduces its pair") {
    // first step (S (x) S), second step (Z S^2 (x) S^2): together these give
    // the same probe maps as the protocol at theta = 0
    const CMatrix s = phase_gate_s();
    SeparableDynamics sep;
    sep.first_step = {{s, s}};
    sep.second_step = {{{pauli_z() * s * s, s * s}}};
    sep.memory_state = CMatrix(2, 2);
    sep.memory_state(1, 1) = 1.0;
    const DynamicsPair from_decomposition =
        realize_dynamics_pair(classical_decomposition(sep));
    const DynamicsPair from_protocol = dynamics_pair(TwoQubitProtocol::with_theta(0.0));
    CHECK(max_abs_diff(from_decomposition.e1, from_protocol.e1) < 1e-12);
    CHECK(max_abs_diff(from_decomposition.e2, from_protocol.e2) < 1e-12);
}

TEST_CASE("decomposition matches the brute-force trace-out oracle") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const SeparableDynamics sep = random_separable(seed);
        REQUIRE(sep.completeness_defect() < 1e-10);
        const DynamicsPair via_construction =
            realize_dynamics_pair(classical_decomposition(sep));
        const DynamicsPair via_oracle = trace_out_oracle(sep);
        CHECK(max_abs_diff(via_construction.e1, via_oracle.e1) < 1e-12);
        CHECK(max_abs_diff(via_construction.e2, via_oracle.e2) < 1e-12);
        validate_dynamics_pair(via_construction);
    }
}

TEST_CASE("branch probabilities sum to one") {
    for (std::uint64_t seed = 40; seed < 45; ++seed) {
        const ClassicalRealization real =
            classical_decomposition(random_separable(seed));
        double total = 0.0;
        for (const CMatrix& k : real.kraus_first)
            total += (k.adjoint() * k).trace().real() / 2.0;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("identity and dephasing realizations") {
    ClassicalRealization identity;
    identity.kraus_first = {CMatrix::identity(2)};
    identity.conditional_maps = {{CMatrix::identity(2)}};
    const DynamicsPair idp = realize_dynamics_pair(identity);
    CHECK(max_abs_diff(idp.e1, bell_projector(2)) < 1e-14);
    CHECK(max_abs_diff(idp.e2, bell_projector(2)) < 1e-14);

    // full dephasing first step with conditional unitaries
    CMatrix p0(2, 2), p1(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    ClassicalRealization dephasing;
    dephasing.kraus_first = {p0, p1};
    dephasing.conditional_maps = {{phase_gate_s()}, {pauli_x()}};
    const DynamicsPair dp = realize_dynamics_pair(dephasing);
    validate_dynamics_pair(dp);
}

TEST_CASE("negative control: classical pairs never score negative") {
    double min_w = 1e9;
    for (std::uint64_t seed = 100; seed < 150; ++seed) {
        const DynamicsPair pair =
            realize_dynamics_pair(classical_decomposition(random_separable(seed)));
        const double w = analytical_witness(correlators_of(pair), 1.0);
        min_w = std::min(min_w, w);
    }
    CHECK(min_w >= -1e-8);
}

TEST_CASE("determinism of the seeded generator") {
    const SeparableDynamics a = random_separable(123);
    const SeparableDynamics b = random_separable(123);
    CHECK(max_abs_diff(a.memory_state, b.memory_state) == 0.0);
    REQUIRE(a.first_step.size() == b.first_step.size());
    for (std::size_t i = 0; i < a.first_step.size(); ++i) {
        CHECK(max_abs_diff(a.first_step[i].first, b.first_step[i].first) == 0.0);
        CHECK(max_abs_diff(a.first_step[i].second, b.first_step[i].second) == 0.0);
    }
}

TEST_CASE("violated completeness is rejected") {
    SeparableDynamics sep;
    sep.first_step = {{phase_gate_s() * cplx(0.5), phase_gate_s()}};
    sep.second_step = {{{phase_gate_s(), phase_gate_s()}}};
    sep.memory_state = CMatrix::identity(2) * cplx(0.5);
    CHECK_THROWS_AS(classical_decomposition(sep), std::invalid_argument);
}
