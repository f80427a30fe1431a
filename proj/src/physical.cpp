#include "gravmem/physical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gravmem {

QubitOscillatorSetup QubitOscillatorSetup::from_surface_distances(double oscillator_mass,
                                                                  double frequency,
                                                                  double surface_left,
                                                                  double surface_right,
                                                                  double probe_mass,
                                                                  double density) {
    QubitOscillatorSetup s;
    s.probe_mass = probe_mass;
    s.oscillator_mass = oscillator_mass;
    s.frequency = frequency;
    s.density = density;
    const double r = s.sphere_radius();
    s.d_left = surface_left + r;
    s.d_right = surface_right + r;
    return s;
}

double QubitOscillatorSetup::sphere_radius() const {
    return std::cbrt(3.0 * oscillator_mass / (4.0 * std::numbers::pi * density));
}

void QubitOscillatorSetup::validate() const {
    if (oscillator_mass <= 0.0 || frequency <= 0.0 || density <= 0.0)
        throw std::invalid_argument("qubit-oscillator setup: mass, frequency, density must be > 0");
    if (!(d_right > d_left))
        throw std::invalid_argument("qubit-oscillator setup: requires d_right > d_left");
    if (!(d_left > sphere_radius()))
        throw std::invalid_argument("qubit-oscillator setup: near branch is inside the sphere");
}

double qubit_qubit_coupling(const QubitQubitSetup& setup) {
    if (setup.memory_mass <= 0.0 || setup.probe_mass <= 0.0)
        throw std::invalid_argument("qubit_qubit_coupling: masses must be > 0");
    if (setup.delta_x_memory <= 0.0 || setup.delta_x_probe <= 0.0 || setup.vertical_offset < 0.0)
        throw std::invalid_argument("qubit_qubit_coupling: bad geometry");
    const double half_diff = (setup.delta_x_memory - setup.delta_x_probe) / 2.0;
    const double half_sum = (setup.delta_x_memory + setup.delta_x_probe) / 2.0;
    const double d2 = setup.vertical_offset * setup.vertical_offset;
    const double near2 = half_diff * half_diff + d2;
    if (near2 == 0.0)
        throw std::invalid_argument("qubit_qubit_coupling: coincident branches");
    const double prefactor = kGravitationalConstant * setup.memory_mass * setup.probe_mass /
                             (2.0 * kHbar);
    return prefactor * (1.0 / std::sqrt(near2) - 1.0 / std::sqrt(half_sum * half_sum + d2));
}

double min_negative_time(double g) {
    if (!(g > 0.0)) throw std::invalid_argument("min_negative_time: g must be > 0");
    return std::acos(-1.0 / 3.0) / (4.0 * g);
}

double qubit_osc_coupling(const QubitOscillatorSetup& setup) {
    setup.validate();
    if (setup.probe_mass <= 0.0)
        throw std::invalid_argument("qubit_osc_coupling: probe mass must be > 0");
    const double omega = 2.0 * std::numbers::pi * setup.frequency;
    const double prefactor = kGravitationalConstant * setup.probe_mass *
                             std::sqrt(setup.oscillator_mass) / std::sqrt(8.0 * kHbar * omega);
    return prefactor *
           (1.0 / (setup.d_left * setup.d_left) - 1.0 / (setup.d_right * setup.d_right));
}

double required_probe_mass(const QubitOscillatorSetup& geometry, double target_w_mag, double tau) {
    if (!(target_w_mag > 0.0) || !(tau > 0.0))
        throw std::invalid_argument("required_probe_mass: target and tau must be > 0");
    if (target_w_mag >= 1.0)
        throw std::invalid_argument(
            "required_probe_mass: target magnitude must be < 1 (weak-coupling regime)");
    const double kappa = std::numbers::pi / (2.0 * tau);
    const double g = kappa * std::sqrt(2.0 * target_w_mag / (1.0 + 2.0 * target_w_mag));
    if (!(g < kappa))
        throw std::invalid_argument("required_probe_mass: inconsistent (tau, target), g >= kappa");
    QubitOscillatorSetup unit = geometry;
    unit.probe_mass = 1.0;
    const double g_per_kg = qubit_osc_coupling(unit);
    return g / g_per_kg;
}

}  // namespace gravmem
