#pragma once

namespace gravmem {

// SI constants pinned for reproducibility of the estimates.
inline constexpr double kGravitationalConstant = 6.674e-11;  // m^3 kg^-1 s^-2
inline constexpr double kHbar = 1.0546e-34;                  // J s
inline constexpr double kTungstenDensity = 19300.0;          // kg m^-3

// Two masses in horizontal parallel superpositions with aligned centers.
struct QubitQubitSetup {
    double memory_mass = 0.0;   // M, kg
    double probe_mass = 0.0;    // m, kg
    double delta_x_memory = 0.0;  // branch separation of the memory, m
    double delta_x_probe = 0.0;   // branch separation of the probe, m
    double vertical_offset = 0.0; // d, m
};

// Probe qubit beside a ground-state spherical oscillator. Branch distances are
// measured from the oscillator center; from_surface_distances adds the sphere
// radius derived from the mass and density.
struct QubitOscillatorSetup {
    double probe_mass = 0.0;       // m, kg
    double oscillator_mass = 0.0;  // M, kg
    double frequency = 0.0;        // f, Hz
    double d_left = 0.0;           // m, near branch from center
    double d_right = 0.0;          // m, far branch from center
    double density = kTungstenDensity;

    static QubitOscillatorSetup from_surface_distances(double oscillator_mass, double frequency,
                                                       double surface_left, double surface_right,
                                                       double probe_mass = 0.0,
                                                       double density = kTungstenDensity);
    double sphere_radius() const;
    void validate() const;
};

// Coupling rate of the two-qubit setup, rad/s.
double qubit_qubit_coupling(const QubitQubitSetup& setup);

// Smallest interaction time with a negative analytical witness:
// tau = arccos(-1/3) / (4 g).
double min_negative_time(double g);

// Coupling rate of the qubit-oscillator setup, rad/s.
double qubit_osc_coupling(const QubitOscillatorSetup& setup);

// Probe mass needed for the qubit-oscillator witness to reach |w| =
// target_w_mag at interaction time tau = pi/(2 kappa). Inverts the weak
// coupling relation |w| ~ 2 g^2 / delta^2 with delta = 2 sqrt(kappa^2 - g^2)
// and uses the linearity of the coupling in the probe mass.
double required_probe_mass(const QubitOscillatorSetup& geometry, double target_w_mag, double tau);

}  // namespace gravmem
