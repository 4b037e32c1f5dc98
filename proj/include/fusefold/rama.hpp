#pragma once

#include <array>

#include "fusefold/priors.hpp"

namespace fusefold {

// Gaussian kernel centers for the three principal Ramachandran basins,
// in degrees: helix, strand, coil.
struct RamaConfig {
    std::array<std::array<double, 2>, 3> centers_deg = {{{-60.0, -45.0}, {-120.0, 130.0}, {0.0, 0.0}}};
    double sigma_deg = 40.0;
};

// SS3 probabilities (H, E, C) induced from one (phi, psi) pair in radians.
// Kernel distances use wrapped angular differences; arithmetic in degrees.
Ss3 induce_ss3(double phi_rad, double psi_rad, const RamaConfig& cfg = {});

// Fixed SS3 -> SS8 expansion, output order [H,G,I,E,B,T,S,L]:
// H -> 0.8/0.1/0.1 over (H,G,I), E -> 0.9/0.1 over (E,B), C -> even over (T,S,L).
Ss8 expand_ss8(const Ss3& p3);

// Inverse of the group map {H,G,I}->H, {E,B}->E, {T,S,L}->C.
Ss3 marginalize_ss8(const Ss8& p8);

}  // namespace fusefold
