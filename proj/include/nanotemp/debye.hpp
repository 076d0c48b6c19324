#pragma once

#include "nanotemp/chain.hpp"

namespace nanotemp {

struct ThermalPoint {
    double t_ratio;     // T/Theta, > 0
    double ebar_value;  // per-site energy above ground state in units of k_B*Theta
    double beta;        // 1/T in internal units (requires Theta in internal units)
};

// Per-group energy window [e_min, e_max] centered on the thermal peak,
// widened by the accuracy parameter alpha >= 1.
struct EnergyRange {
    double e_min;
    double e_max;
    double alpha;
};

// integral_0^u x/(e^x - 1) dx, absolute accuracy 1e-12. u may be +inf
// (the full integral equals pi^2/6).
double bose_integral(double u);

// ebar(T/Theta) = (T/Theta)^2 * bose_integral(Theta/T).
double ebar(double t_ratio);

// Convenience: bundles t_ratio, ebar and beta = 1/(t_ratio*Theta) with
// Theta in internal units taken from the chain parameters.
ThermalPoint thermal_point(double t_ratio, const ChainParams& params);

// e_min = (1/alpha)*Ebar/N_G + E0/N_G, e_max = alpha*Ebar/N_G + E0/N_G,
// with Ebar = ebar*n*N_G*Theta and the Debye ground-state energy.
EnergyRange energy_range(const ThermalPoint& tp, const ChainParams& params,
                         double alpha);

// The unique T/Theta at which ebar = 1/4 (the Ebar = E0 point), located
// by bisection. Used by the criteria applicability switch.
double ebar_quarter_crossing();

}  // namespace nanotemp
