#pragma once

#include <vector>

namespace nanotemp {

// Internal unit convention: hbar = k_B = 1. SI conversions happen at the
// CLI boundary only.
struct ChainParams {
    double mass;     // particle mass
    double omega0;   // base angular frequency of the chain
    double a0;       // lattice constant
    int n;           // particles per group, >= 1
    int n_groups;    // number of groups, >= 2

    ChainParams(double mass, double omega0, double a0, int n, int n_groups);

    // Debye temperature k_B*Theta = hbar*v*k_D with v = omega0*a0 and
    // k_D = pi/a0, i.e. Theta = pi*omega0 in internal units.
    double debye_theta() const;
};

// Normal-mode spectrum of one isolated group of n sites.
struct GroupSpectrum {
    std::vector<double> wavenumbers;  // k_l = pi*l/(a0*(n+1)), l = 1..n
    std::vector<double> frequencies;  // omega_l = 2*omega0*sin(k_l*a0/2), ascending
};

// Product eigenstate |a> of the decoupled groups, as per-group per-mode
// occupation numbers with the associated energy bookkeeping.
struct OccupationState {
    std::vector<std::vector<long long>> occupations;  // [group][mode]
    std::vector<double> group_energies;               // E_mu = sum_k omega_k (nu_k + 1/2)
    double total_energy = 0.0;                        // E_a = sum_mu E_mu
};

enum class GroundStateMode { Exact, Debye };

// omega(k) = 2*omega0*|sin(k*a0/2)|; requires 0 < k*a0 <= pi (band edge
// included as the limiting value 2*omega0).
double dispersion(const ChainParams& params, double k);

GroupSpectrum group_spectrum(const ChainParams& params);

// Debye: n*N_G*Theta/4. Exact: N_G * sum_k omega_k/2.
double ground_state_energy(const ChainParams& params, GroundStateMode mode);

// Fills E_mu and E_a for the given occupation lists (shape must be
// n_groups x n).
OccupationState state_energy(const ChainParams& params,
                             const std::vector<std::vector<long long>>& occupations);

}  // namespace nanotemp
