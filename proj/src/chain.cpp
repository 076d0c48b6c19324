#include "nanotemp/chain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nanotemp {

ChainParams::ChainParams(double mass_, double omega0_, double a0_, int n_,
                         int n_groups_)
    : mass(mass_), omega0(omega0_), a0(a0_), n(n_), n_groups(n_groups_) {
    if (!(mass > 0.0)) throw std::invalid_argument("ChainParams: mass must be > 0");
    if (!(omega0 > 0.0)) throw std::invalid_argument("ChainParams: omega0 must be > 0");
    if (!(a0 > 0.0)) throw std::invalid_argument("ChainParams: a0 must be > 0");
    if (n < 1) throw std::invalid_argument("ChainParams: n must be >= 1");
    if (n_groups < 2) throw std::invalid_argument("ChainParams: n_groups must be >= 2");
}

double ChainParams::debye_theta() const { return std::numbers::pi * omega0; }

double dispersion(const ChainParams& params, double k) {
    const double u = k * params.a0;
    if (!(u > 0.0) || u > std::numbers::pi) {
        throw std::domain_error("dispersion: require 0 < k*a0 <= pi, got k*a0 = " +
                                std::to_string(u));
    }
    return 2.0 * params.omega0 * std::abs(std::sin(0.5 * u));
}

GroupSpectrum group_spectrum(const ChainParams& params) {
    GroupSpectrum spectrum;
    spectrum.wavenumbers.reserve(params.n);
    spectrum.frequencies.reserve(params.n);
    for (int l = 1; l <= params.n; ++l) {
        const double k = std::numbers::pi * l / (params.a0 * (params.n + 1));
        spectrum.wavenumbers.push_back(k);
        spectrum.frequencies.push_back(dispersion(params, k));
    }
    return spectrum;
}

double ground_state_energy(const ChainParams& params, GroundStateMode mode) {
    if (mode == GroundStateMode::Debye) {
        return 0.25 * params.n * params.n_groups * params.debye_theta();
    }
    const GroupSpectrum spectrum = group_spectrum(params);
    double per_group = 0.0;
    for (double w : spectrum.frequencies) per_group += 0.5 * w;
    return params.n_groups * per_group;
}

OccupationState state_energy(const ChainParams& params,
                             const std::vector<std::vector<long long>>& occupations) {
    if (static_cast<int>(occupations.size()) != params.n_groups) {
        throw std::invalid_argument("state_energy: expected " +
                                    std::to_string(params.n_groups) +
                                    " occupation lists");
    }
    const GroupSpectrum spectrum = group_spectrum(params);
    OccupationState state;
    state.occupations = occupations;
    state.group_energies.reserve(params.n_groups);
    for (const auto& group : occupations) {
        if (static_cast<int>(group.size()) != params.n) {
            throw std::invalid_argument("state_energy: each group needs " +
                                        std::to_string(params.n) + " occupations");
        }
        double e_mu = 0.0;
        for (int l = 0; l < params.n; ++l) {
            if (group[l] < 0) {
                throw std::invalid_argument("state_energy: occupations must be >= 0");
            }
            e_mu += spectrum.frequencies[l] * (static_cast<double>(group[l]) + 0.5);
        }
        state.group_energies.push_back(e_mu);
        state.total_energy += e_mu;
    }
    return state;
}

}  // namespace nanotemp
