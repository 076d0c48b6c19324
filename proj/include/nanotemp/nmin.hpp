#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nanotemp/criteria.hpp"

namespace nanotemp {

struct Material {
    std::string name;
    double theta_K;  // Debye temperature, kelvin
    double a0_m;     // lattice constant, meters
};

struct NminPoint {
    double t_ratio;
    long long n_min;                  // >= 2
    std::optional<double> bound1;     // empty when inapplicable
    double bound2;
    std::optional<double> l_min_m;    // n_min * a0 when a material is given
    bool debye_valid;                 // n_min >= 100 (n >> 1 assumption)
};

// Evaluate both harmonic-chain bounds at one temperature and combine them
// into the minimal admissible integer group size.
NminPoint nmin_at(double t_ratio, double alpha, double delta);

// High/low temperature estimates: 2*alpha/delta above Theta,
// (3*alpha/2pi^2)*(Theta/T)^3 below.
double nmin_asymptotic(double t_ratio, double alpha, double delta);

// Per-point nmin_at over a positive sorted grid; both raw bounds are kept
// so the two figure lines stay reconstructible. An optional lattice
// constant attaches l_min to every point.
std::vector<NminPoint> nmin_curve(std::span<const double> t_grid, double alpha,
                                  double delta,
                                  std::optional<double> a0_m = std::nullopt);

// Minimal length scale n_min(T/Theta) * a0 in meters.
double lmin(const Material& material, double temperature_K, double alpha,
            double delta);

// T/Theta at which the binding condition switches (the ebar = 1/4 point).
double bounds_crossing_t_ratio();

// Built-in table: iron, carbon, silicon.
const std::vector<Material>& builtin_materials();

// Case-insensitive lookup in the built-in table plus any extras.
std::optional<Material> find_material(
    const std::string& name,
    std::span<const Material> extra = {});

// Parse a JSON array of {name, theta_K, a0_angstrom} objects.
std::vector<Material> load_materials_json(const std::string& path);

}  // namespace nanotemp
