#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nanotemp {

// Moment inputs to the general first existence condition.
struct GeneralConditionInput {
    double E_a;       // product-state energy under H0
    double eps_a;     // first-order interaction shift <a|H|a> - <a|H0|a>
    double sigma2_a;  // energy variance of |a> under the full Hamiltonian, > 0
    double beta;      // inverse temperature
    double E0;        // ground-state energy of the full chain
    int n_groups;     // >= 2

    double y_a() const { return E_a + eps_a; }
};

struct CondSample {
    double E_a;
    double eps_a;
    double sigma2_a;
};

struct LinearFit {
    double c1;            // fitted slope of (-eps_a + beta*sigma2_a/2) vs E_a
    double intercept;     // absorbed c2
    double max_residual;  // max |deviation from the fitted line|
};

struct IntensivityCheck {
    double value;      // (2*beta/n^2) * (E0/N_G)
    double threshold;  // sqrt(delta)/(sqrt(2)*alpha) - delta/alpha^2
    bool passes;       // strict: value < threshold
};

enum class BindingCondition { Cond1, Cond2 };

struct CriterionReport {
    std::optional<double> bound_cond1;  // empty when inapplicable (ebar >= 1/4)
    double bound_cond2 = 0.0;
    double intensivity_const = 0.0;
    BindingCondition binding = BindingCondition::Cond2;
    long long n_min = 2;
    bool beta_loc_equals_beta = false;
};

// (1/sqrt(N_G)) * (E_a + eps_a - E0 - beta*sigma2_a) / (sqrt(2)*sigma_a).
// The first condition holds iff the margin is positive and bounded away
// from zero.
double cond1_margin(const GeneralConditionInput& inp);

// Ordinary least-squares fit of (-eps_a + beta*sigma2_a/2) against E_a.
// Requires >= 3 samples with distinct E_a.
LinearFit cond2_linearity(std::span<const CondSample> samples, double beta);

// Closed-form harmonic-chain bound from the first condition. Inapplicable
// (returns nullopt) once ebar >= 1/4, where the second condition is
// stronger. Otherwise: 4*(Theta/T)*(alpha/ebar)*(ebar/alpha + 1/4)^2.
std::optional<double> harm_bound_cond1(double t_ratio, double alpha,
                                       double ebar_value);

// Closed-form harmonic-chain bound from the subgroup condition:
// (2*alpha/delta)*(Theta/T)*ebar. Always applicable. Requires 0 < delta < 1.
double harm_bound_cond2(double t_ratio, double alpha, double delta,
                        double ebar_value);

// Energy-independent part of the subgroup condition and its admissibility
// threshold; passing implies beta_loc = beta (temperature is intensive).
IntensivityCheck intensivity_constant(long long n, double beta,
                                      double e0_per_group, double alpha,
                                      double delta);

// Full harmonic-chain report at one temperature: both bounds, the strict
// integer ceiling n_min (floored at 2), and the intensivity check at n_min.
CriterionReport evaluate_harmonic(double t_ratio, double alpha, double delta);

// Strict-inequality integer ceiling: smallest integer strictly above x.
long long strict_ceiling(double x);

}  // namespace nanotemp
