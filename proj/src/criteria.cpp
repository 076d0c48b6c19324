#include "nanotemp/criteria.hpp"

#include <cmath>
#include <stdexcept>

#include "nanotemp/debye.hpp"

namespace nanotemp {

long long strict_ceiling(double x) {
    return static_cast<long long>(std::floor(x)) + 1;
}

double cond1_margin(const GeneralConditionInput& inp) {
    if (!(inp.sigma2_a > 0.0)) {
        throw std::domain_error("cond1_margin: sigma2_a must be > 0");
    }
    if (inp.n_groups < 2) {
        throw std::domain_error("cond1_margin: n_groups must be >= 2");
    }
    const double numerator = inp.y_a() - inp.E0 - inp.beta * inp.sigma2_a;
    return numerator /
           (std::sqrt(static_cast<double>(inp.n_groups)) * std::sqrt(2.0 * inp.sigma2_a));
}

LinearFit cond2_linearity(std::span<const CondSample> samples, double beta) {
    if (samples.size() < 3) {
        throw std::invalid_argument("cond2_linearity: need at least 3 samples");
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& s : samples) {
        mean_x += s.E_a;
        mean_y += -s.eps_a + 0.5 * beta * s.sigma2_a;
    }
    mean_x /= samples.size();
    mean_y /= samples.size();

    double sxx = 0.0, sxy = 0.0;
    for (const auto& s : samples) {
        const double dx = s.E_a - mean_x;
        const double dy = (-s.eps_a + 0.5 * beta * s.sigma2_a) - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("cond2_linearity: samples must span distinct E_a");
    }

    LinearFit fit;
    fit.c1 = sxy / sxx;
    fit.intercept = mean_y - fit.c1 * mean_x;
    fit.max_residual = 0.0;
    for (const auto& s : samples) {
        const double y = -s.eps_a + 0.5 * beta * s.sigma2_a;
        const double r = std::abs(y - (fit.c1 * s.E_a + fit.intercept));
        fit.max_residual = std::max(fit.max_residual, r);
    }
    return fit;
}

std::optional<double> harm_bound_cond1(double t_ratio, double alpha,
                                       double ebar_value) {
    if (!(ebar_value > 0.0)) {
        throw std::domain_error("harm_bound_cond1: ebar must be > 0");
    }
    if (!(alpha >= 1.0)) {
        throw std::invalid_argument("harm_bound_cond1: alpha must be >= 1");
    }
    if (ebar_value >= 0.25) return std::nullopt;  // second condition is stronger
    const double w = ebar_value / alpha + 0.25;
    return 4.0 / t_ratio * (alpha / ebar_value) * w * w;
}

double harm_bound_cond2(double t_ratio, double alpha, double delta,
                        double ebar_value) {
    if (!(ebar_value > 0.0)) {
        throw std::domain_error("harm_bound_cond2: ebar must be > 0");
    }
    if (!(alpha >= 1.0)) {
        throw std::invalid_argument("harm_bound_cond2: alpha must be >= 1");
    }
    if (!(delta > 0.0) || delta >= 1.0) {
        throw std::invalid_argument("harm_bound_cond2: require 0 < delta < 1");
    }
    return (2.0 * alpha / delta) * ebar_value / t_ratio;
}

IntensivityCheck intensivity_constant(long long n, double beta,
                                      double e0_per_group, double alpha,
                                      double delta) {
    if (n < 1) throw std::invalid_argument("intensivity_constant: n must be >= 1");
    if (!(beta > 0.0)) throw std::invalid_argument("intensivity_constant: beta must be > 0");
    IntensivityCheck check;
    const double nd = static_cast<double>(n);
    check.value = 2.0 * beta / (nd * nd) * e0_per_group;
    check.threshold = std::sqrt(delta) / (std::sqrt(2.0) * alpha) - delta / (alpha * alpha);
    check.passes = check.value < check.threshold;
    return check;
}

CriterionReport evaluate_harmonic(double t_ratio, double alpha, double delta) {
    const double eb = ebar(t_ratio);
    CriterionReport report;
    report.bound_cond1 = harm_bound_cond1(t_ratio, alpha, eb);
    report.bound_cond2 = harm_bound_cond2(t_ratio, alpha, delta, eb);

    double max_bound = report.bound_cond2;
    report.binding = BindingCondition::Cond2;
    if (report.bound_cond1 && *report.bound_cond1 > max_bound) {
        max_bound = *report.bound_cond1;
        report.binding = BindingCondition::Cond1;
    }
    report.n_min = std::max<long long>(2, strict_ceiling(max_bound));

    // In internal units (Theta = pi*omega0, beta = 1/(t*Theta), Debye
    // E0/N_G = n*Theta/4) the constant reduces to 1/(2*t*n); Theta cancels.
    const double nd = static_cast<double>(report.n_min);
    report.intensivity_const = 1.0 / (2.0 * t_ratio * nd);
    const double threshold =
        std::sqrt(delta) / (std::sqrt(2.0) * alpha) - delta / (alpha * alpha);
    report.beta_loc_equals_beta = report.intensivity_const < threshold;
    return report;
}

}  // namespace nanotemp
