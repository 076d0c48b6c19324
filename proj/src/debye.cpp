#include "nanotemp/debye.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nanotemp {

namespace {

// Integrand x/(e^x - 1), with the removable singularity at 0 taken as 1.
double bose_integrand(double x) {
    if (x < 1e-8) return 1.0 - 0.5 * x;  // avoids 0/0 with full precision
    return x / std::expm1(x);
}

// integral_0^s x/(e^x - 1) dx by the Bernoulli series of the integrand,
// s - s^2/4 + s^3/36 - s^5/3600 + s^7/211680 - s^9/10886400. For s <= 0.01
// the truncation is far below 1e-16 absolute.
double series_segment(double s) {
    const double s2 = s * s;
    return s * (1.0 + s * (-0.25 + s * (1.0 / 36.0 +
           s2 * (-1.0 / 3600.0 + s2 * (1.0 / 211680.0 - s2 / 10886400.0)))));
}

// 20-node Gauss-Legendre on [-1, 1].
constexpr std::array<double, 10> kGlNodes = {
    0.0765265211334973, 0.2277858511416451, 0.3737060887154196,
    0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
    0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
    0.9931285991850949};
constexpr std::array<double, 10> kGlWeights = {
    0.1527533871307258, 0.1491729864726037, 0.1420961093183821,
    0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
    0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
    0.0176140071391521};

double gl20(double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
        sum += kGlWeights[i] *
               (bose_integrand(c - h * kGlNodes[i]) + bose_integrand(c + h * kGlNodes[i]));
    }
    return h * sum;
}

double adaptive_gl(double a, double b, double tol, int depth) {
    const double whole = gl20(a, b);
    const double mid = 0.5 * (a + b);
    const double split = gl20(a, mid) + gl20(mid, b);
    if (std::abs(whole - split) < tol || depth > 40) return split;
    return adaptive_gl(a, mid, 0.5 * tol, depth + 1) +
           adaptive_gl(mid, b, 0.5 * tol, depth + 1);
}

// integral_a^b x e^{-x}/(1 - e^{-x}) dx = sum_k [ (a k + 1) e^{-a k}
//   - (b k + 1) e^{-b k} ] / k^2, used for the tail beyond x = 40 where
// two terms already reach 1e-30 absolute.
double tail_segment(double a, double b) {
    double sum = 0.0;
    for (int k = 1; k <= 4; ++k) {
        double term = (a * k + 1.0) * std::exp(-a * k);
        if (std::isfinite(b)) term -= (b * k + 1.0) * std::exp(-b * k);
        sum += term / (static_cast<double>(k) * k);
    }
    return sum;
}

constexpr double kSeriesEnd = 1e-2;
constexpr double kTailStart = 40.0;

}  // namespace

double bose_integral(double u) {
    if (std::isnan(u) || u < 0.0) {
        throw std::domain_error("bose_integral: upper limit must be >= 0");
    }
    if (u == 0.0) return 0.0;
    if (u <= kSeriesEnd) return series_segment(u);

    double result = series_segment(kSeriesEnd);
    const double mid_end = std::min(u, kTailStart);
    result += adaptive_gl(kSeriesEnd, mid_end, 1e-13, 0);
    if (u > kTailStart) result += tail_segment(kTailStart, u);
    return result;
}

double ebar(double t_ratio) {
    if (!(t_ratio > 0.0)) {
        throw std::domain_error("ebar: t_ratio must be > 0");
    }
    return t_ratio * t_ratio * bose_integral(1.0 / t_ratio);
}

ThermalPoint thermal_point(double t_ratio, const ChainParams& params) {
    ThermalPoint tp;
    tp.t_ratio = t_ratio;
    tp.ebar_value = ebar(t_ratio);
    tp.beta = 1.0 / (t_ratio * params.debye_theta());
    return tp;
}

EnergyRange energy_range(const ThermalPoint& tp, const ChainParams& params,
                         double alpha) {
    if (!(alpha >= 1.0)) {
        throw std::invalid_argument("energy_range: alpha must be >= 1");
    }
    const double theta = params.debye_theta();
    const double ebar_per_group = tp.ebar_value * params.n * theta;  // Ebar/N_G
    const double e0_per_group = 0.25 * params.n * theta;             // Debye E0/N_G
    EnergyRange range;
    range.alpha = alpha;
    range.e_min = ebar_per_group / alpha + e0_per_group;
    range.e_max = ebar_per_group * alpha + e0_per_group;
    return range;
}

double ebar_quarter_crossing() {
    double lo = 0.1, hi = 1.0;  // ebar(0.1) ~ 0.016, ebar(1) ~ 0.78
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ebar(mid) < 0.25 ? lo : hi) = mid;
        if (hi - lo < 1e-14) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace nanotemp
