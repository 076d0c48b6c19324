// Integration gate: one pass/fail line per criterion. Run with the CLI
// binary path as the first argument; an optional second argument selects a
// single criterion by number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

#include "nanotemp/criteria.hpp"
#include "nanotemp/debye.hpp"
#include "nanotemp/fock_oracle.hpp"
#include "nanotemp/nmin.hpp"
#include "oracle_quadrature.hpp"

using namespace nanotemp;

namespace {

std::string g_cli_path;

struct Outcome {
    bool passed;
    std::string detail;
};

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_command(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
        output.append(buf, got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// 1. Silicon at 1 K: the CLI reports a length scale of roughly a tenth of
//    a meter, in well under a second.
Outcome criterion1() {
    if (g_cli_path.empty()) return {false, "CLI binary path not supplied"};
    const std::string cmd = "\"" + g_cli_path +
                            "\" lmin --material silicon --T 1 --alpha 10 "
                            "--delta 0.01 --format json 2>/dev/null";
    const auto t0 = std::chrono::steady_clock::now();
    const CommandResult res = run_command(cmd);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.exit_code != 0) return {false, "CLI exited with " + std::to_string(res.exit_code)};
    double l = 0.0;
    try {
        l = nlohmann::json::parse(res.output).at("l_min_m").get<double>();
    } catch (const std::exception& e) {
        return {false, std::string("bad CLI output: ") + e.what()};
    }
    const bool ok = l >= 0.05 && l <= 0.2 && secs < 1.0;
    return {ok, "l_min = " + fmt(l) + " m in " + fmt(secs) + " s"};
}

// 2. High-temperature plateau: n_min within 5% of 2*alpha/delta = 2000.
Outcome criterion2() {
    bool ok = true;
    std::ostringstream detail;
    for (double t : {10.0, 100.0, 1000.0}) {
        const long long n = nmin_at(t, 10.0, 0.01).n_min;
        ok = ok && std::abs(static_cast<double>(n) - 2000.0) <= 100.0;
        detail << "n_min(" << t << ") = " << n << "  ";
    }
    return {ok, detail.str()};
}

// 3. Low-temperature power law: slope -3.00 +- 0.05 and prefactor within
//    5% of 3*alpha/(2*pi^2) on T/Theta in [1e-4, 1e-3].
Outcome criterion3() {
    std::vector<double> grid;
    for (int i = 0; i <= 24; ++i) grid.push_back(1e-4 * std::pow(10.0, i / 24.0));
    const auto pts = nmin_curve(grid, 10.0, 0.01);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : pts) {
        const double x = std::log(p.t_ratio);
        const double y = std::log(static_cast<double>(p.n_min));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double prefactor = std::exp((sy - slope * sx) / n);
    const double target = 3.0 * 10.0 / (2.0 * std::numbers::pi * std::numbers::pi);
    const bool ok = std::abs(slope + 3.0) <= 0.05 &&
                    std::abs(prefactor - target) <= 0.05 * target;
    return {ok, "slope = " + fmt(slope) + ", prefactor = " + fmt(prefactor) +
                    " (target " + fmt(target) + ")"};
}

// 4. Bound structure: the two bounds cross at T/Theta = 0.45 +- 0.03 and
//    the first bound is inapplicable everywhere above the crossing.
Outcome criterion4() {
    const double crossing = bounds_crossing_t_ratio();
    bool ok = std::abs(crossing - 0.45) <= 0.03;
    bool above_ok = true;
    for (double t = crossing * 1.000001; t <= 1e4; t *= 1.5) {
        above_ok = above_ok && !nmin_at(t, 10.0, 0.01).bound1.has_value();
    }
    const bool below_ok = nmin_at(crossing * 0.999999, 10.0, 0.01).bound1.has_value();
    ok = ok && above_ok && below_ok;
    return {ok, "crossing at T/Theta = " + fmt(crossing) +
                    (above_ok ? ", bound1 absent above" : ", bound1 LEAKED above")};
}

// 5. Quadrature identity against an independent tanh-sinh oracle.
Outcome criterion5() {
    const double inf = std::numeric_limits<double>::infinity();
    const double full = bose_integral(inf);
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    const double oracle = tanh_sinh_integrate(
        [](double x) { return x > 1e-12 ? x / std::expm1(x) : 1.0; }, 0.0, 1.0);
    const double e1 = ebar(1.0);
    const bool ok = std::abs(full - pi2_6) < 1e-10 &&
                    std::abs(e1 - 0.77751) <= 1e-5 && std::abs(e1 - oracle) <= 1e-5;
    return {ok, "bose(inf) - pi^2/6 = " + fmt(full - pi2_6) +
                    ", ebar(1) = " + fmt(e1) + ", oracle = " + fmt(oracle)};
}

// 6. Moment identities of the exact oracle across small chains. The
//    two-group systems violate sigma_tilde = 0 and variance additivity
//    through the doubled wrap-around bond; that failure is reported, not
//    masked.
Outcome criterion6() {
    double worst_eps = 0.0, worst_tilde = 0.0, worst_add = 0.0;
    std::string worst_at;
    for (int n : {1, 2}) {
        for (int ng : {2, 3}) {
            for (int d : {4, 6}) {
                const ChainParams params(1.0, 1.0, 1.0, n, ng);
                const TruncatedBasis basis(params, d, std::size_t{1} << 20);
                for (int excited = 0; excited < 2; ++excited) {
                    std::vector<std::vector<long long>> occ(
                        ng, std::vector<long long>(n, 0));
                    occ[0][0] = excited;
                    const MomentSet m = moments(basis, state_energy(params, occ));
                    double sum_mu = 0.0;
                    for (int mu = 0; mu < ng; ++mu) {
                        worst_eps = std::max(worst_eps, std::abs(m.eps_mu[mu]));
                        sum_mu += m.sigma2_mu[mu];
                        const double tilde = std::abs(m.sigma2_tilde_mu[mu]);
                        if (tilde > worst_tilde) {
                            worst_tilde = tilde;
                            worst_at = "n=" + std::to_string(n) +
                                       " NG=" + std::to_string(ng);
                        }
                    }
                    worst_add = std::max(
                        worst_add, std::abs(m.sigma2_a - sum_mu) / m.sigma2_a);
                }
            }
        }
    }
    const bool ok = worst_eps < 1e-10 && worst_tilde < 1e-10 && worst_add < 1e-10;
    return {ok, "max |eps_mu| = " + fmt(worst_eps) +
                    ", max |sigma_tilde^2| = " + fmt(worst_tilde) +
                    (worst_at.empty() ? "" : " (" + worst_at + ")") +
                    ", max additivity dev = " + fmt(worst_add)};
}

// 7. Spectral cross-check: dense-diagonalization mean/variance reproduce
//    the ladder-algebra moments on every tested state.
Outcome criterion7() {
    struct System { int n, ng, d; };
    const std::vector<System> systems = {
        {1, 2, 4}, {1, 3, 4}, {1, 4, 4}, {1, 5, 4},
        {1, 2, 6}, {2, 2, 4}, {2, 2, 6}};
    double worst = 0.0;
    int states = 0;
    for (const auto& sys : systems) {
        const ChainParams params(1.0, 1.0, 1.0, sys.n, sys.ng);
        const TruncatedBasis basis(params, sys.d);
        for (int excited = 0; excited < 2; ++excited) {
            std::vector<std::vector<long long>> occ(
                sys.ng, std::vector<long long>(sys.n, 0));
            occ[0][0] = excited;
            const OccupationState state = state_energy(params, occ);
            const MomentSet m = moments(basis, state);
            const WDistribution w = w_distribution(basis, state);
            const double dm = std::abs(w.mean - m.y_a) / std::abs(m.y_a);
            const double dv = std::abs(w.variance - m.sigma2_a) / m.sigma2_a;
            worst = std::max({worst, dm, dv});
            ++states;
        }
    }
    return {worst < 1e-8,
            "worst rel dev = " + fmt(worst) + " over " + std::to_string(states) +
                " states"};
}

// 8. Gaussianization trend: |skewness| of w_a(E) strictly decreasing over
//    N_G = 2 -> 3 -> 4 for single-site vacuum chains, with sigma_a^2/N_G
//    bounded below. The 3 -> 4 step rises back to its two-group value
//    (both wrap covariance effects are exact), so the trend check fails
//    and is reported as such.
Outcome criterion8() {
    std::vector<double> skew;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int ng : {2, 3, 4}) {
        const ChainParams params(1.0, 1.0, 1.0, 1, ng);
        const TruncatedBasis basis(params, 4);
        std::vector<std::vector<long long>> occ(ng, std::vector<long long>(1, 0));
        const OccupationState state = state_energy(params, occ);
        skew.push_back(std::abs(w_distribution(basis, state).skewness));
        min_ratio = std::min(min_ratio, moments(basis, state).sigma2_a / ng);
    }
    const bool decreasing = skew[0] > skew[1] && skew[1] > skew[2];
    const bool floor_ok = min_ratio > 0.05;
    return {decreasing && floor_ok,
            "|skew| = " + fmt(skew[0]) + " -> " + fmt(skew[1]) + " -> " +
                fmt(skew[2]) + ", min sigma_a^2/N_G = " + fmt(min_ratio)};
}

// 9. Documented deviation: the closed-form bounds put hot iron near 0.5 um
//    and room-temperature carbon near 0.13 um. The original order-of-
//    magnitude estimates (50 um and 10 um) are not reproducible from those
//    bounds; asserting our values guards against silent drift toward them.
Outcome criterion9() {
    const Material iron = *find_material("iron");
    const Material carbon = *find_material("carbon");
    const double l_iron = lmin(iron, 1000.0 * iron.theta_K, 10.0, 0.01);
    const double l_carbon = lmin(carbon, 270.0, 10.0, 0.01);
    const bool ok = std::abs(l_iron - 5.0e-7) <= 0.02 * 5.0e-7 &&
                    std::abs(l_carbon - 1.3125e-7) <= 0.02 * 1.3125e-7;
    return {ok, "iron (T >> Theta) l_min = " + fmt(l_iron) +
                    " m, carbon (270 K) l_min = " + fmt(l_carbon) + " m"};
}

struct Criterion {
    int number;
    double time_limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    int selected = 0;
    if (argc > 2) selected = std::atoi(argv[2]);

    const std::vector<Criterion> criteria = {
        {1, 1.0, criterion1}, {2, 1.0, criterion2}, {3, 1.0, criterion3},
        {4, 1.0, criterion4}, {5, 5.0, criterion5}, {6, 30.0, criterion6},
        {7, 60.0, criterion7}, {8, 30.0, criterion8}, {9, 1.0, criterion9},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (selected != 0 && c.number != selected) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (secs > c.time_limit_s) {
            outcome.passed = false;
            outcome.detail += " [exceeded " + fmt(c.time_limit_s) + " s budget: " +
                              fmt(secs) + " s]";
        }
        std::cout << (outcome.passed ? "PASS" : "FAIL") << "  criterion "
                  << c.number << ": " << outcome.detail << '\n';
        all_ok = all_ok && outcome.passed;
    }
    return all_ok ? 0 : 1;
}
