#include "nanotemp/nmin.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nanotemp/debye.hpp"

namespace nanotemp {

NminPoint nmin_at(double t_ratio, double alpha, double delta) {
    if (!(t_ratio > 0.0)) {
        throw std::domain_error("nmin_at: t_ratio must be > 0");
    }
    const CriterionReport report = evaluate_harmonic(t_ratio, alpha, delta);
    NminPoint point;
    point.t_ratio = t_ratio;
    point.bound1 = report.bound_cond1;
    point.bound2 = report.bound_cond2;
    point.n_min = report.n_min;
    point.debye_valid = report.n_min >= 100;
    return point;
}

double nmin_asymptotic(double t_ratio, double alpha, double delta) {
    if (t_ratio > 1.0) return 2.0 * alpha / delta;
    const double inv = 1.0 / t_ratio;
    return 3.0 * alpha / (2.0 * std::numbers::pi * std::numbers::pi) * inv * inv * inv;
}

std::vector<NminPoint> nmin_curve(std::span<const double> t_grid, double alpha,
                                  double delta, std::optional<double> a0_m) {
    if (t_grid.empty()) {
        throw std::invalid_argument("nmin_curve: grid must not be empty");
    }
    std::vector<NminPoint> points;
    points.reserve(t_grid.size());
    for (double t : t_grid) {
        NminPoint p = nmin_at(t, alpha, delta);
        if (a0_m) p.l_min_m = static_cast<double>(p.n_min) * *a0_m;
        points.push_back(std::move(p));
    }
    return points;
}

double lmin(const Material& material, double temperature_K, double alpha,
            double delta) {
    if (!(temperature_K > 0.0)) {
        throw std::domain_error("lmin: temperature must be > 0");
    }
    const NminPoint point = nmin_at(temperature_K / material.theta_K, alpha, delta);
    return static_cast<double>(point.n_min) * material.a0_m;
}

double bounds_crossing_t_ratio() { return ebar_quarter_crossing(); }

const std::vector<Material>& builtin_materials() {
    static const std::vector<Material> table = {
        {"iron", 470.0, 2.5e-10},
        {"carbon", 2230.0, 1.5e-10},
        {"silicon", 645.0, 2.4e-10},
    };
    return table;
}

namespace {
std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}
}  // namespace

std::optional<Material> find_material(const std::string& name,
                                      std::span<const Material> extra) {
    const std::string key = lower(name);
    for (const auto& m : extra) {
        if (lower(m.name) == key) return m;
    }
    for (const auto& m : builtin_materials()) {
        if (lower(m.name) == key) return m;
    }
    return std::nullopt;
}

std::vector<Material> load_materials_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_materials_json: cannot open " + path);
    }
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.is_array()) {
        throw std::runtime_error("load_materials_json: expected a JSON array");
    }
    std::vector<Material> materials;
    materials.reserve(doc.size());
    for (const auto& entry : doc) {
        Material m;
        m.name = entry.at("name").get<std::string>();
        m.theta_K = entry.at("theta_K").get<double>();
        m.a0_m = entry.at("a0_angstrom").get<double>() * 1e-10;
        if (!(m.theta_K > 0.0) || !(m.a0_m > 0.0)) {
            throw std::runtime_error("load_materials_json: theta_K and a0_angstrom must be > 0");
        }
        materials.push_back(std::move(m));
    }
    return materials;
}

}  // namespace nanotemp
