#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nanotemp/debye.hpp"
#include "nanotemp/fock_oracle.hpp"
#include "nanotemp/nmin.hpp"

namespace {

using nanotemp::Material;
using nanotemp::NminPoint;

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<Material> user_materials(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("NANOTEMP_MATERIALS")) path = env;
    }
    if (path.empty()) return {};
    return nanotemp::load_materials_json(path);
}

Material require_material(const std::string& name, const std::string& materials_path) {
    const auto extra = user_materials(materials_path);
    if (auto m = nanotemp::find_material(name, extra)) return *m;
    throw std::domain_error("unknown material '" + name + "'");
}

std::vector<double> log_grid(double tmin, double tmax, int points) {
    if (!(tmin > 0.0) || !(tmax >= tmin) || points < 1) {
        throw std::domain_error("grid requires 0 < tmin <= tmax and points >= 1");
    }
    std::vector<double> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.push_back(tmin);
        return grid;
    }
    const double ratio = std::log(tmax / tmin);
    for (int i = 0; i < points; ++i) {
        grid.push_back(tmin * std::exp(ratio * i / (points - 1)));
    }
    return grid;
}

void emit_curve_csv(std::ostream& out, const std::vector<NminPoint>& points) {
    out << "t_ratio,bound_cond1,bound_cond2,n_min,l_min_m\n";
    for (const auto& p : points) {
        out << num17(p.t_ratio) << ',';
        if (p.bound1) out << num17(*p.bound1);
        out << ',' << num17(p.bound2) << ',' << p.n_min << ',';
        if (p.l_min_m) out << num17(*p.l_min_m);
        out << '\n';
    }
}

nlohmann::json point_json(const NminPoint& p) {
    nlohmann::json j;
    j["t_ratio"] = p.t_ratio;
    j["bound_cond1"] = p.bound1 ? nlohmann::json(*p.bound1) : nlohmann::json(nullptr);
    j["bound_cond2"] = p.bound2;
    j["n_min"] = p.n_min;
    if (p.l_min_m) j["l_min_m"] = *p.l_min_m;
    j["debye_valid"] = p.debye_valid;
    return j;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << payload;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal group size and length scale for local temperature on a harmonic chain"};
    app.require_subcommand(1);

    double alpha = 10.0;
    double delta = 0.01;
    std::string materials_path;
    std::string format = "csv";
    std::string out_path;
    app.add_option("--alpha", alpha, "energy window width parameter")->capture_default_str();
    app.add_option("--delta", delta, "accuracy parameter of the subgroup condition")->capture_default_str();
    app.add_option("--materials", materials_path, "JSON file with extra materials");

    auto* curve = app.add_subcommand("nmin-curve", "n_min over a log-spaced T/Theta grid");
    curve->fallthrough();
    double tmin = 1e-4, tmax = 1e4;
    int points = 200;
    std::string curve_material;
    curve->add_option("--tmin", tmin, "lowest T/Theta")->capture_default_str();
    curve->add_option("--tmax", tmax, "highest T/Theta")->capture_default_str();
    curve->add_option("--points", points, "grid size")->capture_default_str();
    curve->add_option("--material", curve_material, "attach l_min for this material");
    curve->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    curve->add_option("--out", out_path, "output path (default stdout)");

    auto* lmin_cmd = app.add_subcommand("lmin", "minimal length scale for a material");
    lmin_cmd->fallthrough();
    std::string lmin_material;
    double temperature_K = 0.0;
    lmin_cmd->add_option("--material", lmin_material, "material name")->required();
    lmin_cmd->add_option("--T", temperature_K, "temperature in kelvin")->required();
    lmin_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    lmin_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* ebar_cmd = app.add_subcommand("ebar", "reduced internal energy ebar(T/Theta)");
    ebar_cmd->fallthrough();
    double t_ratio = 0.0;
    std::string ebar_material;
    double ebar_T = 0.0;
    auto* opt_tr = ebar_cmd->add_option("--t-ratio", t_ratio, "T/Theta directly");
    auto* opt_T = ebar_cmd->add_option("--T", ebar_T, "temperature in kelvin (needs --material)");
    ebar_cmd->add_option("--material", ebar_material, "material for kelvin input");
    opt_tr->excludes(opt_T);

    auto* verify = app.add_subcommand("verify", "run the exact small-system oracle checks");
    std::size_t cap = nanotemp::TruncatedBasis::kDefaultCap;
    verify->add_option("--cap", cap, "basis dimension cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (curve->parsed()) {
            std::optional<double> a0;
            if (!curve_material.empty()) {
                a0 = require_material(curve_material, materials_path).a0_m;
            }
            const auto grid = log_grid(tmin, tmax, points);
            const auto pts = nanotemp::nmin_curve(grid, alpha, delta, a0);
            if (format == "csv") {
                std::ostringstream os;
                emit_curve_csv(os, pts);
                write_output(out_path, os.str());
            } else {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& p : pts) j.push_back(point_json(p));
                write_output(out_path, j.dump(2) + "\n");
            }
        } else if (lmin_cmd->parsed()) {
            const Material m = require_material(lmin_material, materials_path);
            NminPoint p = nanotemp::nmin_at(temperature_K / m.theta_K, alpha, delta);
            p.l_min_m = static_cast<double>(p.n_min) * m.a0_m;
            if (format == "csv") {
                std::ostringstream os;
                emit_curve_csv(os, {p});
                write_output(out_path, os.str());
            } else {
                nlohmann::json j = point_json(p);
                j["material"] = m.name;
                j["T_kelvin"] = temperature_K;
                write_output(out_path, j.dump(2) + "\n");
            }
        } else if (ebar_cmd->parsed()) {
            double t = t_ratio;
            if (opt_T->count() > 0) {
                if (ebar_material.empty()) {
                    throw std::domain_error("--T requires --material to fix Theta");
                }
                t = ebar_T / require_material(ebar_material, materials_path).theta_K;
            } else if (opt_tr->count() == 0) {
                throw std::domain_error("ebar needs --t-ratio or --T with --material");
            }
            std::cout << num17(nanotemp::ebar(t)) << '\n';
        } else if (verify->parsed()) {
            const auto results = nanotemp::run_verification(cap);
            bool all_ok = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  ("
                          << r.detail << ")\n";
                all_ok = all_ok && r.passed;
            }
            std::cout << (all_ok ? "verify: all checks passed\n"
                                 : "verify: some checks FAILED\n");
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
