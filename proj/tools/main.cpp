// stringspec CLI: reproducible sine-series experiments with file outputs.
//
// Subcommands: extend, decompose, coeffs, solve, verify. Configuration is a
// JSON file (see configs/default.json); --out/--modes/--order override it.
// Numbers are printed with 17 significant digits so reruns are byte-identical.
// Exit codes: 0 ok, 1 verification failure, 2 invalid config, 3 numerical
// failure.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stringspec.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

json default_config() {
    return json{
        {"f0", {{"name", "poly"}, {"params", {0.0, 1.0, -1.0}}}},
        {"g0", {{"name", "constant"}, {"params", {0.0}}}},
        {"tension", 1.0},
        {"density", 1.0},
        {"length", 1.0},
        {"order", 1},
        {"modes", {9, 99}},
        {"max_mode", 128},
        {"eps", {0.1, 0.0316, 0.01, 0.00316, 0.001}},
        {"extend_kind", "odd"},
        {"fd_step", 1e-3},
        {"seed", nullptr},
        {"out_dir", "out"},
    };
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
    return buf;
}

std::string num17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void die_config(const std::string& msg) {
    std::cerr << "config error: " << msg << "\n";
    std::exit(kExitConfig);
}

[[noreturn]] void die_numeric(const std::string& where, ssp_status s) {
    json diag{{"error", "numerical failure"},
              {"where", where},
              {"status", ssp_status_name(s)},
              {"detail", ssp_last_error()}};
    std::cerr << diag.dump(2) << "\n";
    std::exit(kExitNumeric);
}

void check(ssp_status s, const std::string& where) {
    if (s != SSP_OK) die_numeric(where, s);
}

struct Experiment {
    json cfg;
    std::string hash;
    std::filesystem::path out_dir;

    double tension() const { return cfg.at("tension").get<double>(); }
    double density() const { return cfg.at("density").get<double>(); }
    double length() const { return cfg.at("length").get<double>(); }
    int order() const { return cfg.at("order").get<int>(); }

    ssp_function* make(const char* key, double left, double right) const {
        const json& spec = cfg.at(key);
        std::string name = spec.at("name").get<std::string>();
        std::vector<double> params = spec.at("params").get<std::vector<double>>();
        ssp_function* f = nullptr;
        ssp_status s = ssp_function_create(name.c_str(), params.data(), params.size(), left,
                                           right, &f);
        check(s, std::string("function ") + key);
        return f;
    }

    std::ofstream open(const std::string& file, bool csv) const {
        std::filesystem::create_directories(out_dir);
        std::ofstream os(out_dir / file, std::ios::binary); // LF line endings
        if (!os) die_config("cannot write " + (out_dir / file).string());
        if (csv) os << "# stringspec " << ssp_version() << " config " << hash << "\n";
        return os;
    }

    json report_header() const {
        return json{{"artifact_version", ssp_version()}, {"config_hash", hash}};
    }

    void write_json(const std::string& file, const json& body) const {
        json doc = report_header();
        doc.update(body);
        auto os = open(file, false);
        os << doc.dump(2) << "\n";
    }
};

Experiment load_experiment(const std::string& config_path, const std::string& out_override,
                           int modes_override, int order_override) {
    Experiment ex;
    ex.cfg = default_config();
    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) die_config("cannot open " + config_path);
        json user;
        try {
            user = json::parse(is);
        } catch (const std::exception& e) {
            die_config(std::string("invalid JSON: ") + e.what());
        }
        if (!user.is_object()) die_config("config root must be an object");
        ex.cfg.update(user);
    }
    if (!out_override.empty()) ex.cfg["out_dir"] = out_override;
    if (modes_override > 0) ex.cfg["max_mode"] = modes_override;
    if (order_override > 0) ex.cfg["order"] = order_override;

    try {
        if (!(ex.length() > 0) || !(ex.tension() > 0) || !(ex.density() > 0))
            die_config("tension, density and length must be positive");
        auto modes = ex.cfg.at("modes").get<std::vector<int>>();
        if (modes.empty() || !std::is_sorted(modes.begin(), modes.end()))
            die_config("modes must be a nonempty ascending list");
        for (const char* key : {"f0", "g0"}) {
            std::string name = ex.cfg.at(key).at("name").get<std::string>();
            (void)ex.cfg.at(key).at("params").get<std::vector<double>>();
            ssp_function* probe = nullptr;
            ssp_status s = ssp_function_create(name.c_str(), nullptr, 0, 0.0, 1.0, &probe);
            if (s == SSP_OK) ssp_function_free(probe);
            // unknown names surface as a precondition error mentioning the registry
            if (s == SSP_ERR_PRECONDITION &&
                std::string(ssp_last_error()).find("unknown registry") != std::string::npos)
                die_config("unknown function name '" + name + "' for " + key);
        }
    } catch (const json::exception& e) {
        die_config(e.what());
    }

    // the hash keys the experiment, not the file destination
    json hashed = ex.cfg;
    hashed.erase("out_dir");
    ex.hash = hex64(fnv1a(hashed.dump()));
    ex.out_dir = ex.cfg.at("out_dir").get<std::string>();
    return ex;
}

int cmd_extend(const Experiment& ex) {
    const double L = ex.length();
    ssp_function* f0 = ex.make("f0", 0.0, L);
    std::string kind = ex.cfg.at("extend_kind").get<std::string>();
    ssp_extension* e = nullptr;
    ssp_status s;
    if (kind == "odd")
        s = ssp_extend_odd(f0, &e);
    else if (kind == "even")
        s = ssp_extend_even(f0, &e);
    else if (kind == "composed")
        s = ssp_extend_composed(f0, ex.order(), &e);
    else
        die_config("extend_kind must be odd, even, or composed");
    check(s, "extend " + kind);

    ssp_parity parity;
    check(ssp_extension_parity(e, &parity), "parity");
    json seams = json::array();
    for (int seam = 0; seam <= 1; ++seam) {
        int cls = 0;
        check(ssp_extension_seam_class(e, seam, &cls), "seam class");
        double from_left[5], from_right[5];
        check(ssp_extension_seam_detail(e, seam, 4, from_left, from_right), "seam detail");
        json orders = json::array();
        for (int j = 0; j <= 4; ++j)
            orders.push_back({{"order", j}, {"from_left", from_left[j]}, {"from_right", from_right[j]}});
        seams.push_back({{"seam", seam == 0 ? "origin" : "ends"}, {"class", cls}, {"orders", orders}});
    }
    const char* parity_name = parity == SSP_PARITY_ODD ? "odd"
                              : parity == SSP_PARITY_EVEN ? "even"
                                                          : "mixed";
    ex.write_json("extend.json", {{"kind", kind}, {"parity", parity_name}, {"seams", seams}});

    auto csv = ex.open("extension.csv", true);
    csv << "x,value\n";
    for (int i = 0; i <= 512; ++i) {
        double x = -L + 2.0 * L * i / 512.0;
        double v = 0.0;
        check(ssp_extension_eval(e, x, &v), "extension eval");
        csv << num17(x) << "," << num17(v) << "\n";
    }
    ssp_extension_free(e);
    ssp_function_free(f0);
    return 0;
}

int cmd_decompose(const Experiment& ex) {
    const double L = ex.length();
    ssp_function* f0 = ex.make("f0", 0.0, L);
    ssp_decomposition* d = nullptr;
    check(ssp_decompose(f0, ex.order(), &d), "decompose");

    size_t count = 0;
    check(ssp_decomposition_f1(d, nullptr, 0, &count), "f1 size");
    std::vector<double> coeffs(count);
    if (count) check(ssp_decomposition_f1(d, coeffs.data(), count, &count), "f1 coefficients");
    double residual = 0.0, condition = 0.0, det = 0.0, matcond = 0.0;
    check(ssp_decomposition_residual(d, &residual), "residual");
    check(ssp_decomposition_condition(d, &condition), "condition");
    check(ssp_boundary_determinant(ex.order(), L, &det, &matcond), "determinant");

    ex.write_json("decompose.json", {{"order", ex.order()},
                                     {"f1_coefficients", coeffs},
                                     {"max_boundary_residual", residual},
                                     {"system_condition", condition},
                                     {"kernel_determinant", det},
                                     {"kernel_condition", matcond}});
    ssp_decomposition_free(d);
    ssp_function_free(f0);
    return 0;
}

int cmd_coeffs(const Experiment& ex) {
    const double L = ex.length();
    ssp_function* f0 = ex.make("f0", 0.0, L);
    int max_mode = ex.cfg.at("max_mode").get<int>();
    if (max_mode < 1) die_config("max_mode must be >= 1");
    int bound_order = std::min(2 * ex.order(), 4);
    std::vector<double> values(max_mode), bounds(max_mode), ratios(max_mode);
    check(ssp_coefficient_table(f0, ex.order(), bound_order, max_mode, values.data(),
                                bounds.data(), ratios.data()),
          "coefficient table");
    auto csv = ex.open("coefficients.csv", true);
    csv << "mode,value,bound,measured_ratio\n";
    for (int m = 1; m <= max_mode; ++m)
        csv << m << "," << num17(values[m - 1]) << "," << num17(bounds[m - 1]) << ","
            << num17(ratios[m - 1]) << "\n";
    ssp_function_free(f0);
    return 0;
}

int cmd_solve(const Experiment& ex) {
    const double L = ex.length();
    ssp_function* f0 = ex.make("f0", 0.0, L);
    ssp_function* g0 = ex.make("g0", 0.0, L);
    auto modes = ex.cfg.at("modes").get<std::vector<int>>();
    auto eps = ex.cfg.at("eps").get<std::vector<double>>();
    double h = ex.cfg.at("fd_step").get<double>();
    double c = std::sqrt(ex.tension() / ex.density());
    double period = 2.0 * L / c;

    bool jitter = ex.cfg.contains("seed") && !ex.cfg.at("seed").is_null();
    unsigned long long seed = jitter ? ex.cfg.at("seed").get<unsigned long long>() : 0;

    json per_M = json::array();
    ssp_solution* finest = nullptr;
    for (int M : modes) {
        ssp_solution* sol = nullptr;
        check(ssp_solve(f0, g0, ex.tension(), ex.density(), M, &sol), "solve");

        double sup_err = 0.0;
        if (jitter)
            check(ssp_uniform_error_jittered(f0, M, seed, &sup_err), "uniform error");
        else
            check(ssp_uniform_error(f0, M, &sup_err), "uniform error");

        double tail = 0.0;
        int tail_order = 0;
        check(ssp_sine_tail_bound(f0, M, &tail, &tail_order), "tail bound");

        double res = 0.0;
        check(ssp_solution_residual(sol, 33, 9, 0.0, period, h, &res), "residual");

        double oracle_max = 0.0;
        for (int i = 0; i <= 64; ++i) {
            double x = L * i / 64.0;
            for (int j = 0; j <= 16; ++j) {
                double t = period * j / 16.0;
                double a = 0.0, b = 0.0;
                check(ssp_solution_eval(sol, x, t, &a), "field eval");
                check(ssp_dalembert(f0, g0, ex.tension(), ex.density(), x, t, &b), "oracle");
                oracle_max = std::max(oracle_max, std::fabs(a - b));
            }
        }

        double e0 = 0.0, drift = 0.0;
        check(ssp_solution_energy(sol, 0.0, &e0), "energy");
        for (int j = 0; j <= 32; ++j) {
            double t = period * j / 32.0;
            double et = 0.0;
            check(ssp_solution_energy(sol, t, &et), "energy");
            drift = std::max(drift, std::fabs(et - e0));
        }

        json tail_entry; // null when the verified order gives no finite guarantee
        if (std::isfinite(tail)) tail_entry = tail;
        per_M.push_back({{"truncation", M},
                         {"sup_error", sup_err},
                         {"tail_bound", tail_entry},
                         {"tail_bound_order", tail_order},
                         {"residual_max", res},
                         {"oracle_max_difference", oracle_max},
                         {"energy", e0},
                         {"energy_drift", drift}});
        if (M == modes.back())
            finest = sol;
        else
            ssp_solution_free(sol);
    }

    json trace = json::array();
    for (double e : eps) {
        double a = 0.0, b = 0.0;
        check(ssp_solution_curvature(finest, e, 0.0, &a), "curvature");
        check(ssp_solution_curvature(finest, L - e, 0.0, &b), "curvature");
        trace.push_back({{"eps", e}, {"near_left", a}, {"near_right", b}});
    }

    int m_hi = std::min(128, modes.back());
    json slope_entry;
    if (m_hi >= 16) {
        double slope = 0.0;
        check(ssp_decay_slope(f0, 8, m_hi, &slope), "decay slope");
        slope_entry = slope;
    }

    ex.write_json("report.json", {{"truncations", per_M},
                                  {"endpoint_trace_t0", trace},
                                  {"decay_slope", slope_entry}});

    auto field = ex.open("field.csv", true);
    field << "x,t,value\n";
    for (int i = 0; i <= 64; ++i) {
        double x = L * i / 64.0;
        for (int j = 0; j <= 16; ++j) {
            double t = period * j / 16.0;
            double v = 0.0;
            check(ssp_solution_eval(finest, x, t, &v), "field eval");
            field << num17(x) << "," << num17(t) << "," << num17(v) << "\n";
        }
    }

    auto mcsv = ex.open("modes.csv", true);
    mcsv << "mode,cos_amp,sin_amp\n";
    for (int m = 1; m <= modes.back(); ++m) {
        double K = 0.0, Lm = 0.0;
        check(ssp_solution_mode(finest, m, &K, &Lm), "mode");
        mcsv << m << "," << num17(K) << "," << num17(Lm) << "\n";
    }

    ssp_solution_free(finest);
    ssp_function_free(g0);
    ssp_function_free(f0);
    return 0;
}

int cmd_verify(const Experiment& ex) {
    struct Acc {
        json rows = json::array();
        int failures = 0;
    } acc;
    int all_passed = 0;
    ssp_status s = ssp_verify(
        [](const char* name, int passed, const char* detail, void* user) {
            auto* a = static_cast<Acc*>(user);
            std::cout << (passed ? "PASS" : "FAIL") << "  " << name << "  [" << detail << "]\n";
            a->rows.push_back({{"criterion", name}, {"passed", passed != 0}, {"detail", detail}});
            if (!passed) ++a->failures;
        },
        &acc, &all_passed);
    check(s, "verify");
    ex.write_json("verify.json", {{"criteria", acc.rows}, {"all_passed", all_passed != 0}});
    std::cout << (all_passed ? "all criteria passed" : "criteria FAILED") << "\n";
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sine-series wave equation toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int modes_override = 0;
    int order_override = 0;
    app.add_option("--config", config_path, "JSON experiment config");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--modes", modes_override, "max mode count (overrides config max_mode)");
    app.add_option("--order", order_override, "decomposition order n (overrides config)");

    auto* c_extend = app.add_subcommand("extend", "extension with seam report");
    auto* c_decompose = app.add_subcommand("decompose", "boundary-matching decomposition");
    auto* c_coeffs = app.add_subcommand("coeffs", "sine coefficients with decay bounds");
    auto* c_solve = app.add_subcommand("solve", "modal solution and convergence report");
    auto* c_verify = app.add_subcommand("verify", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    Experiment ex = load_experiment(config_path, out_dir, modes_override, order_override);
    if (c_extend->parsed()) return cmd_extend(ex);
    if (c_decompose->parsed()) return cmd_decompose(ex);
    if (c_coeffs->parsed()) return cmd_coeffs(ex);
    if (c_solve->parsed()) return cmd_solve(ex);
    if (c_verify->parsed()) return cmd_verify(ex);
    return kExitConfig;
}
