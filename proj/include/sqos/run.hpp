// run.hpp — batch front end: flat key=value config, scenario construction,
// the output-grid runner producing per-time records, RFC-4180-style CSV
// emission, parameter sweeps, and the asymptote verifiers.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqos/errors.hpp"
#include "sqos/gaussian.hpp"
#include "sqos/models.hpp"
#include "sqos/version.hpp"

namespace sqos {

struct GridSpec {
    int count = 200;
    std::string spacing = "linear"; // linear | log
    double z_min = 0.0;             // 0 = scenario default; |z| for de Sitter
    double z_max = 0.0;
};

struct RunConfig {
    std::string scenario = "static"; // static | inverted | desitter
    double k = 1.0;
    double gamma0 = 0.1;
    double T = 1e5;
    std::optional<double> sigma;
    std::optional<double> r0;
    double c = 0.1;        // de Sitter gamma0/H
    double H = 1.0;
    double z_i = -1000.0;  // de Sitter start
    double z_stop = -1e-3; // de Sitter end
    std::string bath_regime = "white"; // white | spectral
    double omega_max = 1e3;            // cutoff in kappa units
    double tol_rel = 1e-10;
    double tol_abs = 1e-12;
    GridSpec grid;
    std::optional<std::string> sweep_param;
    std::vector<double> sweep_values;
    std::string out;
};

namespace cfgdetail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (...) {
        throw ConfigError(key, "expected a number, got '" + v + "'");
    }
}

inline int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        int i = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (...) {
        throw ConfigError(key, "expected an integer, got '" + v + "'");
    }
}

inline std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError(key, "expected a comma-separated list of numbers");
    return out;
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace cfgdetail

inline void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& val) {
    using namespace cfgdetail;
    if (key == "scenario") cfg.scenario = val;
    else if (key == "k") cfg.k = parse_double(key, val);
    else if (key == "gamma0") cfg.gamma0 = parse_double(key, val);
    else if (key == "T") cfg.T = parse_double(key, val);
    else if (key == "sigma") cfg.sigma = parse_double(key, val);
    else if (key == "r0") cfg.r0 = parse_double(key, val);
    else if (key == "c") cfg.c = parse_double(key, val);
    else if (key == "H") cfg.H = parse_double(key, val);
    else if (key == "z_i") cfg.z_i = parse_double(key, val);
    else if (key == "z_stop") cfg.z_stop = parse_double(key, val);
    else if (key == "bath.regime") cfg.bath_regime = val;
    else if (key == "bath.omega_max") cfg.omega_max = parse_double(key, val);
    else if (key == "tol.rel") cfg.tol_rel = parse_double(key, val);
    else if (key == "tol.abs") cfg.tol_abs = parse_double(key, val);
    else if (key == "grid.count") cfg.grid.count = parse_int(key, val);
    else if (key == "grid.spacing") cfg.grid.spacing = val;
    else if (key == "grid.z_min") cfg.grid.z_min = parse_double(key, val);
    else if (key == "grid.z_max") cfg.grid.z_max = parse_double(key, val);
    else if (key == "sweep.param") cfg.sweep_param = val;
    else if (key == "sweep.values") cfg.sweep_values = parse_list(key, val);
    else if (key == "out") cfg.out = val;
    else throw ConfigError(key, "unknown key");
}

// Flat UTF-8 key=value lines; '#' starts a comment; dotted keys for nesting.
inline RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = cfgdetail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno), "expected key=value");
        apply_config_key(cfg, cfgdetail::trim(line.substr(0, eq)),
                         cfgdetail::trim(line.substr(eq + 1)));
    }
    return cfg;
}

// Canonical echo; parse_config(echo_config(cfg)) reproduces cfg.
inline std::string echo_config(const RunConfig& cfg) {
    using cfgdetail::fmt;
    std::ostringstream os;
    os << "scenario=" << cfg.scenario << "\n";
    os << "k=" << fmt(cfg.k) << "\n";
    os << "gamma0=" << fmt(cfg.gamma0) << "\n";
    os << "T=" << fmt(cfg.T) << "\n";
    if (cfg.sigma) os << "sigma=" << fmt(*cfg.sigma) << "\n";
    if (cfg.r0) os << "r0=" << fmt(*cfg.r0) << "\n";
    if (cfg.scenario == "desitter") {
        os << "c=" << fmt(cfg.c) << "\n";
        os << "H=" << fmt(cfg.H) << "\n";
        os << "z_i=" << fmt(cfg.z_i) << "\n";
        os << "z_stop=" << fmt(cfg.z_stop) << "\n";
    }
    os << "bath.regime=" << cfg.bath_regime << "\n";
    os << "bath.omega_max=" << fmt(cfg.omega_max) << "\n";
    os << "tol.rel=" << fmt(cfg.tol_rel) << "\n";
    os << "tol.abs=" << fmt(cfg.tol_abs) << "\n";
    os << "grid.count=" << cfg.grid.count << "\n";
    os << "grid.spacing=" << cfg.grid.spacing << "\n";
    if (cfg.grid.z_min > 0) os << "grid.z_min=" << fmt(cfg.grid.z_min) << "\n";
    if (cfg.grid.z_max > 0) os << "grid.z_max=" << fmt(cfg.grid.z_max) << "\n";
    if (cfg.sweep_param) {
        os << "sweep.param=" << *cfg.sweep_param << "\n";
        os << "sweep.values=";
        for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i)
            os << (i ? "," : "") << fmt(cfg.sweep_values[i]);
        os << "\n";
    }
    if (!cfg.out.empty()) os << "out=" << cfg.out << "\n";
    return os.str();
}

inline void validate_config(const RunConfig& cfg) {
    if (cfg.scenario != "static" && cfg.scenario != "inverted" && cfg.scenario != "desitter")
        throw ConfigError("scenario", "must be static, inverted or desitter");
    if (!(cfg.k > 0)) throw ConfigError("k", "must be > 0");
    if (cfg.gamma0 < 0) throw ConfigError("gamma0", "must be >= 0");
    if (cfg.T < 0) throw ConfigError("T", "must be >= 0");
    if (cfg.scenario == "static" && !(cfg.k > cfg.gamma0))
        throw ConfigError("gamma0", "static oscillator needs gamma0 < k");
    if (cfg.sigma && cfg.r0) throw ConfigError("sigma", "give either sigma or r0, not both");
    if (cfg.sigma && !(*cfg.sigma > 0)) throw ConfigError("sigma", "must be > 0");
    if (cfg.bath_regime != "white" && cfg.bath_regime != "spectral")
        throw ConfigError("bath.regime", "must be white or spectral");
    if (!(cfg.omega_max > 0)) throw ConfigError("bath.omega_max", "must be > 0");
    if (cfg.grid.count < 1) throw ConfigError("grid.count", "must be >= 1");
    if (cfg.grid.spacing != "linear" && cfg.grid.spacing != "log")
        throw ConfigError("grid.spacing", "must be linear or log");
    if (cfg.scenario == "desitter") {
        if (!(cfg.z_i < -1)) throw ConfigError("z_i", "must be << -1");
        if (!(cfg.z_stop < 0) || !(cfg.z_stop > cfg.z_i))
            throw ConfigError("z_stop", "must lie in (z_i, 0)");
        if (!(cfg.c >= 0) || cfg.c >= 0.5) throw ConfigError("c", "needs 0 <= c < 1/2");
        if (!(cfg.H > 0)) throw ConfigError("H", "must be > 0");
    }
    if (!(cfg.tol_rel > 0) || !(cfg.tol_abs > 0))
        throw ConfigError("tol.rel", "tolerances must be > 0");
}

inline double scenario_kappa(const RunConfig& cfg) {
    if (cfg.scenario == "static") return std::sqrt(cfg.k * cfg.k - cfg.gamma0 * cfg.gamma0);
    if (cfg.scenario == "inverted") return std::sqrt(cfg.k * cfg.k + cfg.gamma0 * cfg.gamma0);
    return cfg.k;
}

inline Scenario build_scenario(const RunConfig& cfg) {
    validate_config(cfg);
    NoiseRegime regime =
        cfg.bath_regime == "white" ? NoiseRegime::WhiteNoise : NoiseRegime::SpectralIntegral;
    double kappa = scenario_kappa(cfg);
    double sigma = cfg.sigma ? *cfg.sigma
                             : std::exp(-(cfg.r0 ? *cfg.r0 : 0.0)) / std::sqrt(2.0 * kappa);
    Scenario sc;
    if (cfg.scenario == "static") {
        sc = make_static(cfg.k, cfg.gamma0, cfg.T, sigma, regime);
    } else if (cfg.scenario == "inverted") {
        sc = make_inverted(cfg.k, cfg.gamma0, cfg.T, sigma, regime);
    } else {
        // de Sitter coupling is set by (c, H); gamma0 = c H is derived
        DeSitterOptions dopt;
        dopt.sigma = sigma;
        sc = make_desitter(cfg.k, cfg.H, cfg.c, cfg.T, cfg.z_i, regime, dopt);
    }
    sc.bath.omega_max_hat = cfg.omega_max;
    return sc;
}

inline std::vector<double> output_grid(const RunConfig& cfg) {
    double zmax, zmin;
    bool negative = cfg.scenario == "desitter";
    if (negative) {
        zmin = cfg.grid.z_min > 0 ? cfg.grid.z_min : std::abs(cfg.z_stop);
        zmax = cfg.grid.z_max > 0 ? cfg.grid.z_max : std::min(std::abs(cfg.z_i), 10.0);
    } else {
        zmax = cfg.grid.z_max > 0 ? cfg.grid.z_max : 100.0;
        zmin = cfg.grid.z_min > 0
                   ? cfg.grid.z_min
                   : (cfg.grid.spacing == "log" ? zmax * 1e-4 : zmax / cfg.grid.count);
    }
    if (!(zmax > zmin) && cfg.grid.count > 1)
        throw ConfigError("grid.z_max", "output grid is empty");

    int n = cfg.grid.count;
    std::vector<double> zs;
    zs.reserve(n);
    for (int j = 0; j < n; ++j) {
        double x = n == 1 ? 1.0 : double(j) / double(n - 1);
        double v = cfg.grid.spacing == "log"
                       ? zmin * std::pow(zmax / zmin, x)
                       : zmin + (zmax - zmin) * x;
        zs.push_back(v);
    }
    if (negative) {
        // |z| decreasing toward 0-: reverse so z increases
        std::vector<double> out;
        out.reserve(zs.size());
        for (auto it = zs.rbegin(); it != zs.rend(); ++it) out.push_back(-*it);
        return out;
    }
    return zs;
}

struct RunRow {
    double z = 0, r = 0, phi = 0, theta = 0;
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0;
    double A = 0, B = 0, C = 0, S = 0, S_lin = 0;
    double du2 = 0, dv2 = 0, Lu2 = 0, Lv2 = 0, dudv = 0;
};

struct RunTable {
    std::vector<RunRow> rows;
    std::vector<std::string> notes;
};

inline RunRow evaluate_point(const Scenario& sc, double z, const QuadTols& tols) {
    RunRow row;
    row.z = z;
    SqueezeAngles ang = squeeze_at(sc.lagr, sc.mode, z).canonical();
    row.r = ang.r;
    row.phi = ang.phi;
    row.theta = ang.theta;

    PropagatorCoeffs pc = sc.coeffs_at(z, tols);
    row.a11 = pc.a11;
    row.a12 = pc.a12;
    row.a22 = pc.a22;
    row.b1 = pc.b1;
    row.b2 = pc.b2;
    row.b3 = pc.b3;
    row.b4 = pc.b4;

    EvolvedGaussian st = evolve(sc.init, pc);
    row.A = st.A;
    row.B = st.B;
    row.C = st.C;
    auto ent = entropy(st);
    row.S = ent.S;
    row.S_lin = ent.S_lin;

    double kappa = sc.lagr.kappa;
    FluctuationReport rep;
    double sphi = std::sin(ang.phi), cphi = std::cos(ang.phi);
    if (!ang.phase_defined || std::abs(sphi) < 1e-6 || std::abs(cphi) < 1e-6) {
        bool phi_is_zero = std::abs(sphi) < std::abs(cphi);
        rep = axis_marginals(st, phi_is_zero, kappa);
    } else {
        rep = superfluctuant_basis(st, ang.phi, kappa);
    }
    row.du2 = rep.du2;
    row.dv2 = rep.dv2;
    row.Lu2 = rep.Lu2;
    row.Lv2 = rep.Lv2;
    row.dudv = rep.uncertainty();
    return row;
}

inline RunTable run_single(const RunConfig& cfg) {
    Scenario sc = build_scenario(cfg);
    QuadTols tols;
    tols.rel_tol = std::max(cfg.tol_rel, 1e-12);
    tols.abs_tol = cfg.tol_abs;

    auto grid = output_grid(cfg);
    RunTable table;
    table.rows.reserve(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double z = grid[j];
        double step = j + 1 < grid.size() ? std::abs(grid[j + 1] - grid[j])
                                          : (j > 0 ? std::abs(grid[j] - grid[j - 1]) : 1e-3);
        double shift = 1e-3 * step;
        bool done = false;
        for (int attempt = 0; attempt < 4 && !done; ++attempt) {
            try {
                table.rows.push_back(evaluate_point(sc, z, tols));
                if (attempt > 0)
                    table.notes.push_back("output time " + std::to_string(grid[j]) +
                                          " perturbed to " + std::to_string(z) +
                                          " (resonance)");
                done = true;
            } catch (const ResonanceError&) {
                z += shift;
                shift *= 10.0;
            }
        }
        if (!done)
            table.notes.push_back("output time " + std::to_string(grid[j]) +
                                  " dropped (resonance)");
    }
    return table;
}

inline const std::vector<std::string>& run_columns() {
    static const std::vector<std::string> cols = {
        "z",  "r",  "phi", "theta", "a11", "a12", "a22", "b1",    "b2",  "b3", "b4",
        "A",  "B",  "C",   "S",     "S_lin", "du2", "dv2", "Lu2", "Lv2", "dudv"};
    return cols;
}

inline void write_row(std::ostream& os, const RunRow& r) {
    const double vals[] = {r.z,  r.r,  r.phi, r.theta, r.a11, r.a12, r.a22,
                           r.b1, r.b2, r.b3,  r.b4,    r.A,   r.B,   r.C,
                           r.S,  r.S_lin, r.du2, r.dv2, r.Lu2, r.Lv2, r.dudv};
    char buf[40];
    for (std::size_t i = 0; i < std::size(vals); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", vals[i]);
        os << (i ? "," : "") << buf;
    }
    os << "\n";
}

inline void write_preamble(std::ostream& os, const RunConfig& cfg) {
    os << "# sqos " << version_string << "\n";
    std::stringstream echo(echo_config(cfg));
    std::string line;
    while (std::getline(echo, line)) os << "# " << line << "\n";
}

inline void write_csv(std::ostream& os, const RunConfig& cfg, const RunTable& table) {
    write_preamble(os, cfg);
    for (const auto& n : table.notes) os << "# note: " << n << "\n";
    const auto& cols = run_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& r : table.rows) write_row(os, r);
}

inline RunConfig with_param(const RunConfig& base, const std::string& param, double value) {
    RunConfig cfg = base;
    cfg.sweep_param.reset();
    cfg.sweep_values.clear();
    if (param == "k") cfg.k = value;
    else if (param == "gamma0") cfg.gamma0 = value;
    else if (param == "T") cfg.T = value;
    else if (param == "sigma") { cfg.sigma = value; cfg.r0.reset(); }
    else if (param == "r0") { cfg.r0 = value; cfg.sigma.reset(); }
    else if (param == "c") cfg.c = value;
    else if (param == "H") cfg.H = value;
    else throw ConfigError("sweep.param", "cannot sweep '" + param + "'");
    return cfg;
}

// Sweep rows in deterministic parameter order; each row gains a leading value.
inline void write_sweep_csv(std::ostream& os, const RunConfig& cfg) {
    if (!cfg.sweep_param) throw ConfigError("sweep.param", "missing for sweep");
    write_preamble(os, cfg);
    os << *cfg.sweep_param;
    for (const auto& c : run_columns()) os << "," << c;
    os << "\n";
    char buf[40];
    for (double v : cfg.sweep_values) {
        RunConfig point = with_param(cfg, *cfg.sweep_param, v);
        RunTable table = run_single(point);
        for (const auto& r : table.rows) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            os << buf << ",";
            write_row(os, r);
        }
    }
}

// ---- verifiers --------------------------------------------------------------

struct Check {
    std::string label;
    double measured = 0, expected = 0, tolerance = 0;
    bool pass = false;
};

struct VerifyReport {
    std::string law;
    std::string window;
    std::vector<Check> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

inline Check make_check(std::string label, double measured, double expected, double tol) {
    bool ok = std::isfinite(measured) && std::abs(measured - expected) <= tol;
    return {std::move(label), measured, expected, tol, ok};
}

namespace verifydetail {

inline std::vector<std::pair<double, double>> series_r_s(const RunTable& t) {
    std::vector<std::pair<double, double>> out;
    out.reserve(t.rows.size());
    for (const auto& r : t.rows) out.emplace_back(r.r, r.S);
    return out;
}

inline FitResult fit_window(const RunTable& t, double r_lo, double r_hi) {
    std::vector<double> rs, Ss;
    for (const auto& row : t.rows)
        if (row.r >= r_lo && row.r <= r_hi) {
            rs.push_back(row.r);
            Ss.push_back(row.S);
        }
    return fit_asymptote(rs, Ss);
}

} // namespace verifydetail

// Fitted S(z) ~ S_inf - B exp(-z / tau_z); returns tau in lagrangian time.
inline double fit_relaxation_time(const RunTable& t, double kappa, double z_lo, double z_hi,
                                  double z_tail_lo) {
    double s_inf = 0;
    int n_tail = 0;
    for (const auto& r : t.rows)
        if (r.z >= z_tail_lo) {
            s_inf += r.S;
            ++n_tail;
        }
    if (n_tail < 3) throw FitError("relaxation fit needs tail samples");
    s_inf /= n_tail;

    std::vector<double> zs, ln_gap;
    for (const auto& r : t.rows)
        if (r.z >= z_lo && r.z <= z_hi && s_inf - r.S > 1e-8 * std::abs(s_inf)) {
            zs.push_back(r.z);
            ln_gap.push_back(std::log(s_inf - r.S));
        }
    if (zs.size() < 10) throw FitError("relaxation fit needs at least 10 samples");
    double mr = 0, mS = 0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        mr += zs[i];
        mS += ln_gap[i];
    }
    mr /= double(zs.size());
    mS /= double(zs.size());
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        sxx += (zs[i] - mr) * (zs[i] - mr);
        sxy += (zs[i] - mr) * (ln_gap[i] - mS);
    }
    double slope = sxy / sxx;
    if (!(slope < 0)) throw FitError("entropy gap is not decaying in the fit window");
    return -1.0 / slope / kappa;
}

inline void check_law_scenario(const RunConfig& cfg, const std::string& law) {
    std::string needs;
    if (law == "static-thermal" || law == "relaxation" || law == "fig2-minima")
        needs = "static";
    else if (law == "inverted-high-t" || law == "inverted-zero-t")
        needs = "inverted";
    else if (law == "desitter-high-t" || law == "desitter-finite-t")
        needs = "desitter";
    if (!needs.empty() && cfg.scenario != needs)
        throw ConfigError("law", "law '" + law + "' applies to the " + needs +
                                     " scenario, not '" + cfg.scenario + "'");
}

inline VerifyReport verify(const RunConfig& cfg, const std::string& law) {
    check_law_scenario(cfg, law);
    VerifyReport rep;
    rep.law = law;
    if (law == "static-thermal") {
        RunTable t = run_single(cfg);
        if (t.rows.empty()) throw FitError("empty run");
        double expected = 1.0 + std::log(cfg.T / cfg.k);
        double z_end = t.rows.back().z;
        rep.window = "S at z=" + std::to_string(z_end);
        rep.checks.push_back(
            make_check("S(z_end) vs 1+ln(T/k)", t.rows.back().S, expected, 0.011));
    } else if (law == "relaxation") {
        RunTable t = run_single(cfg);
        double kappa = scenario_kappa(cfg);
        double z_end = t.rows.back().z;
        double tau = fit_relaxation_time(t, kappa, 0.02 * z_end, 0.2 * z_end, 0.8 * z_end);
        double expected = 1.0 / (2.0 * cfg.gamma0);
        rep.window = "exponential fit over z in [" + std::to_string(0.02 * z_end) + ", " +
                     std::to_string(0.2 * z_end) + "]";
        rep.checks.push_back(make_check("relaxation time", tau, expected, 0.2 * expected));
    } else if (law == "pure-zero") {
        RunConfig c0 = cfg;
        c0.gamma0 = 0.0;
        if (c0.scenario == "desitter") c0.c = 0.0;
        RunTable t = run_single(c0);
        double smax = 0;
        for (const auto& r : t.rows) smax = std::max(smax, std::abs(r.S));
        rep.window = "all output times, gamma0 = 0";
        rep.checks.push_back(make_check("max |S|", smax, 0.0, 1e-9));
    } else if (law == "inverted-high-t") {
        RunTable t = run_single(cfg);
        auto fit = verifydetail::fit_window(t, 3.0, 8.0);
        rep.window = "r in [3, 8]";
        rep.checks.push_back(make_check("slope dS/dr", fit.slope, 1.0, 0.05));
        double kappa = scenario_kappa(cfg);
        double expected_b = 1.0 + std::log(cfg.T * cfg.gamma0 / (kappa * kappa));
        rep.checks.push_back(make_check("intercept", fit.intercept, expected_b, 0.1));
    } else if (law == "inverted-zero-t") {
        // the asymptotic slope is exactly 1 - gamma0/kappa; fit late so the
        // decaying transients cannot push a boundary case outside
        RunTable t = run_single(cfg);
        auto fit = verifydetail::fit_window(t, 8.5, 12.0);
        rep.window = "r in [8.5, 12]";
        rep.checks.push_back(make_check("slope dS/dr", fit.slope, 1.0, 0.05));
        double dev = 0, mean = 0;
        int n = 0;
        for (const auto& row : t.rows)
            if (row.r >= 8.5 && row.r <= 12.0) {
                mean += row.S - row.r;
                ++n;
            }
        mean /= std::max(n, 1);
        for (const auto& row : t.rows)
            if (row.r >= 8.5 && row.r <= 12.0)
                dev = std::max(dev, std::abs(row.S - row.r - mean));
        rep.checks.push_back(make_check("max |S - r - mean|", dev, 0.0, 0.1));
    } else if (law == "desitter-high-t") {
        RunTable t = run_single(cfg);
        auto fit = verifydetail::fit_window(t, 2.3, 5.8);
        rep.window = "r in [2.3, 5.8]";
        rep.checks.push_back(make_check("slope dS/dr", fit.slope, 1.0 - cfg.c, 0.05));
    } else if (law == "desitter-finite-t") {
        RunTable t = run_single(cfg);
        auto fit = verifydetail::fit_window(t, 2.3, 5.8);
        rep.window = "r in [2.3, 5.8]";
        rep.checks.push_back(make_check("slope dS/dr", fit.slope, 0.5 - cfg.c, 0.1));
    } else if (law == "fig2-minima") {
        if (!cfg.sweep_param || *cfg.sweep_param != "r0")
            throw ConfigError("sweep.param", "fig2-minima needs an r0 sweep");
        std::vector<double> early, late;
        for (double v : cfg.sweep_values) {
            RunConfig point = with_param(cfg, "r0", v);
            RunTable t = run_single(point);
            if (t.rows.size() < 2) throw FitError("fig2-minima needs two output times");
            early.push_back(t.rows.front().S);
            late.push_back(t.rows.back().S);
        }
        auto argmin = [](const std::vector<double>& v) {
            return std::distance(v.begin(), std::min_element(v.begin(), v.end()));
        };
        rep.window = "early = first output time, late = last";
        rep.checks.push_back(make_check("early-time argmin index", double(argmin(early)),
                                        double(cfg.sweep_values.size() - 1), 0.0));
        rep.checks.push_back(make_check("late-time argmin index", double(argmin(late)), 0.0, 0.0));
    } else {
        throw ConfigError("law", "unknown law '" + law + "'");
    }
    return rep;
}

inline void write_verify_report(std::ostream& os, const VerifyReport& rep) {
    os << (rep.pass() ? "PASS" : "FAIL") << " " << rep.law << " [" << rep.window << "]\n";
    for (const auto& c : rep.checks) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %s %s: measured=%.6g expected=%.6g tol=%.3g\n",
                      c.pass ? "ok  " : "FAIL", c.label.c_str(), c.measured, c.expected,
                      c.tolerance);
        os << buf;
    }
}

} // namespace sqos
