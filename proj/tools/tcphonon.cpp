#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcphonon/invariants.hpp"
#include "tcphonon/mc_oracle.hpp"
#include "tcphonon/rates.hpp"
#include "tcphonon/scan.hpp"
#include "tcphonon/spectrum.hpp"
#include "tcphonon/table.hpp"

using namespace tcphonon;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_numerical = 1;
constexpr int exit_usage = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> known_keys{"lambda", "omega", "cs",   "k",      "kmin",  "kmax",         "points",
                                          "tol",    "seed",  "format", "output", "phase", "mc",           "mc-samples",
                                          "log",    "serial", "figure-units"};

// flag value > config file > built-in default
class Settings {
public:
    void set_flag(const std::string& key, std::string value) { flags_[key] = std::move(value); }

    void load_file(const std::string& path)
    {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("cannot read config file " + path);
        }
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            const std::string stripped = trim(line);
            if (stripped.empty()) {
                continue;
            }
            const auto eq = stripped.find('=');
            if (eq == std::string::npos) {
                throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
            }
            std::string key = trim(stripped.substr(0, eq));
            if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end()) {
                throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
            }
            file_[key] = trim(stripped.substr(eq + 1));
        }
    }

    std::optional<std::string> raw(const std::string& key) const
    {
        if (auto it = flags_.find(key); it != flags_.end()) {
            return it->second;
        }
        if (auto it = file_.find(key); it != file_.end()) {
            return it->second;
        }
        return std::nullopt;
    }

    bool has(const std::string& key) const { return raw(key).has_value(); }

    double number(const std::string& key, double fallback)
    {
        const auto v = raw(key);
        const double x = v ? parse_double(key, *v) : fallback;
        effective_[key] = x;
        return x;
    }

    std::uint64_t integer(const std::string& key, std::uint64_t fallback)
    {
        const auto v = raw(key);
        std::uint64_t x = fallback;
        if (v) {
            const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), x);
            if (ec != std::errc() || ptr != v->data() + v->size()) {
                throw ConfigError(key + ": not a non-negative integer: '" + *v + "'");
            }
        }
        effective_[key] = x;
        return x;
    }

    std::vector<double> list(const std::string& key, const std::vector<double>& fallback)
    {
        std::vector<double> out;
        if (const auto v = raw(key)) {
            std::stringstream ss(*v);
            std::string item;
            while (std::getline(ss, item, ',')) {
                out.push_back(parse_double(key, trim(item)));
            }
            if (out.empty()) {
                throw ConfigError(key + ": empty list");
            }
        } else {
            out = fallback;
        }
        effective_[key] = out;
        return out;
    }

    std::string text(const std::string& key, const std::string& fallback)
    {
        std::string x = raw(key).value_or(fallback);
        effective_[key] = x;
        return x;
    }

    bool boolean(const std::string& key, bool fallback)
    {
        bool x = fallback;
        if (const auto v = raw(key)) {
            if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") {
                x = true;
            } else if (*v == "false" || *v == "0" || *v == "no" || *v == "off") {
                x = false;
            } else {
                throw ConfigError(key + ": expected true or false, got '" + *v + "'");
            }
        }
        effective_[key] = x;
        return x;
    }

    const nlohmann::ordered_json& effective() const { return effective_; }

private:
    static std::string trim(const std::string& s)
    {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            return {};
        }
        return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    }

    static double parse_double(const std::string& key, const std::string& s)
    {
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
            throw ConfigError(key + ": not a number: '" + s + "'");
        }
        return x;
    }

    std::map<std::string, std::string> flags_;
    std::map<std::string, std::string> file_;
    nlohmann::ordered_json effective_ = nlohmann::ordered_json::object();
};

struct Common {
    double Lambda = 1.0;
    double Omega = 1.0;
    std::string format = "csv";
    std::string output;
    PhaseConvention phases = PhaseConvention::printed;
    Execution execution = Execution::parallel;
};

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw ConfigError(message);
    }
}

Common read_common(Settings& s)
{
    Common c;
    c.Lambda = s.number("lambda", 1.0);
    c.Omega = s.number("omega", 1.0);
    require(c.Lambda > 0.0, "lambda must be positive");
    require(c.Omega > 0.0, "omega must be positive");
    c.format = s.text("format", "csv");
    require(c.format == "csv" || c.format == "json", "format must be csv or json");
    c.output = s.text("output", "");
    const std::string phase = s.text("phase", "printed");
    require(phase == "printed" || phase == "canonical", "phase must be printed or canonical");
    c.phases = phase == "printed" ? PhaseConvention::printed : PhaseConvention::canonical;
    c.execution = s.boolean("serial", false) ? Execution::serial : Execution::parallel;
    return c;
}

void require_cs(const std::vector<double>& cs_list, bool allow_one)
{
    for (double cs : cs_list) {
        require(cs > 0.0 && (allow_one ? cs <= 1.0 : cs < 1.0), "cs must lie in (0, 1]: " + format_double(cs));
    }
}

RateOptions read_rate_options(Settings& s, const Common& c)
{
    RateOptions ro;
    ro.rel_tol = s.number("tol", ro.rel_tol);
    require(ro.rel_tol > 0.0 && ro.rel_tol < 1.0, "tol must lie in (0, 1)");
    ro.phases = c.phases;
    return ro;
}

void emit(Table& table, const Common& c, const Settings& s, const std::string& command)
{
    auto& meta = table.metadata();
    meta["command"] = command;
    meta["version"] = TCPHONON_VERSION;
    meta["config"] = s.effective();
    if (c.output.empty()) {
        c.format == "json" ? table.write_json(std::cout) : table.write_csv(std::cout);
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open output file " + c.output);
    }
    c.format == "json" ? table.write_json(out) : table.write_csv(out);
    if (!out) {
        throw std::runtime_error("write failed: " + c.output);
    }
}

void require_finite(const Table& t)
{
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (double v : t.row(i)) {
            if (!std::isfinite(v)) {
                throw std::runtime_error("non-finite value in output row " + std::to_string(i));
            }
        }
    }
}

std::vector<double> k_grid(Settings& s, double Lambda, double kmin_default, double kmax_default, int points_default,
                           bool* log_scale = nullptr)
{
    const double kmax = s.number("kmax", kmax_default) * Lambda;
    const auto points = static_cast<int>(s.integer("points", static_cast<std::uint64_t>(points_default)));
    require(points >= 1, "points must be at least 1");
    const double kmin = s.number("kmin", kmin_default > 0.0 ? kmin_default : kmax_default / points) * Lambda;
    require(kmin > 0.0, "k grid must exclude 0 (kmin > 0)");
    require(points == 1 ? kmin <= kmax : kmin < kmax, "kmin must be below kmax");
    const bool log = log_scale && *log_scale;
    if (points == 1) {
        return {kmax};
    }
    return log ? logspace(kmin, kmax, points) : linspace(kmin, kmax, points);
}

int cmd_spectrum(Settings& s)
{
    const Common c = read_common(s);
    const auto cs = s.list("cs", {0.5});
    require(cs.size() == 1, "spectrum takes a single cs");
    require_cs(cs, true);
    bool log = s.boolean("log", false);
    const auto grid = k_grid(s, c.Lambda, 1e-3, 2.0, 200, &log);
    const ModelParams m = params_from_physical({c.Lambda, cs[0], c.Omega});
    const auto rows = scan_spectrum(m, grid, c.execution);

    Table t({"k", "omega_G", "omega_L", "abs_pi_G", "abs_pi_L", "abs_sigma_G", "abs_sigma_L"});
    for (const SpectrumRow& r : rows) {
        t.add_row({r.point.k, r.point.omega_G, r.point.omega_L, std::abs(r.amps.pi_G), std::abs(r.amps.pi_L),
                   std::abs(r.amps.sigma_G), std::abs(r.amps.sigma_L)});
    }
    require_finite(t);
    emit(t, c, s, "spectrum");
    return exit_ok;
}

int cmd_fig1(Settings& s)
{
    const Common c = read_common(s);
    const RateOptions ro = read_rate_options(s, c);
    std::vector<double> grid;
    if (s.has("cs")) {
        grid = s.list("cs", {});
    } else {
        const auto points = static_cast<int>(s.integer("points", 200));
        require(points >= 2, "points must be at least 2");
        grid = linspace(0.05, 0.99, points);
    }
    require_cs(grid, true);
    require_increasing(grid, "cs");
    const bool units = s.boolean("figure-units", true);

    const RateCurve curve = scan_lambda_rate(c.Lambda, c.Omega, grid, ro, c.execution);
    std::vector<std::string> columns{"cs", "rate_dimensionless", "rate_error"};
    if (units) {
        columns.push_back("rate_fig1_units_assuming_omega_eq_lambda");
    }
    Table t(columns);
    const PhysicalParams fixed{c.Lambda, 1.0, c.Omega};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = rate_dimensionless(fixed, curve.rates[i]);
        std::vector<double> row{grid[i], r, rate_dimensionless(fixed, curve.errors[i])};
        if (units) {
            row.push_back(r / fig1_rate_unit);
        }
        t.add_row(row);
    }
    require_finite(t);
    if (grid.size() >= 2) {
        t.metadata()["amplitude_zeros_cs"] = lambda_amplitude_zeros(c.Lambda, c.Omega, grid, c.phases);
    }
    if (units) {
        t.metadata()["figure_units"] = "rate_fig1_units = Gamma Omega^4 / Lambda^5 / 3.5e-4, meaningful only for Omega = Lambda";
    }
    emit(t, c, s, "fig1");
    return exit_ok;
}

int cmd_fig2(Settings& s)
{
    const Common c = read_common(s);
    const RateOptions ro = read_rate_options(s, c);
    const auto cs_list = s.list("cs", {0.35, 0.5, 0.65, 0.8, 0.95});
    require_cs(cs_list, true);
    const auto grid = k_grid(s, c.Lambda, 0.0, 2.0, 100);
    const bool units = s.boolean("figure-units", true);

    const auto curves = scan_g_rate(c.Lambda, c.Omega, cs_list, grid, ro, c.execution);
    std::vector<std::string> columns{"k", "cs", "rate_dimensionless", "rate_error"};
    if (units) {
        columns.push_back("rate_fig2_units_assuming_omega_eq_lambda");
    }
    Table t(columns);
    for (const RateCurve& curve : curves) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double r = rate_dimensionless(curve.fixed, curve.rates[i]);
            std::vector<double> row{grid[i], curve.fixed.cs, r, rate_dimensionless(curve.fixed, curve.errors[i])};
            if (units) {
                row.push_back(r / fig2_rate_unit);
            }
            t.add_row(row);
        }
    }
    require_finite(t);
    if (units) {
        t.metadata()["figure_units"] = "rate_fig2_units = Gamma Omega^4 / Lambda^5 / 4e-5, meaningful only for Omega = Lambda";
    }
    emit(t, c, s, "fig2");
    return exit_ok;
}

McOptions read_mc(Settings& s, const Common& c)
{
    McOptions mc;
    mc.seed = s.integer("seed", 1);
    mc.samples = s.integer("mc-samples", mc.samples);
    require(mc.samples >= 1024, "mc-samples must be at least 1024");
    mc.phases = c.phases;
    mc.execution = c.execution;
    return mc;
}

int cmd_rate_lambda(Settings& s)
{
    const Common c = read_common(s);
    const RateOptions ro = read_rate_options(s, c);
    const auto cs_list = s.list("cs", {0.5});
    require_cs(cs_list, true);
    const bool mc = s.boolean("mc", false);
    const McOptions mco = read_mc(s, c);

    std::vector<std::string> columns{"cs", "k_threshold", "rate", "rate_dimensionless", "rate_error", "open"};
    if (mc) {
        columns.insert(columns.end(), {"mc_rate", "mc_halving_shift", "mc_converged"});
    }
    Table t(columns);
    for (std::size_t i = 0; i < cs_list.size(); ++i) {
        const PhysicalParams p{c.Lambda, cs_list[i], c.Omega};
        const DecayResult r = rate_lambda_to_2g(p, ro);
        std::vector<double> row{p.cs, lambda_threshold_momentum(p), r.rate, rate_dimensionless(p, r.rate),
                                r.estimated_error, r.kinematically_open ? 1.0 : 0.0};
        if (mc) {
            McOptions o = mco;
            o.stream = i;
            const McResult m = mc_rate_oracle(p, {Process::lambda_to_2g, 0.0}, o);
            row.insert(row.end(), {m.result.rate, m.halving_shift, m.converged ? 1.0 : 0.0});
        }
        t.add_row(row);
    }
    require_finite(t);
    emit(t, c, s, "rate-lambda");
    return exit_ok;
}

int cmd_rate_g(Settings& s)
{
    const Common c = read_common(s);
    const RateOptions ro = read_rate_options(s, c);
    const auto cs_list = s.list("cs", {0.5});
    require_cs(cs_list, true);
    std::vector<double> ks;
    if (s.has("k")) {
        for (double k : s.list("k", {})) {
            require(k > 0.0, "k must be positive");
            ks.push_back(k * c.Lambda);
        }
    } else {
        ks = k_grid(s, c.Lambda, 1.0, 1.0, 1);
    }
    const bool mc = s.boolean("mc", false);
    const McOptions mco = read_mc(s, c);

    std::vector<std::string> columns{"k", "cs", "rate", "rate_dimensionless", "rate_error", "open"};
    if (mc) {
        columns.insert(columns.end(), {"mc_rate", "mc_halving_shift", "mc_converged"});
    }
    Table t(columns);
    std::uint64_t stream = 0;
    for (double cs : cs_list) {
        const PhysicalParams p{c.Lambda, cs, c.Omega};
        for (double k : ks) {
            const DecayResult r = rate_g_to_2g(p, k, ro);
            std::vector<double> row{k, cs, r.rate, rate_dimensionless(p, r.rate), r.estimated_error,
                                    r.kinematically_open ? 1.0 : 0.0};
            if (mc) {
                McOptions o = mco;
                o.stream = stream;
                const McResult m = mc_rate_oracle(p, {Process::g_to_2g, k}, o);
                row.insert(row.end(), {m.result.rate, m.halving_shift, m.converged ? 1.0 : 0.0});
            }
            ++stream;
            t.add_row(row);
        }
    }
    require_finite(t);
    emit(t, c, s, "rate-g");
    return exit_ok;
}

int cmd_check(Settings& s)
{
    const Common c = read_common(s);
    CheckOptions o;
    o.Lambda = c.Lambda;
    o.Omega = c.Omega;
    o.execution = c.execution;
    o.tolerance_scale = s.number("tol", 1.0);
    require(o.tolerance_scale >= 0.0, "tol must be non-negative");
    o.kmax = s.number("kmax", o.kmax);
    require(o.kmax > 0.0, "kmax must be positive");
    o.k_points = static_cast<int>(s.integer("points", static_cast<std::uint64_t>(o.k_points)));
    require(o.k_points >= 2, "points must be at least 2");
    o.cs_list = s.list("cs", o.cs_list);
    require_cs(o.cs_list, false);
    o.seed = s.integer("seed", o.seed);
    o.mc_samples = s.integer("mc-samples", o.mc_samples);
    require(o.mc_samples >= 1024, "mc-samples must be at least 1024");

    const auto results = run_invariant_suite(o);
    int failed = 0;
    std::ostringstream report;
    for (const CheckResult& r : results) {
        failed += r.passed ? 0 : 1;
        report << (r.passed ? "PASS " : "FAIL ") << r.name << "  measured=" << format_double(r.measured)
               << "  tol=" << format_double(r.tolerance);
        if (!r.detail.empty()) {
            report << "  (" << r.detail << ")";
        }
        report << '\n';
    }
    report << results.size() - failed << "/" << results.size() << " checks passed\n";

    if (c.format == "json" || !c.output.empty()) {
        nlohmann::ordered_json j;
        j["command"] = "check";
        j["version"] = TCPHONON_VERSION;
        j["config"] = s.effective();
        j["passed"] = failed == 0;
        for (const CheckResult& r : results) {
            j["checks"].push_back({{"name", r.name},
                                   {"passed", r.passed},
                                   {"measured", std::isfinite(r.measured) ? nlohmann::ordered_json(r.measured) : nullptr},
                                   {"tolerance", r.tolerance},
                                   {"detail", r.detail}});
        }
        const std::string text = c.format == "json" ? j.dump(2) + "\n" : report.str();
        if (c.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(c.output, std::ios::binary);
            if (!out) {
                throw ConfigError("cannot open output file " + c.output);
            }
            out << text;
        }
        if (c.format == "json") {
            std::cerr << report.str();
        } else if (!c.output.empty()) {
            std::cout << report.str();
        }
    } else {
        std::cout << report.str();
    }
    return failed == 0 ? exit_ok : exit_numerical;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Phonon spectrum and decay rates of a two-field superfluid", "tcphonon"};
    app.set_version_flag("--version", TCPHONON_VERSION);
    app.require_subcommand(1);

    Settings settings;
    std::map<std::string, std::string> values;
    std::string config_path;
    bool log_flag = false, mc_flag = false, serial_flag = false;

    auto add_common = [&](CLI::App* sub) {
        for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
                 {"lambda", "gap of the optical branch"},
                 {"omega", "symmetry-breaking scale"},
                 {"cs", "sound speed, or comma-separated list"},
                 {"kmin", "smallest k, units of lambda"},
                 {"kmax", "largest k, units of lambda"},
                 {"points", "grid points"},
                 {"tol", "relative quadrature tolerance (check: tolerance multiplier)"},
                 {"seed", "Monte-Carlo seed"},
                 {"format", "csv or json"},
                 {"output", "output file (default stdout)"},
                 {"phase", "printed or canonical"},
                 {"mc-samples", "Monte-Carlo samples"},
                 {"figure-units", "emit figure-unit columns (true|false)"}}) {
            sub->add_option("--" + name, values[name], help);
        }
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_flag("--serial", serial_flag, "serial reference kernels");
    };

    auto* spectrum = app.add_subcommand("spectrum", "dispersion and mode amplitudes over a k grid");
    add_common(spectrum);
    spectrum->add_flag("--log", log_flag, "log-spaced k grid");
    auto* fig1 = app.add_subcommand("fig1", "gapped-mode decay rate versus cs");
    add_common(fig1);
    auto* fig2 = app.add_subcommand("fig2", "Goldstone decay rate versus k for several cs");
    add_common(fig2);
    auto* rate_lambda = app.add_subcommand("rate-lambda", "decay rate of the gapped mode at rest");
    add_common(rate_lambda);
    rate_lambda->add_flag("--mc", mc_flag, "also run the Monte-Carlo oracle");
    auto* rate_g = app.add_subcommand("rate-g", "decay rate of a Goldstone of momentum k");
    add_common(rate_g);
    rate_g->add_option("--k", values["k"], "momentum or comma-separated list, units of lambda");
    rate_g->add_flag("--mc", mc_flag, "also run the Monte-Carlo oracle");
    auto* check = app.add_subcommand("check", "run the invariant suite");
    add_common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        for (const auto& [key, value] : values) {
            if (!value.empty()) {
                settings.set_flag(key, value);
            }
        }
        if (log_flag) {
            settings.set_flag("log", "true");
        }
        if (mc_flag) {
            settings.set_flag("mc", "true");
        }
        if (serial_flag) {
            settings.set_flag("serial", "true");
        }
        if (!config_path.empty()) {
            settings.load_file(config_path);
        }

        if (spectrum->parsed()) return cmd_spectrum(settings);
        if (fig1->parsed()) return cmd_fig1(settings);
        if (fig2->parsed()) return cmd_fig2(settings);
        if (rate_lambda->parsed()) return cmd_rate_lambda(settings);
        if (rate_g->parsed()) return cmd_rate_g(settings);
        if (check->parsed()) return cmd_check(settings);
    } catch (const ConfigError& e) {
        std::cerr << "tcphonon: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "tcphonon: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "tcphonon: numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_usage;
}
