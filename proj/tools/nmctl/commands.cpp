#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nmcontrol/bloch.hpp"
#include "nmcontrol/control_optimizer.hpp"
#include "nmcontrol/dephasing_maps.hpp"
#include "nmcontrol/env_oracle.hpp"
#include "nmcontrol/errors.hpp"
#include "nmcontrol/spectral_kernels.hpp"
#include "svg.hpp"
#include "table.hpp"

namespace nmctl {
namespace {

using nmc::BlochVector;
using std::numbers::pi;

double parse_number(std::string_view text, std::string_view what) {
    if (text.empty()) return 1.0;
    if (text == "-") return -1.0;
    if (text == "+") return 1.0;
    if (text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v))
        throw nmc::ConfigError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

// Shared options for commands that build a one-pulse protocol.
struct ProtocolOptions {
    std::string phi_in{"auto"};
    std::string pulse_time{"auto"};
    std::string pulse_axis{"y"};
    std::string pulse_angle{"auto"};
};

struct OutputOptions {
    std::string out;
    std::string format{"csv"};
    std::string svg;

    Format fmt() const { return format == "json" ? Format::json : Format::csv; }
};

void add_output(CLI::App* cmd, OutputOptions& o, bool with_svg) {
    cmd->add_option("--out", o.out, "Output file (stdout when omitted; relative to $NMCTL_OUT_DIR if set)");
    cmd->add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
    if (with_svg) cmd->add_option("--svg", o.svg, "Also write an SVG plot to this path");
}

void add_protocol(CLI::App* cmd, ProtocolOptions& p) {
    cmd->add_option("--phi-in", p.phi_in, "Initial polar angle (e.g. 0.2pi); auto = constraint solution");
    cmd->add_option("--pulse-time", p.pulse_time, "Pulse instant; auto = first sign change of the rate");
    cmd->add_option("--pulse-axis", p.pulse_axis, "Rotation axis")->check(CLI::IsMember({"x", "y", "z"}));
    cmd->add_option("--pulse-angle", p.pulse_angle, "Rotation angle; auto = rotate onto the equator");
}

// Emits the table to --out or the output stream. Messages that accompany a
// table go to `out` when the table went to a file, otherwise to `err`.
std::ostream& emit(const Table& table, const OutputOptions& o, std::ostream& out, std::ostream& err) {
    const std::string text = table.render(o.fmt());
    if (o.out.empty()) {
        out << text;
        return err;
    }
    write_atomic(resolve_output(o.out), text);
    return out;
}

void emit_svg(const SvgPlot& plot, const OutputOptions& o) {
    if (!o.svg.empty()) write_atomic(resolve_output(o.svg), plot.render());
}

struct ResolvedProtocol {
    BlochVector initial;
    nmc::ControlProtocol protocol;
    double t_max{0.0};
};

double default_horizon(const nmc::SpectralParams& params) {
    try {
        return nmc::horizon(params).T;
    } catch (const nmc::HorizonError&) {
        return nmc::kDefaultHorizon;
    }
}

ResolvedProtocol resolve_protocol(const ProtocolOptions& opt, const nmc::SpectralParams& params, double t_max) {
    ResolvedProtocol out;
    out.t_max = t_max;

    double phi_in = pi / 2;
    if (const auto given = parse_angle(opt.phi_in)) {
        phi_in = *given;
    } else if (const auto plan = nmc::controlled_protocol(params, t_max)) {
        phi_in = plan->phi_in;
    }
    out.initial = BlochVector::from_angles(phi_in);

    double tp = 0.0;
    if (opt.pulse_time == "auto") {
        const auto roots = nmc::rate_zero_crossings(params);
        if (roots.empty())
            throw InfeasibleError("the decay rate never changes sign for this s; give --pulse-time explicitly");
        tp = roots.front();
    } else {
        tp = parse_number(opt.pulse_time, "pulse time");
    }

    const auto axis = *nmc::parse_axis(opt.pulse_axis);
    double angle = 0.0;
    if (const auto given = parse_angle(opt.pulse_angle)) {
        angle = *given;
    } else {
        if (axis != nmc::Axis::y) throw nmc::ConfigError("--pulse-angle auto needs --pulse-axis y");
        angle = nmc::equator_pulse_angle(nmc::propagate_uncontrolled(out.initial, tp, params));
    }
    out.protocol = nmc::ControlProtocol::single(tp, axis, angle);
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v;
    if (n == 1) return {lo};
    for (std::size_t i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return v;
}

// ---------------------------------------------------------------- rate

struct RateCmd {
    double s{0.0};
    double t_max{10.0};
    std::size_t steps{1000};
    OutputOptions o;

    void attach(CLI::App& app) {
        auto* c = app.add_subcommand("rate", "Tabulate the decay rate, decoherence function and phase generator");
        c->add_option("--s", s, "Ohmicity")->required();
        c->add_option("--t-max", t_max, "End of the time grid")->check(CLI::PositiveNumber);
        c->add_option("--steps", steps, "Grid intervals")->check(CLI::PositiveNumber);
        add_output(c, o, false);
    }

    int run(std::ostream& out, std::ostream& err) const {
        const nmc::SpectralParams params(s);
        std::vector<double> times;
        for (std::size_t i = 0; i <= steps; ++i) times.push_back(t_max * static_cast<double>(i) / static_cast<double>(steps));
        for (double root : nmc::rate_zero_crossings(params))
            if (root <= t_max) times.push_back(root);
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());

        Table table({"t", "gamma", "big_gamma", "tilde_gamma"});
        for (double t : times) {
            const auto k = nmc::sample_kernels(t, params);
            table.add_row({k.t, k.gamma, k.big_gamma, k.tilde_gamma});
        }
        emit(table, o, out, err);
        return kOk;
    }
};

// ---------------------------------------------------------------- flux-field

struct FluxCmd {
    double s{0.0};
    double t{1.0};
    int resolution{101};
    double extent{1.0};
    OutputOptions o;

    void attach(CLI::App& app) {
        auto* c = app.add_subcommand("flux-field", "Purity flux over the x-z disc at one time");
        c->add_option("--s", s, "Ohmicity")->required();
        c->add_option("--t", t, "Time of the snapshot")->check(CLI::NonNegativeNumber);
        c->add_option("--resolution", resolution, "Grid points per axis");
        c->add_option("--extent", extent, "Half-width of the grid");
        add_output(c, o, true);
    }

    int run(std::ostream& out, std::ostream& err) const {
        const nmc::SpectralParams params(s);
        const auto field = nmc::flux_field({extent, resolution}, t, params);
        Table table({"rx", "rz", "flux"});
        double scale = 0.0;
        for (const auto& p : field) {
            table.add_row({p.rx, p.rz, p.flux});
            scale = std::max(scale, std::fabs(p.flux));
        }
        emit(table, o, out, err);

        SvgPlot plot(-extent, extent, -extent, extent);
        plot.title("purity flux, s = " + format_double(s) + ", t = " + format_double(t));
        const double cell = resolution > 1 ? 2.0 * extent / (resolution - 1) : 2.0 * extent;
        for (const auto& p : field) plot.cell(p.rx, p.rz, cell, cell, diverging_color(scale > 0 ? p.flux / scale : 0.0));
        plot.unit_circle();
        plot.axes();
        plot.labels("rx", "rz");
        plot.legend("flux > 0", "#0000ff");
        plot.legend("flux < 0", "#ff0000");
        emit_svg(plot, o);
        return kOk;
    }
};

// ---------------------------------------------------------------- trajectory

struct TrajectoryCmd {
    double s{0.0};
    std::string mode{"both"};
    ProtocolOptions p;
    double t_max{0.0};
    std::size_t steps{3000};
    OutputOptions o;

    void attach(CLI::App& app) {
        auto* c = app.add_subcommand("trajectory", "Bloch trajectory under a one-pulse protocol");
        c->add_option("--s", s, "Ohmicity")->required();
        c->add_option("--mode", mode, "Propagation picture")
            ->check(CLI::IsMember({"fixed", "microscopic", "uncontrolled", "both"}));
        add_protocol(c, p);
        c->add_option("--t-max", t_max, "End time; default is the control horizon");
        c->add_option("--steps", steps, "Grid intervals")->check(CLI::PositiveNumber);
        add_output(c, o, true);
    }

    int run(std::ostream& out, std::ostream& err) const {
        const nmc::SpectralParams params(s);
        const double horizon = t_max > 0.0 ? t_max : default_horizon(params);
        const auto proto = resolve_protocol(p, params, horizon);

        std::vector<nmc::PropagationMode> modes;
        if (mode == "both") modes = {nmc::PropagationMode::fixed_dissipator, nmc::PropagationMode::microscopic};
        else modes = {*nmc::parse_mode(mode)};

        std::vector<std::string> columns{"t", "rx", "ry", "rz", "purity", "coherence", "inside_ball"};
        if (modes.size() > 1) columns.insert(columns.begin(), "mode");
        Table table(columns);

        SvgPlot plot(-1.5, 1.5, -1.5, 1.5);
        plot.title("Bloch trajectory, s = " + format_double(s));
        plot.unit_circle();
        plot.axes();
        plot.labels("rx", "rz");
        const double tp = proto.protocol.pulses().front().time;
        bool legend_pre = false;

        for (auto m : modes) {
            const auto traj = nmc::sample_trajectory(m, proto.initial, proto.protocol, horizon, steps, params);
            std::vector<std::pair<double, double>> before, after;
            bool crossed = false;
            for (std::size_t i = 0; i < traj.size(); ++i) {
                const auto& smp = traj[i];
                std::vector<Value> row;
                if (modes.size() > 1) row.emplace_back(std::string(nmc::to_string(m)));
                row.insert(row.end(), std::initializer_list<Value>{smp.t, smp.state.rx, smp.state.ry, smp.state.rz, nmc::purity(smp.state),
                                       nmc::coherence(smp.state), smp.state.inside_ball()});
                table.add_row(std::move(row));

                if (m != nmc::PropagationMode::uncontrolled && smp.t == tp && traj.at_pulse(i) &&
                    i + 1 < traj.size() && traj[i + 1].t == tp) {
                    before.emplace_back(smp.state.rx, smp.state.rz);
                    crossed = true;
                    continue;
                }
                (crossed ? after : before).emplace_back(smp.state.rx, smp.state.rz);
            }
            if (!legend_pre) {
                plot.polyline(before, "#1f77b4", 2.0);
                plot.legend("before pulse", "#1f77b4");
                legend_pre = true;
            }
            const bool exact = m == nmc::PropagationMode::microscopic;
            const std::string color = exact ? "#2ca02c" : "#d62728";
            plot.polyline(after, color, 2.0);
            if (!after.empty()) plot.legend(exact ? "after pulse (exact)" : "after pulse (fixed dissipator)", color);
        }
        emit(table, o, out, err);
        emit_svg(plot, o);
        return kOk;
    }
};

// ---------------------------------------------------------------- cp-audit

struct AuditCmd {
    double s{0.0};
    ProtocolOptions p;
    double t_max{0.0};
    std::size_t steps{300};
    std::size_t samples{256};
    std::string mode{"fixed"};
    OutputOptions o;

    void attach(CLI::App& app) {
        auto* c = app.add_subcommand("cp-audit", "Complete-positivity audit of the controlled map");
        c->add_option("--s", s, "Ohmicity")->required();
        add_protocol(c, p);
        c->add_option("--t-max", t_max, "End of the scan; default is the control horizon");
        c->add_option("--steps", steps, "Scan intervals")->check(CLI::PositiveNumber);
        c->add_option("--samples", samples, "Initial pure states on the Fibonacci lattice")->check(CLI::PositiveNumber);
        c->add_option("--mode", mode, "Propagation picture")->check(CLI::IsMember({"fixed", "microscopic"}));
        add_output(c, o, false);
    }

    int run(std::ostream& out, std::ostream& err) const {
        const nmc::SpectralParams params(s);
        const double horizon = t_max > 0.0 ? t_max : default_horizon(params);
        const auto proto = resolve_protocol(p, params, horizon);
        const auto report = nmc::cp_audit(proto.protocol, params, horizon, steps, samples, *nmc::parse_mode(mode));

        Table table({"t", "min_choi_eig", "max_bloch_norm"});
        for (const auto& row : report.rows) table.add_row({row.t, row.min_choi_eigenvalue, row.max_bloch_norm});
        auto& msg = emit(table, o, out, err);
        msg << "verdict: " << (report.cp_violating ? "CP-violating" : "CP")
            << " (min Choi eigenvalue " << format_double(report.min_choi_eigenvalue) << " at t = "
            << format_double(report.worst_time) << ", max |r| " << format_double(report.max_bloch_norm) << ")\n";
        return kOk;
    }
};

// ---------------------------------------------------------------- sweep

constexpr double kSweepLow = 2.0;   // exclusive
constexpr double kSweepHigh = 6.0;  // inclusive

std::vector<double> trimmed_grid(double lo, double hi, std::size_t n, std::ostream& err) {
    std::vector<double> kept;
    for (double s : linspace(lo, hi, n)) {
        if (s > kSweepLow && s <= kSweepHigh) kept.push_back(s);
        else err << "warning: s = " << format_double(s) << " outside (2, 6] dropped from the sweep\n";
    }
    if (kept.empty()) throw InfeasibleError("no sweep point lies in (2, 6]");
    return kept;
}

struct SweepCmd {
    double s_min{2.5};
    double s_max{6.0};
    std::size_t s_steps{8};
    double default_T{nmc::kDefaultHorizon};
    std::size_t steps{nmc::kDefaultQuadratureSteps};
    OutputOptions o;

    void attach(CLI::App& app) {
        auto* c = app.add_subcommand("sweep", "Optimal average coherence across Ohmicities");
        c->add_option("--s-min", s_min, "Smallest s");
        c->add_option("--s-max", s_max, "Largest s");
        c->add_option("--s-steps", s_steps, "Number of s values")->check(CLI::PositiveNumber);
        c->add_option("--default-T", default_T, "Horizon when the rate changes sign only once")
            ->check(CLI::PositiveNumber);
        c->add_option("--steps", steps, "Quadrature intervals")->check(CLI::PositiveNumber);
        add_output(c, o, true);
    }

    int run(std::ostream& out, std::ostream& err) const {
        if (s_min > s_max) throw nmc::ConfigError("--s-min exceeds --s-max");
        const auto grid = trimmed_grid(s_min, s_max, s_steps, err);
        const auto results = nmc::sweep(grid, default_T, steps);

        Table table({"s", "T", "t_tilde", "phi_in", "pulse_angle", "cbar_uncontrolled", "cbar_controlled",
                     "cbar_controlled_microscopic", "feasible"});
        std::vector<std::pair<double, double>> unc, con, mic;
        bool any = false;
        for (const auto& r : results) {
            table.add_row({r.s, r.T, r.t_tilde, r.phi_in, r.pulse_angle, r.cbar_uncontrolled, r.cbar_controlled,
                           r.cbar_controlled_microscopic, r.feasible});
            any = any || r.feasible;
            unc.emplace_back(r.s, r.cbar_uncontrolled);
            if (r.feasible) {
                con.emplace_back(r.s, r.cbar_controlled);
                mic.emplace_back(r.s, r.cbar_controlled_microscopic);
            }
        }
        emit(table, o, out, err);

        SvgPlot plot(kSweepLow, kSweepHigh, 0.0, 1.0, 640, 420);
        plot.title("optimal average coherence");
        plot.axes();
        plot.labels("s", "average coherence");
        plot.polyline(unc, "#7f7f7f", 2.0);
        plot.polyline(con, "#d62728", 2.0);
        plot.polyline(mic, "#2ca02c", 2.0);
        plot.legend("uncontrolled", "#7f7f7f");
        plot.legend("controlled (fixed)", "#d62728");
        plot.legend("controlled (exact)", "#2ca02c");
        emit_svg(plot, o);

        if (!any) throw InfeasibleError("no sweep point admits the controlled protocol");
        return kOk;
    }
};

// ---------------------------------------------------------------- t-sensitivity

struct SensitivityCmd {
    double s_min{2.5};
    double s_max{4.0};
    std::size_t s_steps{4};
    std::vector<double> horizons{20.0, 30.0, 50.0};
    std::size_t steps{nmc::kDefaultQuadratureSteps};
    OutputOptions o;

    void attach(CLI::App& app) {
        auto* c = app.add_subcommand("t-sensitivity", "Optimal average coherence for several default horizons");
        c->add_option("--s-min", s_min, "Smallest s");
        c->add_option("--s-max", s_max, "Largest s");
        c->add_option("--s-steps", s_steps, "Number of s values")->check(CLI::PositiveNumber);
        c->add_option("--T", horizons, "Comma-separated horizons")->delimiter(',')->check(CLI::PositiveNumber);
        c->add_option("--steps", steps, "Quadrature intervals")->check(CLI::PositiveNumber);
        add_output(c, o, false);
    }

    int run(std::ostream& out, std::ostream& err) const {
        if (s_min > s_max) throw nmc::ConfigError("--s-min exceeds --s-max");
        const auto grid = trimmed_grid(s_min, s_max, s_steps, err);
        std::vector<double> hs = horizons;
        std::sort(hs.begin(), hs.end());

        Table table({"s", "T", "phi_in", "cbar_uncontrolled", "cbar_controlled", "feasible"});
        std::map<double, std::vector<std::pair<double, double>>> by_s;
        for (double h : hs) {
            for (const auto& r : nmc::sweep(grid, h, steps)) {
                table.add_row({r.s, r.T, r.phi_in, r.cbar_uncontrolled, r.cbar_controlled, r.feasible});
                if (r.feasible) by_s[r.s].emplace_back(r.T, r.cbar_controlled);
            }
        }
        auto& msg = emit(table, o, out, err);
        for (auto& [s, pts] : by_s) {
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end(),
                                  [](const auto& a, const auto& b) { return a.first == b.first; }),
                      pts.end());
            std::string trend = "flat";
            if (pts.size() > 1) {
                bool up = true, down = true;
                for (std::size_t i = 1; i < pts.size(); ++i) {
                    up = up && pts[i].second > pts[i - 1].second;
                    down = down && pts[i].second < pts[i - 1].second;
                }
                trend = up ? "increasing" : down ? "decreasing" : "mixed";
            }
            msg << "trend: s = " << format_double(s) << ": controlled coherence " << trend << " in T over "
                << pts.size() << " distinct horizon(s)\n";
        }
        return kOk;
    }
};

// ---------------------------------------------------------------- oracle-validate

struct OracleCmd {
    double s{3.0};
    std::size_t n_modes{2000};
    double omega_max{50.0};
    std::string phi_in{"0.25pi"};
    std::string pulse_time{"auto"};
    std::string pulse_angle{"0.5pi"};
    double t_max{10.0};
    std::size_t steps{20};
    OutputOptions o;

    static constexpr double kTarget = 1e-2;

    void attach(CLI::App& app) {
        auto* c = app.add_subcommand("oracle-validate", "Compare closed forms with the discretized environment");
        c->add_option("--s", s, "Ohmicity");
        c->add_option("--n-modes", n_modes, "Bath modes")->check(CLI::PositiveNumber);
        c->add_option("--omega-max", omega_max, "Frequency cutoff of the discretization")->check(CLI::PositiveNumber);
        c->add_option("--phi-in", phi_in, "Initial polar angle");
        c->add_option("--pulse-time", pulse_time, "y-pulse instant; auto = first sign change of the rate");
        c->add_option("--pulse-angle", pulse_angle, "y-pulse angle");
        c->add_option("--t-max", t_max, "End of the comparison grid")->check(CLI::PositiveNumber);
        c->add_option("--steps", steps, "Grid points")->check(CLI::PositiveNumber);
        add_output(c, o, false);
    }

    int run(std::ostream& out, std::ostream& err) const {
        const nmc::SpectralParams params(s);
        const auto env = nmc::build_env(params, n_modes, omega_max);
        const auto phi = parse_angle(phi_in);
        const auto angle = parse_angle(pulse_angle);
        if (!phi || !angle) throw nmc::ConfigError("oracle-validate needs explicit --phi-in and --pulse-angle");
        double tp = t_max;
        if (pulse_time == "auto") {
            const auto roots = nmc::rate_zero_crossings(params);
            if (!roots.empty()) tp = roots.front();
        } else {
            tp = parse_number(pulse_time, "pulse time");
        }
        const auto r0 = BlochVector::from_angles(*phi);
        const auto protocol = nmc::ControlProtocol::single(tp, nmc::Axis::y, *angle);

        Table table({"t", "big_gamma_closed", "big_gamma_oracle", "big_gamma_err", "rx_closed", "ry_closed",
                     "rz_closed", "rx_oracle", "ry_oracle", "rz_oracle", "bloch_err"});
        double worst = 0.0;
        for (std::size_t i = 1; i <= steps; ++i) {
            const double t = t_max * static_cast<double>(i) / static_cast<double>(steps);
            const double g_closed = nmc::decoherence_fn(t, params);
            const double g_oracle = nmc::oracle_decoherence(env, t);
            const auto closed = nmc::propagate_microscopic(r0, protocol, t, params);
            const auto oracle = nmc::oracle_bloch_vector(r0, *angle, t, tp, env);
            const double bloch_err = nmc::norm(closed.vec() - oracle.vec());
            worst = std::max(worst, bloch_err);
            table.add_row({t, g_closed, g_oracle, std::fabs(g_closed - g_oracle), closed.rx, closed.ry, closed.rz,
                           oracle.rx, oracle.ry, oracle.rz, bloch_err});
        }
        auto& msg = emit(table, o, out, err);
        msg << "max Bloch error " << format_double(worst) << " over " << steps << " points with " << n_modes
            << " modes: " << (worst < kTarget ? "within" : "above") << " the 0.01 target\n";
        return kOk;
    }
};

}  // namespace

std::optional<double> parse_angle(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "auto") return std::nullopt;
    const auto at = text.find("pi");
    if (at == std::string_view::npos) return parse_number(text.empty() ? "x" : text, "angle");
    double value = parse_number(text.substr(0, at), "angle") * pi;
    const auto rest = text.substr(at + 2);
    if (!rest.empty()) {
        if (rest.front() != '/') throw nmc::ConfigError("cannot parse angle '" + std::string(text) + "'");
        const double denom = parse_number(rest.substr(1).empty() ? "x" : rest.substr(1), "angle");
        if (denom == 0.0) throw nmc::ConfigError("angle denominator is zero");
        value /= denom;
    }
    return value;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"nmctl: non-Markovian dephasing, pulse control and CP audits for a single qubit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "nmctl 0.1.0");

    RateCmd rate;
    FluxCmd flux;
    TrajectoryCmd trajectory;
    AuditCmd audit;
    SweepCmd sweep;
    SensitivityCmd sensitivity;
    OracleCmd oracle;
    rate.attach(app);
    flux.attach(app);
    trajectory.attach(app);
    audit.attach(app);
    sweep.attach(app);
    sensitivity.attach(app);
    oracle.attach(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        const auto* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        if (name == "rate") return rate.run(out, err);
        if (name == "flux-field") return flux.run(out, err);
        if (name == "trajectory") return trajectory.run(out, err);
        if (name == "cp-audit") return audit.run(out, err);
        if (name == "sweep") return sweep.run(out, err);
        if (name == "t-sensitivity") return sensitivity.run(out, err);
        if (name == "oracle-validate") return oracle.run(out, err);
        err << "error: unknown subcommand " << name << "\n";
        return kConfigError;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const std::invalid_argument& e) {  // ConfigError, UnsupportedProtocolError
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const nmc::HorizonError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
}

}  // namespace nmctl
