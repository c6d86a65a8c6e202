#include "nmcontrol/control_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "nmcontrol/errors.hpp"

namespace nmc {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Cumulative trapezoid table of int_0^t e^{-Gamma(u)} du on a uniform grid.
class DecayIntegralTable {
public:
    DecayIntegralTable(const SpectralParams& params, double T, std::size_t cells) : T_(T), cum_(cells + 1, 0.0) {
        const double h = T / static_cast<double>(cells);
        double prev = 1.0;  // e^{-Gamma(0)}
        for (std::size_t i = 1; i <= cells; ++i) {
            const double cur = std::exp(-decoherence_fn(h * static_cast<double>(i), params));
            cum_[i] = cum_[i - 1] + 0.5 * h * (prev + cur);
            prev = cur;
        }
    }

    double at(double t) const {
        const double pos = std::clamp(t / T_, 0.0, 1.0) * static_cast<double>(cum_.size() - 1);
        const auto i = std::min(static_cast<std::size_t>(pos), cum_.size() - 2);
        const double frac = pos - static_cast<double>(i);
        return cum_[i] + frac * (cum_[i + 1] - cum_[i]);
    }

private:
    double T_;
    std::vector<double> cum_;
};

OptimizationResult infeasible_from(OptimizationResult base) {
    base.feasible = false;
    base.t_tilde = kNaN;
    base.pulse_angle = kNaN;
    base.cbar_controlled = kNaN;
    base.cbar_controlled_microscopic = kNaN;
    return base;
}

}  // namespace

double average_coherence(const Trajectory& traj, double T) {
    if (!(T > 0.0)) throw ConfigError("average_coherence: T must be positive");
    if (traj.start_time() > 0.0) throw ConfigError("average_coherence: trajectory must start at t = 0");
    if (traj.end_time() < T * (1.0 - 1e-12)) throw ConfigError("average_coherence: trajectory ends before T");

    double integral = 0.0;
    for (std::size_t i = 1; i < traj.size(); ++i) {
        const double t0 = traj[i - 1].t;
        const double t1 = traj[i].t;
        if (t0 >= T) break;
        const double c0 = coherence(traj[i - 1].state);
        double c1 = coherence(traj[i].state);
        double end = t1;
        if (t1 > T) {
            c1 = c0 + (c1 - c0) * (T - t0) / (t1 - t0);
            end = T;
        }
        integral += 0.5 * (end - t0) * (c0 + c1);
    }
    return integral / T;
}

OptimizationResult uncontrolled_optimum(const SpectralParams& params, double T, std::size_t steps) {
    if (!(T > 0.0)) throw ConfigError("uncontrolled_optimum: T must be positive");
    // Coherence e^{-Gamma} |r_perp(0)| grows with the initial transverse
    // length, so the equator is optimal.
    const BlochVector equator{1.0, 0.0, 0.0};
    const auto traj = sample_trajectory(PropagationMode::uncontrolled, equator, {}, T, steps, params);

    OptimizationResult out;
    out.s = params.s();
    out.T = T;
    out.phi_in = kHalfPi;
    out.cbar_uncontrolled = average_coherence(traj, T);
    out.initial_norm = 1.0;
    out.final_norm = traj.samples().back().state.norm();
    out.final_coherence = coherence(traj.samples().back().state);
    return infeasible_from(out);
}

std::optional<double> solve_initial_angle(const SpectralParams& params, double T, double t_tilde) {
    if (!(t_tilde >= 0.0 && T > t_tilde)) throw DomainError("solve_initial_angle: requires 0 <= t_tilde < T");
    const double g_tilde = decoherence_fn(t_tilde, params);
    const double target = std::exp(2.0 * (decoherence_fn(T, params) - g_tilde));
    const double floor = std::exp(-2.0 * g_tilde);
    // |r(t_tilde)|^2 as a function of phi; non-increasing on [0, pi/2].
    auto residual = [&](double phi) {
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        return c * c + s * s * floor - target;
    };
    const double f_lo = residual(0.0);
    const double f_hi = residual(kHalfPi);
    if (f_lo < 0.0 || f_hi > 0.0) return std::nullopt;
    if (f_lo == 0.0) return 0.0;
    if (f_hi == 0.0) return kHalfPi;

    double lo = 0.0;
    double hi = kHalfPi;
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (residual(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double equator_pulse_angle(const BlochVector& r) { return kHalfPi - std::atan2(r.rx, r.rz); }

std::optional<PlannedProtocol> controlled_protocol(const SpectralParams& params, double T) {
    const auto roots = rate_zero_crossings(params);
    if (roots.empty() || !(roots.front() < T)) return std::nullopt;
    const double t_tilde = roots.front();
    const auto phi = solve_initial_angle(params, T, t_tilde);
    if (!phi) return std::nullopt;

    PlannedProtocol plan;
    plan.phi_in = *phi;
    plan.t_tilde = t_tilde;
    plan.T = T;
    plan.initial = BlochVector::from_angles(*phi);
    const BlochVector before_pulse = propagate_uncontrolled(plan.initial, t_tilde, params);
    plan.protocol = ControlProtocol::single(t_tilde, Axis::y, equator_pulse_angle(before_pulse));
    return plan;
}

OptimizationResult controlled_average_coherence(const SpectralParams& params, double T, std::size_t steps) {
    OptimizationResult out = uncontrolled_optimum(params, T, steps);
    const auto plan = controlled_protocol(params, T);
    if (!plan) return out;

    const auto fixed = sample_trajectory(PropagationMode::fixed_dissipator, plan->initial, plan->protocol, T, steps, params);
    const auto exact = sample_trajectory(PropagationMode::microscopic, plan->initial, plan->protocol, T, steps, params);

    out.feasible = true;
    out.t_tilde = plan->t_tilde;
    out.phi_in = plan->phi_in;
    out.pulse_angle = plan->protocol.pulses().front().angle;
    out.cbar_controlled = average_coherence(fixed, T);
    out.cbar_controlled_microscopic = average_coherence(exact, T);
    out.initial_norm = plan->initial.norm();
    out.final_norm = fixed.samples().back().state.norm();
    out.final_coherence = coherence(fixed.samples().back().state);
    return out;
}

std::vector<OptimizationResult> sweep(std::span<const double> s_grid, double default_T, std::size_t steps) {
    std::vector<SpectralParams> params;
    params.reserve(s_grid.size());
    for (double s : s_grid) params.emplace_back(s);

    std::vector<std::future<OptimizationResult>> jobs;
    jobs.reserve(params.size());
    for (const auto& p : params) {
        jobs.push_back(std::async(std::launch::async, [p, default_T, steps] {
            try {
                const Horizon h = horizon(p, default_T);
                return controlled_average_coherence(p, h.T, steps);
            } catch (const HorizonError&) {
                return uncontrolled_optimum(p, default_T, steps);
            }
        }));
    }
    std::vector<OptimizationResult> out;
    out.reserve(jobs.size());
    for (auto& job : jobs) out.push_back(job.get());
    return out;
}

GridSearchResult grid_search_verify(const SpectralParams& params, double T, std::size_t resolution) {
    if (!(T > 0.0)) throw ConfigError("grid_search_verify: T must be positive");
    if (resolution < 1) throw ConfigError("grid_search_verify: resolution must be >= 1");

    const DecayIntegralTable table(params, T, 200000);
    const double total = table.at(T);
    const double g_T = decoherence_fn(T, params);
    const double n = static_cast<double>(resolution);
    auto node = [n](std::size_t i, double span) { return (static_cast<double>(i) + 0.5) / n * span; };

    std::vector<double> sin_phi(resolution), cos_phi(resolution), sin_th(resolution), cos_th(resolution);
    for (std::size_t i = 0; i < resolution; ++i) {
        sin_phi[i] = std::sin(node(i, kHalfPi));
        cos_phi[i] = std::cos(node(i, kHalfPi));
        sin_th[i] = std::sin(node(i, std::numbers::pi));
        cos_th[i] = std::cos(node(i, std::numbers::pi));
    }

    GridSearchResult best;
    GridSearchResult best_any;
    best_any.cbar = -std::numeric_limits<double>::infinity();
    best.cbar = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < resolution; ++j) {
        const double tp = node(j, T);
        const double g_p = decoherence_fn(tp, params);
        const double first_leg = table.at(tp);
        const double second_leg = std::exp(g_p) * (total - first_leg);
        const double growth2 = std::exp(2.0 * (g_p - g_T));
        const double decay_p = std::exp(-g_p);
        for (std::size_t i = 0; i < resolution; ++i) {
            const double x = sin_phi[i] * decay_p;
            const double z = cos_phi[i];
            for (std::size_t k = 0; k < resolution; ++k) {
                const double xr = x * cos_th[k] + z * sin_th[k];
                const double zr = -x * sin_th[k] + z * cos_th[k];
                const double final_norm = std::sqrt(xr * xr * growth2 + zr * zr);
                const double cbar = (sin_phi[i] * first_leg + std::fabs(xr) * second_leg) / T;
                GridSearchResult cand{node(i, kHalfPi), tp, node(k, std::numbers::pi), cbar, zr, final_norm,
                                      final_norm <= 1.0 + 1e-9, 0};
                if (cand.feasible && cand.cbar > best.cbar) best = cand;
                if (cand.cbar > best_any.cbar) best_any = cand;
            }
        }
    }
    GridSearchResult out = best.feasible ? best : best_any;
    out.evaluated = resolution * resolution * resolution;
    return out;
}

}  // namespace nmc
