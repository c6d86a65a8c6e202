// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nmcontrol/bloch.hpp"
#include "nmcontrol/control_optimizer.hpp"
#include "nmcontrol/dephasing_maps.hpp"
#include "nmcontrol/env_oracle.hpp"
#include "nmcontrol/errors.hpp"
#include "nmcontrol/spectral_kernels.hpp"
#include "oracles.hpp"

using namespace nmc;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// --- tolerances -----------------------------------------------------------
constexpr double kExactTol = 1e-12;
constexpr double kAsymptoticTol = 1e-5;
constexpr double kDerivativeTol = 1e-6;
constexpr double kDerivativeStep = 1e-4;
constexpr double kRootTol = 1e-12;
constexpr double kOracleDecoherenceTol = 1e-3;
constexpr double kOracleBlochTol = 1e-2;
constexpr double kOvershootTarget = 1.336;
constexpr double kOvershootTol = 0.01;
constexpr double kChoiViolation = -1e-3;
constexpr double kBallTol = 1e-9;
constexpr double kSweepMargin = 1e-3;
constexpr double kBoundaryTol = 1e-9;
constexpr double kGridTol = 1e-2;
constexpr std::size_t kGridResolution = 100;
constexpr double kCovarianceTol = 1e-12;
constexpr double kAdmissibilityTol = 1e-5;
constexpr double kAdmissibilityStep = 1e-3;

// Closed-form rate written out independently of the library.
double rate_formula(double s, double t) {
    return std::pow(1.0 + t * t, -0.5 * s) * std::tgamma(s) * std::sin(s * std::atan(t));
}

Outcome kernel_exactness() {
    const double e1 = std::fabs(decoherence_fn(1.0, SpectralParams(2.0)) - 0.5);
    const double e2 = std::fabs(decoherence_fn(1.0, SpectralParams(4.0)) - 2.5);
    const double e3 = std::fabs(decay_rate(1.0, SpectralParams(3.0)) - 0.5);
    const double e4 = std::fabs(decoherence_fn(1e6, SpectralParams(3.0)) - 1.0);
    const double exact = std::max({e1, e2, e3});
    return {exact <= kExactTol && e4 <= kAsymptoticTol,
            fmt("Gamma(1,s=2), Gamma(1,s=4), gamma(1,s=3) max err %.2e (tol %.0e); |Gamma(1e6,s=3)-1| = %.2e (tol %.0e)",
                exact, kExactTol, e4, kAsymptoticTol)};
}

Outcome derivative_consistency() {
    const double h = kDerivativeStep;
    double worst5 = 0.0;
    double worst3 = 0.0;
    for (double s : {2.5, 3.0, 4.0, 5.0, 6.0}) {
        const SpectralParams p(s);
        auto G = [&](double t) { return decoherence_fn(t, p); };
        for (int i = 0; i <= 4000; ++i) {
            const double t = 0.01 + (20.0 - 0.01) * i / 4000.0;
            const double g = decay_rate(t, p);
            const double d5 = (-G(t + 2 * h) + 8 * G(t + h) - 8 * G(t - h) + G(t - 2 * h)) / (12 * h);
            const double d3 = (G(t + h) - G(t - h)) / (2 * h);
            const double scale = std::max(std::fabs(g), 1e-3);
            worst5 = std::max(worst5, std::fabs(d5 - g) / scale);
            worst3 = std::max(worst3, std::fabs(d3 - g) / scale);
        }
    }
    return {worst5 <= kDerivativeTol,
            fmt("max rel err %.2e with the 5-point central stencil at h = %.0e (tol %.0e; 3-point stencil gives %.2e)",
                worst5, h, kDerivativeTol, worst3)};
}

Outcome zero_crossings() {
    double worst = 0.0;
    bool counts_ok = true;
    for (double s : {3.0, 4.0, 5.0, 6.0}) {
        const auto roots = rate_zero_crossings(SpectralParams(s));
        std::size_t expected = 0;
        for (int k = 1; 2 * k < s; ++k) {
            ++expected;
            const double guess = std::tan(k * pi / s);
            // Independent bisection on the written-out rate.
            double lo = guess * 0.9;
            double hi = guess * 1.1;
            const double f_lo = rate_formula(s, lo);
            for (int it = 0; it < 200 && hi - lo > 0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                ((rate_formula(s, mid) > 0) == (f_lo > 0) ? lo : hi) = mid;
            }
            const double bisected = 0.5 * (lo + hi);
            if (static_cast<std::size_t>(k) <= roots.size()) {
                worst = std::max(worst, std::fabs(roots[k - 1] - guess) / guess);
                worst = std::max(worst, std::fabs(bisected - guess) / guess);
            }
        }
        counts_ok = counts_ok && roots.size() == expected;
    }
    const bool none_s2 = rate_zero_crossings(SpectralParams(2.0)).empty();
    return {counts_ok && none_s2 && worst <= kRootTol,
            fmt("tan(k pi/s) vs library and bisection max rel diff %.2e (tol %.0e); root counts %s; s=2 roots: %s",
                worst, kRootTol, counts_ok ? "ok" : "WRONG", none_s2 ? "none" : "FOUND")};
}

double decoherence_error(std::size_t n) {
    const SpectralParams p(3.0);
    const auto env = build_env(p, n, 50.0);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double t = 0.05 * i;
        worst = std::max(worst, std::fabs(oracle_decoherence(env, t) - decoherence_fn(t, p)));
    }
    return worst;
}

Outcome oracle_uncontrolled() {
    std::vector<double> errs;
    for (std::size_t n : {250u, 500u, 1000u, 2000u}) errs.push_back(decoherence_error(n));
    const bool monotone = std::is_sorted(errs.rbegin(), errs.rend()) &&
                          std::adjacent_find(errs.begin(), errs.end()) == errs.end();
    return {errs.back() < kOracleDecoherenceTol && monotone,
            fmt("s=3, t in [0,10]: max |Gamma_N - Gamma| for N=250/500/1000/2000 = %.2e/%.2e/%.2e/%.2e (tol %.0e, "
                "monotone: %s)",
                errs[0], errs[1], errs[2], errs[3], kOracleDecoherenceTol, monotone ? "yes" : "no")};
}

Outcome oracle_controlled() {
    double worst = 0.0;
    for (double s : {3.0, 4.0}) {
        const SpectralParams p(s);
        const auto env = build_env(p);
        const double tp = rate_zero_crossings(p).front();
        for (double phi : {0.3 * pi, 0.5 * pi}) {
            const auto protocol = ControlProtocol::single(tp, Axis::y, phi);
            for (const BlochVector r0 : {BlochVector::from_angles(0.25 * pi), BlochVector{0.3, 0.5, -0.4}}) {
                for (int i = 1; i <= 20; ++i) {
                    const double t = 0.5 * i;
                    const auto closed = propagate_microscopic(r0, protocol, t, p);
                    const auto oracle = oracle_bloch_vector(r0, phi, t, tp, env);
                    worst = std::max(worst, norm(closed.vec() - oracle.vec()));
                }
            }
        }
    }
    return {worst < kOracleBlochTol,
            fmt("s in {3,4}, phi in {0.3pi,0.5pi}, pulse at t~, 20 times, 2 initial states: max |dr| = %.2e (tol %.0e)",
                worst, kOracleBlochTol)};
}

Outcome cp_violation() {
    const SpectralParams p(4.0);
    const auto r0 = BlochVector::from_angles(0.2 * pi);
    const auto protocol =
        ControlProtocol::single(1.0, Axis::y, equator_pulse_angle(propagate_uncontrolled(r0, 1.0, p)));
    double fixed_max = 0.0;
    double micro_max = 0.0;
    for (int i = 0; i <= 30000; ++i) {
        const double t = 1e-3 * i;
        fixed_max = std::max(fixed_max, propagate_fixed_dissipator(r0, protocol, t, p).norm());
        micro_max = std::max(micro_max, propagate_microscopic(r0, protocol, t, p).norm());
    }
    const auto audit = cp_audit(protocol, p, 30.0, 300);
    const auto micro_audit = cp_audit(protocol, p, 30.0, 300, 256, PropagationMode::microscopic);
    const bool ok = std::fabs(fixed_max - kOvershootTarget) <= kOvershootTol &&
                    audit.min_choi_eigenvalue < kChoiViolation && micro_max <= 1.0 + kBallTol &&
                    micro_audit.max_bloch_norm <= 1.0 + kBallTol;
    return {ok, fmt("s=4, phi_in=0.2pi, equator pulse at t=1: fixed max|r| = %.4f (target %.3f +- %.2f), min Choi eig "
                    "%.3e (< %.0e); microscopic max|r| = %.12f, audit over all states %.12f (<= 1+%.0e)",
                    fixed_max, kOvershootTarget, kOvershootTol, audit.min_choi_eigenvalue, kChoiViolation, micro_max,
                    micro_audit.max_bloch_norm, kBallTol)};
}

Outcome sweep_structure() {
    const std::vector<double> low{2.5, 3.0, 3.5, 4.0};
    const std::vector<double> high{4.5, 5.0, 5.5, 6.0};
    const auto a = sweep(low);
    const auto b = sweep(high);
    bool ok = true;
    std::string cbar = "cbar_con:";
    for (std::size_t i = 0; i < a.size(); ++i) {
        ok = ok && a[i].feasible && a[i].cbar_controlled > a[i].cbar_uncontrolled + kSweepMargin;
        if (i) ok = ok && a[i].cbar_controlled > a[i - 1].cbar_controlled && a[i].phi_in > a[i - 1].phi_in;
        cbar += fmt(" %.4f", a[i].cbar_controlled);
    }
    cbar += " |";
    for (std::size_t i = 0; i < b.size(); ++i) {
        ok = ok && b[i].feasible && b[i].T < kDefaultHorizon;
        if (i) ok = ok && b[i].phi_in > b[i - 1].phi_in && b[i].cbar_controlled < b[i - 1].cbar_controlled;
        cbar += fmt(" %.4f", b[i].cbar_controlled);
    }
    return {ok, fmt("s=2.5..4 (T=30): cbar_con and phi_in increasing, cbar_con > cbar_unc + %.0e; s=4.5..6 (natural "
                    "T): phi_in up, cbar_con down. %s",
                    kSweepMargin, cbar.c_str())};
}

Outcome boundary_constraint() {
    const std::vector<double> grid{2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0};
    double worst = 0.0;
    std::size_t feasible = 0;
    for (const auto& r : sweep(grid)) {
        if (!r.feasible) continue;
        ++feasible;
        worst = std::max({worst, std::fabs(r.initial_norm - 1.0), std::fabs(r.final_norm - 1.0),
                          std::fabs(r.final_coherence - 1.0)});
    }
    return {feasible == grid.size() && worst <= kBoundaryTol,
            fmt("%zu/%zu feasible points; max of ||r(0)|-1|, ||r(T)|-1|, |C(T)-1| = %.2e (tol %.0e)", feasible,
                grid.size(), worst, kBoundaryTol)};
}

Outcome grid_optimality() {
    const SpectralParams p(4.0);
    const double analytic = controlled_average_coherence(p, 30.0).cbar_controlled;
    const auto best = grid_search_verify(p, 30.0, kGridResolution);
    const double step = 30.0 / static_cast<double>(kGridResolution);
    const double excess = best.cbar - analytic;
    const bool ok = excess <= kGridTol && std::fabs(best.pulse_time - 1.0) <= step;
    return {ok, fmt("s=4, T=30, %zu^3 grid: best %.5f at t_p=%.3f vs analytic %.5f (excess %.2e, tol %.0e; |t_p-1| "
                    "= %.3f <= step %.3f)",
                    kGridResolution, best.cbar, best.pulse_time, analytic, excess, kGridTol,
                    std::fabs(best.pulse_time - 1.0), step)};
}

Outcome covariance() {
    nmc::testing::Gen gen(2024);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const SpectralParams p(gen.uniform(1.5, 6.0));
        const auto n = gen.sphere();
        const BlochVector r0{n[0], n[1], n[2]};
        std::vector<Pulse> pulses;
        double t = 0.0;
        double total = 0.0;
        for (int k = 0; k < 3; ++k) {
            t += gen.uniform(0.1, 4.0);
            const double a = gen.uniform(-pi, pi);
            pulses.push_back({t, Axis::z, a});
            total += a;
        }
        const ControlProtocol protocol(pulses);
        for (int k = 0; k <= 20; ++k) {
            const double tt = 0.75 * k;
            const double c_ref = coherence(propagate_uncontrolled(rotate(r0, Axis::z, total), tt, p));
            const double c_fix = coherence(propagate_fixed_dissipator(r0, protocol, tt, p));
            const double c_mic = coherence(propagate_microscopic(r0, protocol, tt, p));
            worst = std::max({worst, std::fabs(c_fix - c_ref), std::fabs(c_mic - c_ref)});
        }
    }
    const SpectralParams p(3.0);
    bool only_z = true;
    for (double a : {0.3, 1.0, 2.5}) {
        only_z = only_z && is_covariant(Axis::z, a, p) && !is_covariant(Axis::x, a, p) && !is_covariant(Axis::y, a, p);
    }
    return {worst <= kCovarianceTol && only_z,
            fmt("z-pulse coherence vs uncontrolled (rotated start) max diff %.2e (tol %.0e); is_covariant true only for "
                "z: %s",
                worst, kCovarianceTol, only_z ? "yes" : "no")};
}

Outcome admissibility() {
    const SpectralParams p(3.0);
    const auto plan = controlled_protocol(p, 30.0);
    if (!plan) return {false, "no controlled protocol for s=3"};
    const auto steps = static_cast<std::size_t>(std::llround(30.0 / kAdmissibilityStep));
    const double controlled = admissibility_residual(
        sample_trajectory(PropagationMode::fixed_dissipator, plan->initial, plan->protocol, 30.0, steps, p), p);
    const double uncontrolled =
        admissibility_residual(sample_trajectory(PropagationMode::uncontrolled, {1, 0, 0}, {}, 30.0, steps, p), p);
    return {controlled <= kAdmissibilityTol && uncontrolled <= kAdmissibilityTol,
            fmt("s=3, dt=%.0e: controlled residual %.2e, uncontrolled %.2e (tol %.0e)", kAdmissibilityStep, controlled,
                uncontrolled, kAdmissibilityTol)};
}

Outcome markovian_control() {
    const SpectralParams p(1.5);
    bool horizon_infeasible = false;
    try {
        (void)horizon(p);
    } catch (const HorizonError&) {
        horizon_infeasible = true;
    }
    const std::vector<double> grid{1.5};
    const auto r = sweep(grid).front();
    const bool ok = horizon_infeasible && !r.feasible && std::fabs(r.phi_in - pi / 2) < 1e-15 &&
                    std::isnan(r.cbar_controlled) && r.cbar_uncontrolled > 0.0;
    return {ok, fmt("s=1.5: horizon infeasible: %s; sweep feasible=%s, phi_in=%.4f pi, cbar_uncontrolled=%.4f, "
                    "cbar_controlled=%s",
                    horizon_infeasible ? "yes" : "no", r.feasible ? "true" : "false", r.phi_in / pi,
                    r.cbar_uncontrolled, std::isnan(r.cbar_controlled) ? "nan" : "set")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"kernel exactness", kernel_exactness},
        {"derivative consistency", derivative_consistency},
        {"zero crossings", zero_crossings},
        {"oracle equivalence (uncontrolled)", oracle_uncontrolled},
        {"oracle equivalence (controlled)", oracle_controlled},
        {"CP-violation reproduction", cp_violation},
        {"sweep structure", sweep_structure},
        {"boundary constraint", boundary_constraint},
        {"optimality oracle", grid_optimality},
        {"covariance", covariance},
        {"admissibility", admissibility},
        {"Markovian negative control", markovian_control},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %2d  %-34s %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
