// control_optimizer.hpp: the two-leg single-pulse protocol for average
// coherence under non-Markovian dephasing.
//
// Leg one runs while the decay rate is positive and starts from the pure
// state (sin phi_in, 0, cos phi_in). At the sign change t_tilde a y pulse
// rotates the state onto the equator. Leg two runs under the negative rate
// up to the horizon T. phi_in is fixed by |r(0)| = |r(T)| = 1 in the
// fixed-dissipator picture.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nmcontrol/bloch.hpp"
#include "nmcontrol/dephasing_maps.hpp"
#include "nmcontrol/spectral_kernels.hpp"

namespace nmc {

constexpr std::size_t kDefaultQuadratureSteps = 10000;

struct OptimizationResult {
    double s{0.0};
    double T{0.0};
    double t_tilde{0.0};               // NaN when infeasible
    double phi_in{0.0};                // initial polar angle (radians)
    double pulse_angle{0.0};           // NaN when infeasible
    double cbar_uncontrolled{0.0};
    double cbar_controlled{0.0};       // NaN when infeasible
    double cbar_controlled_microscopic{0.0};  // same protocol, exact dynamics; NaN when infeasible
    double initial_norm{1.0};
    double final_norm{0.0};            // |r(T)| of the controlled fixed-dissipator trajectory
    double final_coherence{0.0};
    bool feasible{false};
};

// (1/T) int_0^T coherence(r(t)) dt by the composite trapezoid rule on the
// sample grid. Throws ConfigError if the trajectory ends before T.
double average_coherence(const Trajectory& traj, double T);

// Equatorial start (phi_in = pi/2) without control.
OptimizationResult uncontrolled_optimum(const SpectralParams& params, double T,
                                        std::size_t steps = kDefaultQuadratureSteps);

// Solves cos^2 phi + sin^2 phi e^{-2 Gamma(t_tilde)} = e^{2 (Gamma(T) - Gamma(t_tilde))}
// on [0, pi/2] by bisection. nullopt when no root exists.
std::optional<double> solve_initial_angle(const SpectralParams& params, double T, double t_tilde);

// Angle of the y rotation that takes (rx, 0, rz), rx >= 0, onto the +x equator.
double equator_pulse_angle(const BlochVector& r);

struct PlannedProtocol {
    double phi_in{0.0};
    double t_tilde{0.0};
    double T{0.0};
    BlochVector initial;
    ControlProtocol protocol;
};

// Builds the two-leg protocol on [0, T]. nullopt when the rate has no sign
// change before T or the boundary constraint has no solution.
std::optional<PlannedProtocol> controlled_protocol(const SpectralParams& params, double T);

OptimizationResult controlled_average_coherence(const SpectralParams& params, double T,
                                                std::size_t steps = kDefaultQuadratureSteps);

// Horizon rule per point: T = second zero crossing when one exists, else
// default_T. Points without a usable sign change are reported with
// feasible = false and uncontrolled values only. Points run concurrently;
// output keeps the order of s_grid.
std::vector<OptimizationResult> sweep(std::span<const double> s_grid, double default_T = kDefaultHorizon,
                                      std::size_t steps = kDefaultQuadratureSteps);

struct GridSearchResult {
    double phi_in{0.0};
    double pulse_time{0.0};
    double pulse_angle{0.0};
    double cbar{0.0};
    double post_pulse_rz{0.0};
    double final_norm{0.0};
    bool feasible{false};        // some candidate satisfied |r(T)| <= 1 + 1e-9
    std::size_t evaluated{0};
};

// Exhaustive midpoint grid over phi_in in (0, pi/2), pulse time in (0, T) and
// y-pulse angle in (0, pi) with `resolution` points per axis, restricted to
// fixed-dissipator trajectories ending inside the ball. Average coherence is
// evaluated from a tabulated cumulative integral of e^{-Gamma}.
GridSearchResult grid_search_verify(const SpectralParams& params, double T, std::size_t resolution);

}  // namespace nmc
