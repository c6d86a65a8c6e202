// dephasing_maps.hpp: propagators for the controlled dephasing qubit and
// the complete-positivity audit of the fixed-dissipator composition.
//
// Three propagators share one ControlProtocol (instantaneous pulses):
//   uncontrolled      transverse components decay as e^{-Gamma(t)}
//   fixed dissipator  the uncontrolled dissipator is kept after every pulse,
//                     i.e. Phi~_t = Phi_t Phi_s^{-1} U Phi_s
//   microscopic       exact conditional-displacement solution for a single
//                     y pulse (z pulses commute with the coupling)

#pragma once

#include <cstddef>
#include <string_view>
#include <optional>
#include <vector>

#include "nmcontrol/bloch.hpp"
#include "nmcontrol/spectral_kernels.hpp"

namespace nmc {

struct Pulse {
    double time{0.0};
    Axis axis{Axis::y};
    double angle{0.0};
};

// Ordered instantaneous pulses. Throws ConfigError unless pulse times are
// strictly increasing and positive.
class ControlProtocol {
public:
    ControlProtocol() = default;
    explicit ControlProtocol(std::vector<Pulse> pulses);

    static ControlProtocol single(double time, Axis axis, double angle) { return ControlProtocol({{time, axis, angle}}); }

    const std::vector<Pulse>& pulses() const noexcept { return pulses_; }
    bool empty() const noexcept { return pulses_.empty(); }

    // Protocol with only the first `count` pulses.
    ControlProtocol prefix(std::size_t count) const;

private:
    std::vector<Pulse> pulses_;
};

enum class PropagationMode { uncontrolled, fixed_dissipator, microscopic };

std::string_view to_string(PropagationMode mode);
std::optional<PropagationMode> parse_mode(std::string_view text);

BlochVector propagate_uncontrolled(const BlochVector& r0, double t, const SpectralParams& params);

// Pulses at times <= t are applied (right-continuous at pulse instants).
// The result may leave the unit ball; check inside_ball().
BlochVector propagate_fixed_dissipator(const BlochVector& r0, const ControlProtocol& protocol, double t,
                                       const SpectralParams& params);

// Exact dynamics. Accepts at most one y pulse plus any number of z pulses;
// throws UnsupportedProtocolError otherwise.
//
// With the y pulse (angle phi) at t_p and t >= t_p:
//   rx = rz0 sin(phi) e^{-Gamma(t-t_p)} cos y + rx0 e^{-Gamma(t)} [c^2 - s^2 E]
//   ry =     sin(phi) e^{-Gamma(t-t_p)} sin y + ry0 e^{-Gamma(t)} [c^2 + s^2 E]
//   rz = rz0 cos(phi) - rx0 sin(phi) e^{-Gamma(t_p)}
// where c = cos(phi/2), s = sin(phi/2), E = e^{2[Gamma(t) - Gamma(t_p) - Gamma(t-t_p)]}
// and y = control_phase_y(t, t_p). The bath-induced ry term does not depend
// on the initial state, so the map is affine rather than linear.
BlochVector propagate_microscopic(const BlochVector& r0, const ControlProtocol& protocol, double t,
                                  const SpectralParams& params);

BlochVector propagate(PropagationMode mode, const BlochVector& r0, const ControlProtocol& protocol, double t,
                      const SpectralParams& params);

// Uniform grid of steps+1 samples on [0, t_max]. Each pulse instant inside
// (0, t_max] contributes a pre- and a post-rotation sample.
Trajectory sample_trajectory(PropagationMode mode, const BlochVector& r0, const ControlProtocol& protocol,
                             double t_max, std::size_t steps, const SpectralParams& params);

// Affine action r -> A r + b of a trace-preserving qubit map.
struct QubitMap {
    Mat3 A = Mat3::identity();
    Vec3 b{};

    BlochVector apply(const BlochVector& r) const { return BlochVector::from(A * r.vec() + b); }
    static QubitMap rotation(Axis axis, double angle) { return {rotation_matrix(axis, angle), {}}; }
    static QubitMap dephasing(double factor) { return {Mat3::diag(factor, factor, 1.0), {}}; }

    // this after other
    QubitMap after(const QubitMap& other) const { return {A * other.A, A * other.b + b}; }
};

QubitMap map_at(double t, const SpectralParams& params, const ControlProtocol& protocol, PropagationMode mode);

// Choi matrix sum_ij |i><j| (x) Phi(|i><j|) / 2, trace one.
CMat4 choi_matrix(const QubitMap& map);

struct CpCheck {
    bool cp{true};
    double min_eigenvalue{0.0};
};

CpCheck is_cp(const QubitMap& map, double tol = 1e-9);

// Propagator Phi_{t,s} = Phi_t Phi_s^{-1} of the uncontrolled dynamics.
QubitMap intermediate_map(double s_time, double t_time, const SpectralParams& params);
bool intermediate_map_cp(double s_time, double t_time, const SpectralParams& params, double tol = 1e-9);

// True iff the rotation commutes with the uncontrolled map at ten sampled
// times in (0, 10].
bool is_covariant(Axis axis, double angle, const SpectralParams& params);

struct AccessibilityCheck {
    bool inside{false};
    bool degenerate{false};  // e^{-Gamma(t)} underflowed; ellipsoid collapsed onto the z axis
};

// Whether the state lies in the image of the Bloch ball under Phi_t.
AccessibilityCheck in_accessible_set(const BlochVector& state, double t, const SpectralParams& params);

struct CpAuditRow {
    double t{0.0};
    double min_choi_eigenvalue{0.0};
    double max_bloch_norm{0.0};
};

struct CpAuditReport {
    static constexpr double kTolerance = 1e-9;

    double min_choi_eigenvalue{0.0};
    double max_bloch_norm{0.0};
    bool cp_violating{false};
    double worst_time{0.0};  // time of the most negative Choi eigenvalue (or largest norm)
    std::vector<CpAuditRow> rows;
};

// Scans the controlled map on a uniform grid of time_steps+1 points in [0, T]
// (post-pulse side at pulse instants) over n_state_samples Fibonacci-lattice
// initial pure states; linear maps also contribute their exact largest
// singular value. Time points are processed in parallel.
CpAuditReport cp_audit(const ControlProtocol& protocol, const SpectralParams& params, double T, std::size_t time_steps,
                       std::size_t n_state_samples = 256,
                       PropagationMode mode = PropagationMode::fixed_dissipator);

}  // namespace nmc
