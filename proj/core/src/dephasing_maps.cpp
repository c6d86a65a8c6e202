#include "nmcontrol/dephasing_maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "nmcontrol/errors.hpp"

namespace nmc {
namespace {

// Transverse contraction (or expansion, when Gamma decreases) between two times.
double dephasing_factor(double t_from, double t_to, const SpectralParams& params) {
    return std::exp(-(decoherence_fn(t_to, params) - decoherence_fn(t_from, params)));
}

BlochVector scale_transverse(const BlochVector& r, double factor) { return {factor * r.rx, factor * r.ry, r.rz}; }

struct MicroscopicSplit {
    std::optional<Pulse> y_pulse;
    std::vector<Pulse> z_before;
    std::vector<Pulse> z_after;
};

MicroscopicSplit split_for_microscopic(const ControlProtocol& protocol) {
    MicroscopicSplit out;
    for (const auto& p : protocol.pulses()) {
        switch (p.axis) {
            case Axis::x:
                throw UnsupportedProtocolError("microscopic propagation supports y and z pulses only");
            case Axis::y:
                if (out.y_pulse) throw UnsupportedProtocolError("microscopic propagation supports a single y pulse");
                out.y_pulse = p;
                break;
            case Axis::z:
                (out.y_pulse ? out.z_after : out.z_before).push_back(p);
                break;
        }
    }
    return out;
}

BlochVector apply_z_pulses_up_to(BlochVector r, const std::vector<Pulse>& pulses, double t) {
    for (const auto& p : pulses)
        if (p.time <= t) r = rotate(r, Axis::z, p.angle);
    return r;
}

// Closed-form Bloch vector after a single y pulse (t >= t_p).
BlochVector microscopic_after_y_pulse(const BlochVector& r0, double phi, double t_p, double t,
                                      const SpectralParams& params) {
    const double g_t = decoherence_fn(t, params);
    const double g_p = decoherence_fn(t_p, params);
    const double g_rel = decoherence_fn(t - t_p, params);
    const double y = control_phase_y(t, t_p, params);
    const double c2 = std::cos(0.5 * phi) * std::cos(0.5 * phi);
    const double s2 = std::sin(0.5 * phi) * std::sin(0.5 * phi);
    const double revival = std::exp(2.0 * (g_t - g_p - g_rel));
    const double decay_t = std::exp(-g_t);
    const double decay_rel = std::exp(-g_rel);
    const double sin_phi = std::sin(phi);

    return {r0.rz * sin_phi * decay_rel * std::cos(y) + r0.rx * decay_t * (c2 - s2 * revival),
            sin_phi * decay_rel * std::sin(y) + r0.ry * decay_t * (c2 + s2 * revival),
            r0.rz * std::cos(phi) - r0.rx * sin_phi * std::exp(-g_p)};
}

}  // namespace

ControlProtocol::ControlProtocol(std::vector<Pulse> pulses) : pulses_(std::move(pulses)) {
    for (std::size_t i = 0; i < pulses_.size(); ++i) {
        if (!(pulses_[i].time > 0.0) || !std::isfinite(pulses_[i].time))
            throw ConfigError("pulse times must be positive and finite");
        if (!std::isfinite(pulses_[i].angle)) throw ConfigError("pulse angles must be finite");
        if (i > 0 && !(pulses_[i].time > pulses_[i - 1].time))
            throw ConfigError("pulse times must be strictly increasing");
    }
}

ControlProtocol ControlProtocol::prefix(std::size_t count) const {
    count = std::min(count, pulses_.size());
    return ControlProtocol(std::vector<Pulse>(pulses_.begin(), pulses_.begin() + static_cast<std::ptrdiff_t>(count)));
}

std::string_view to_string(PropagationMode mode) {
    switch (mode) {
        case PropagationMode::uncontrolled: return "uncontrolled";
        case PropagationMode::fixed_dissipator: return "fixed";
        case PropagationMode::microscopic: return "microscopic";
    }
    return "?";
}

std::optional<PropagationMode> parse_mode(std::string_view text) {
    if (text == "uncontrolled") return PropagationMode::uncontrolled;
    if (text == "fixed") return PropagationMode::fixed_dissipator;
    if (text == "microscopic") return PropagationMode::microscopic;
    return std::nullopt;
}

BlochVector propagate_uncontrolled(const BlochVector& r0, double t, const SpectralParams& params) {
    return scale_transverse(r0, std::exp(-decoherence_fn(t, params)));
}

BlochVector propagate_fixed_dissipator(const BlochVector& r0, const ControlProtocol& protocol, double t,
                                       const SpectralParams& params) {
    if (!(t >= 0.0)) throw DomainError("propagate_fixed_dissipator: time must be >= 0");
    BlochVector r = r0;
    double t_prev = 0.0;
    for (const auto& p : protocol.pulses()) {
        if (p.time > t) break;
        r = rotate(scale_transverse(r, dephasing_factor(t_prev, p.time, params)), p.axis, p.angle);
        t_prev = p.time;
    }
    return scale_transverse(r, dephasing_factor(t_prev, t, params));
}

BlochVector propagate_microscopic(const BlochVector& r0, const ControlProtocol& protocol, double t,
                                  const SpectralParams& params) {
    if (!(t >= 0.0)) throw DomainError("propagate_microscopic: time must be >= 0");
    const auto split = split_for_microscopic(protocol);
    // z rotations commute with the full system-bath Hamiltonian, so they can
    // be moved to either end of the free evolution they interrupt.
    if (!split.y_pulse || t < split.y_pulse->time) {
        BlochVector r = propagate_uncontrolled(r0, t, params);
        r = apply_z_pulses_up_to(r, split.z_before, t);
        return apply_z_pulses_up_to(r, split.z_after, t);
    }
    const BlochVector start = apply_z_pulses_up_to(r0, split.z_before, t);
    const BlochVector r = microscopic_after_y_pulse(start, split.y_pulse->angle, split.y_pulse->time, t, params);
    return apply_z_pulses_up_to(r, split.z_after, t);
}

BlochVector propagate(PropagationMode mode, const BlochVector& r0, const ControlProtocol& protocol, double t,
                      const SpectralParams& params) {
    switch (mode) {
        case PropagationMode::uncontrolled: return propagate_uncontrolled(r0, t, params);
        case PropagationMode::fixed_dissipator: return propagate_fixed_dissipator(r0, protocol, t, params);
        case PropagationMode::microscopic: return propagate_microscopic(r0, protocol, t, params);
    }
    return r0;
}

Trajectory sample_trajectory(PropagationMode mode, const BlochVector& r0, const ControlProtocol& protocol,
                             double t_max, std::size_t steps, const SpectralParams& params) {
    if (steps < 1) throw ConfigError("sample_trajectory: steps must be >= 1");
    if (!(t_max > 0.0)) throw ConfigError("sample_trajectory: t_max must be positive");
    if (mode == PropagationMode::microscopic) split_for_microscopic(protocol);

    std::vector<double> pulse_times;
    if (mode != PropagationMode::uncontrolled)
        for (const auto& p : protocol.pulses())
            if (p.time <= t_max) pulse_times.push_back(p.time);

    std::vector<TrajectorySample> samples;
    samples.reserve(steps + 1 + 2 * pulse_times.size());
    std::size_t next_pulse = 0;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = (i == steps) ? t_max : t_max * static_cast<double>(i) / static_cast<double>(steps);
        while (next_pulse < pulse_times.size() && pulse_times[next_pulse] <= t) {
            const double tp = pulse_times[next_pulse];
            samples.push_back({tp, propagate(mode, r0, protocol.prefix(next_pulse), tp, params)});
            samples.push_back({tp, propagate(mode, r0, protocol.prefix(next_pulse + 1), tp, params)});
            ++next_pulse;
        }
        if (!samples.empty() && samples.back().t == t) continue;
        samples.push_back({t, propagate(mode, r0, protocol, t, params)});
    }
    return Trajectory(std::move(samples), std::move(pulse_times));
}

QubitMap map_at(double t, const SpectralParams& params, const ControlProtocol& protocol, PropagationMode mode) {
    if (!(t >= 0.0)) throw DomainError("map_at: time must be >= 0");
    switch (mode) {
        case PropagationMode::uncontrolled:
            return QubitMap::dephasing(std::exp(-decoherence_fn(t, params)));
        case PropagationMode::fixed_dissipator: {
            QubitMap acc;
            double t_prev = 0.0;
            for (const auto& p : protocol.pulses()) {
                if (p.time > t) break;
                acc = QubitMap::dephasing(dephasing_factor(t_prev, p.time, params)).after(acc);
                acc = QubitMap::rotation(p.axis, p.angle).after(acc);
                t_prev = p.time;
            }
            return QubitMap::dephasing(dephasing_factor(t_prev, t, params)).after(acc);
        }
        case PropagationMode::microscopic: {
            // Affine action from the images of the origin and the three axes.
            const Vec3 origin = propagate_microscopic({}, protocol, t, params).vec();
            QubitMap out;
            out.b = origin;
            const std::array<BlochVector, 3> basis{BlochVector{1, 0, 0}, BlochVector{0, 1, 0}, BlochVector{0, 0, 1}};
            for (std::size_t j = 0; j < 3; ++j) {
                const Vec3 col = propagate_microscopic(basis[j], protocol, t, params).vec() - origin;
                for (std::size_t i = 0; i < 3; ++i) out.A(i, j) = col[i];
            }
            return out;
        }
    }
    throw UnsupportedProtocolError("map_at: unknown propagation mode");
}

CMat4 choi_matrix(const QubitMap& map) {
    const std::array<CMat2, 3> sigma{pauli_x(), pauli_y(), pauli_z()};
    // Phi(I) = I + b.sigma and Phi(sigma_k) = sum_j A_jk sigma_j.
    CMat2 image_identity = pauli_identity();
    std::array<CMat2, 3> image_sigma{};
    for (std::size_t j = 0; j < 3; ++j) image_identity = image_identity + cplx{map.b[j]} * sigma[j];
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j) image_sigma[k] = image_sigma[k] + cplx{map.A(j, k)} * sigma[j];

    CMat4 choi;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            // |i><j| = (delta_ij I + sum_k (sigma_k)_ji sigma_k) / 2
            CMat2 image = cplx{i == j ? 0.5 : 0.0} * image_identity;
            for (std::size_t k = 0; k < 3; ++k) image = image + (0.5 * sigma[k](j, i)) * image_sigma[k];
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) choi(2 * i + a, 2 * j + b) = 0.5 * image(a, b);
        }
    }
    return choi;
}

CpCheck is_cp(const QubitMap& map, double tol) {
    const double min_ev = hermitian_eigenvalues(choi_matrix(map))[0];
    return {min_ev >= -tol, min_ev};
}

QubitMap intermediate_map(double s_time, double t_time, const SpectralParams& params) {
    if (!(s_time >= 0.0 && t_time >= s_time)) throw DomainError("intermediate_map: requires 0 <= s <= t");
    // Phi_s is invertible because e^{-Gamma(s)} > 0.
    const QubitMap phi_t = QubitMap::dephasing(std::exp(-decoherence_fn(t_time, params)));
    const QubitMap phi_s_inv = QubitMap::dephasing(std::exp(decoherence_fn(s_time, params)));
    return phi_t.after(phi_s_inv);
}

bool intermediate_map_cp(double s_time, double t_time, const SpectralParams& params, double tol) {
    return is_cp(intermediate_map(s_time, t_time, params), tol).cp;
}

bool is_covariant(Axis axis, double angle, const SpectralParams& params) {
    const Mat3 rot = rotation_matrix(axis, angle);
    for (int n = 1; n <= 10; ++n) {
        const Mat3 phi = QubitMap::dephasing(std::exp(-decoherence_fn(static_cast<double>(n), params))).A;
        if (max_abs(rot * phi - phi * rot) > 1e-12) return false;
    }
    return true;
}

AccessibilityCheck in_accessible_set(const BlochVector& state, double t, const SpectralParams& params) {
    if (!(t >= 0.0)) throw DomainError("in_accessible_set: time must be >= 0");
    const double lambda = std::exp(-decoherence_fn(t, params));
    if (lambda < std::numeric_limits<double>::min()) {
        const bool on_axis = state.rx == 0.0 && state.ry == 0.0 && std::fabs(state.rz) <= 1.0 + 1e-12;
        return {on_axis, true};
    }
    const double u = state.rx / lambda;
    const double v = state.ry / lambda;
    return {u * u + v * v + state.rz * state.rz <= 1.0 + 1e-12, false};
}

CpAuditReport cp_audit(const ControlProtocol& protocol, const SpectralParams& params, double T, std::size_t time_steps,
                       std::size_t n_state_samples, PropagationMode mode) {
    if (!(T > 0.0)) throw ConfigError("cp_audit: T must be positive");
    if (time_steps < 1) throw ConfigError("cp_audit: time_steps must be >= 1");
    if (n_state_samples < 1) throw ConfigError("cp_audit: need at least one state sample");
    if (mode == PropagationMode::microscopic) split_for_microscopic(protocol);

    const auto states = fibonacci_sphere(n_state_samples);
    CpAuditReport report;
    report.rows.resize(time_steps + 1);

    auto evaluate = [&](std::size_t i) {
        const double t = T * static_cast<double>(i) / static_cast<double>(time_steps);
        const QubitMap map = map_at(t, params, protocol, mode);
        double max_norm = 0.0;
        for (const auto& r0 : states) max_norm = std::max(max_norm, map.apply(r0).norm());
        // For a linear map the lattice can miss a small overshoot; the exact
        // maximum over pure states is the largest singular value.
        if (norm(map.b) == 0.0) max_norm = std::max(max_norm, spectral_norm(map.A));
        report.rows[i] = {t, is_cp(map, CpAuditReport::kTolerance).min_eigenvalue, max_norm};
    };

    const std::size_t n_rows = report.rows.size();
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    if (workers == 1 || n_rows < 64) {
        for (std::size_t i = 0; i < n_rows; ++i) evaluate(i);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < n_rows; i += workers) evaluate(i);
            });
    }

    report.min_choi_eigenvalue = std::numeric_limits<double>::infinity();
    for (const auto& row : report.rows) {
        if (row.min_choi_eigenvalue < report.min_choi_eigenvalue) {
            report.min_choi_eigenvalue = row.min_choi_eigenvalue;
            report.worst_time = row.t;
        }
        report.max_bloch_norm = std::max(report.max_bloch_norm, row.max_bloch_norm);
    }
    report.cp_violating = report.min_choi_eigenvalue < -CpAuditReport::kTolerance ||
                          report.max_bloch_norm > 1.0 + CpAuditReport::kTolerance;
    return report;
}

}  // namespace nmc
