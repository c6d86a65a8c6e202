#include "nmcontrol/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nmcontrol/errors.hpp"

namespace nmc {
namespace {

constexpr double kNearOrigin = 1e-9;

double half_trace_pairing(const CMat2& a, const CMat2& b) { return 0.5 * (a * b).trace().real(); }

}  // namespace

std::string_view to_string(Axis axis) {
    switch (axis) {
        case Axis::x: return "x";
        case Axis::y: return "y";
        case Axis::z: return "z";
    }
    return "?";
}

std::optional<Axis> parse_axis(std::string_view text) {
    if (text == "x") return Axis::x;
    if (text == "y") return Axis::y;
    if (text == "z") return Axis::z;
    return std::nullopt;
}

BlochVector BlochVector::from_angles(double polar, double azimuth) {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

DensityMatrix2 DensityMatrix2::from_bloch(const BlochVector& r) {
    return {cplx{0.5 * (1.0 + r.rz)}, cplx{0.5 * r.rx, -0.5 * r.ry}, cplx{0.5 * r.rx, 0.5 * r.ry},
            cplx{0.5 * (1.0 - r.rz)}};
}

BlochVector DensityMatrix2::to_bloch() const {
    // Average the two off-diagonal entries so slightly non-Hermitian input
    // still maps to a real vector.
    const cplx eg_sym = 0.5 * (eg + std::conj(ge));
    return {2.0 * eg_sym.real(), -2.0 * eg_sym.imag(), (ee - gg).real()};
}

double DensityMatrix2::purity() const {
    return (ee * ee + eg * ge + ge * eg + gg * gg).real();
}

double DensityMatrix2::min_eigenvalue() const { return hermitian_eigenvalues(matrix())[0]; }

Trajectory::Trajectory(std::vector<TrajectorySample> samples, std::vector<double> pulse_times)
    : samples_(std::move(samples)), pulse_times_(std::move(pulse_times)) {
    if (samples_.size() < 2) throw ConfigError("trajectory needs at least 2 samples");
    std::sort(pulse_times_.begin(), pulse_times_.end());
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        const double prev = samples_[i - 1].t;
        const double cur = samples_[i].t;
        if (cur > prev) continue;
        if (cur == prev && std::binary_search(pulse_times_.begin(), pulse_times_.end(), cur)) continue;
        std::ostringstream os;
        os << "trajectory times must increase (sample " << i << " at t = " << cur << " after t = " << prev << ")";
        throw ConfigError(os.str());
    }
}

bool Trajectory::at_pulse(std::size_t i) const {
    return std::binary_search(pulse_times_.begin(), pulse_times_.end(), samples_[i].t);
}

double purity(const BlochVector& r) { return 0.5 * (dot(r.vec(), r.vec()) + 1.0); }

double coherence(const BlochVector& r) { return std::hypot(r.rx, r.ry); }

Mat3 rotation_matrix(Axis axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    switch (axis) {
        case Axis::x: return Mat3{{1, 0, 0, 0, c, -s, 0, s, c}};
        case Axis::y: return Mat3{{c, 0, s, 0, 1, 0, -s, 0, c}};
        case Axis::z: return Mat3{{c, -s, 0, s, c, 0, 0, 0, 1}};
    }
    return Mat3::identity();
}

BlochVector rotate(const BlochVector& r, Axis axis, double angle) {
    return BlochVector::from(rotation_matrix(axis, angle) * r.vec());
}

CMat2 dephasing_dissipator(const CMat2& rho, double gamma) {
    const CMat2 sz = pauli_z();
    return cplx{0.5 * gamma} * (sz * rho * sz - rho);
}

DissipatorBlochForm dissipator_bloch_form(double gamma) {
    const std::array<CMat2, 3> sigma{pauli_x(), pauli_y(), pauli_z()};
    DissipatorBlochForm out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) out.D(i, j) = half_trace_pairing(sigma[i], dephasing_dissipator(sigma[j], gamma));
        out.d[i] = half_trace_pairing(sigma[i], dephasing_dissipator(pauli_identity(), gamma));
    }
    return out;
}

double purity_flux(const BlochVector& r, double gamma) { return -gamma * (r.rx * r.rx + r.ry * r.ry); }

std::vector<FluxPoint> flux_field(const FluxGridSpec& grid, double t, const SpectralParams& params) {
    if (grid.resolution <= 0) throw ConfigError("flux_field: resolution must be positive");
    if (!(grid.extent > 0.0 && grid.extent <= 1.0)) throw ConfigError("flux_field: extent must lie in (0, 1]");
    const double gamma = decay_rate(t, params);
    const int n = grid.resolution;
    auto coord = [&](int i) { return n == 1 ? 0.0 : -grid.extent + 2.0 * grid.extent * i / (n - 1); };

    std::vector<FluxPoint> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int iz = 0; iz < n; ++iz) {
        const double rz = coord(iz);
        for (int ix = 0; ix < n; ++ix) {
            const double rx = coord(ix);
            if (rx * rx + rz * rz > 1.0 + 1e-12) continue;
            out.push_back({rx, rz, purity_flux({rx, 0.0, rz}, gamma)});
        }
    }
    return out;
}

namespace {

// Interior samples whose central stencil does not straddle a pulse jump.
bool usable_interior(const Trajectory& traj, std::size_t i) {
    return !traj.at_pulse(i - 1) && !traj.at_pulse(i) && !traj.at_pulse(i + 1) &&
           traj[i].state.norm() >= kNearOrigin;
}

}  // namespace

double admissibility_residual(const Trajectory& traj, const SpectralParams& params) {
    if (traj.size() < 3) throw ConfigError("admissibility_residual: need at least 3 samples");
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        if (!usable_interior(traj, i)) continue;
        const auto& prev = traj[i - 1];
        const auto& next = traj[i + 1];
        const double norm2_rate = (dot(next.state.vec(), next.state.vec()) - dot(prev.state.vec(), prev.state.vec())) /
                                  (next.t - prev.t);
        const double flux = purity_flux(traj[i].state, decay_rate(traj[i].t, params));
        worst = std::max(worst, std::fabs(flux - 0.5 * norm2_rate));
    }
    return worst;
}

std::vector<ControlFieldSample> reconstruct_control_field(const Trajectory& traj, const SpectralParams& params,
                                                          double max_residual) {
    const double residual = admissibility_residual(traj, params);
    if (residual > max_residual) {
        std::ostringstream os;
        os << "trajectory is not admissible under the fixed dissipator (residual " << residual << " > "
           << max_residual << ")";
        throw ConfigError(os.str());
    }
    std::vector<ControlFieldSample> out;
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        if (traj.at_pulse(i - 1) || traj.at_pulse(i) || traj.at_pulse(i + 1)) continue;
        const Vec3 r = traj[i].state.vec();
        const double r2 = dot(r, r);
        if (std::sqrt(r2) < kNearOrigin) {
            std::ostringstream os;
            os << "reconstruct_control_field: |r| below " << kNearOrigin << " at t = " << traj[i].t;
            throw SingularStateError(os.str());
        }
        const Vec3 velocity =
            (1.0 / (traj[i + 1].t - traj[i - 1].t)) * (traj[i + 1].state.vec() - traj[i - 1].state.vec());
        const auto diss = dissipator_bloch_form(decay_rate(traj[i].t, params));
        const Vec3 torque = velocity - (diss.D * r + diss.d);
        out.push_back({traj[i].t, (0.5 / r2) * cross(r, torque)});
    }
    return out;
}

std::vector<BlochVector> fibonacci_sphere(std::size_t count) {
    std::vector<BlochVector> out;
    out.reserve(count);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        out.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return out;
}

}  // namespace nmc
