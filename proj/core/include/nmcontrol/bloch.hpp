// bloch.hpp: single-qubit Bloch-ball algebra for the dephasing problem.
//
// Conventions: |e> = |0>, sigma_z|e> = +|e>, rho = (I + r.sigma)/2, so
// rho_eg = <e|rho|g> = (rx - i ry)/2 and rz = rho_ee - rho_gg. Rotations are
// R_a(phi) = exp(-i phi sigma_a / 2); on the Bloch ball R_y(phi) maps
// (0,0,1) to (sin phi, 0, cos phi). A control Hamiltonian H = h.sigma
// produces the torque dr/dt = 2 h x r.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nmcontrol/linalg.hpp"
#include "nmcontrol/spectral_kernels.hpp"

namespace nmc {

enum class Axis { x, y, z };

std::string_view to_string(Axis axis);
std::optional<Axis> parse_axis(std::string_view text);

// Bloch vector. Audit paths may produce vectors outside the unit ball, so no
// norm invariant is enforced; inside_ball() is the physicality flag.
struct BlochVector {
    double rx{0.0};
    double ry{0.0};
    double rz{0.0};

    static constexpr BlochVector from(Vec3 v) { return {v.x, v.y, v.z}; }
    static BlochVector from_angles(double polar, double azimuth = 0.0);

    constexpr Vec3 vec() const { return {rx, ry, rz}; }
    double norm() const { return nmc::norm(vec()); }
    bool inside_ball(double tol = 1e-9) const { return norm() <= 1.0 + tol; }

    friend constexpr bool operator==(const BlochVector&, const BlochVector&) = default;
};

struct DensityMatrix2 {
    cplx ee{0.5};
    cplx eg{0.0};
    cplx ge{0.0};
    cplx gg{0.5};

    static DensityMatrix2 from_bloch(const BlochVector& r);
    BlochVector to_bloch() const;
    CMat2 matrix() const { return CMat2{{ee, eg, ge, gg}}; }
    double trace() const { return (ee + gg).real(); }
    double purity() const;
    double min_eigenvalue() const;
    bool is_physical(double tol = 1e-9) const { return min_eigenvalue() >= -tol; }
};

struct TrajectorySample {
    double t{0.0};
    BlochVector state;
};

// Time-ordered samples. A pulse instant is represented by two samples with
// equal time stamps (pre- and post-rotation) and is listed in pulse_times;
// everywhere else time stamps strictly increase.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(std::vector<TrajectorySample> samples, std::vector<double> pulse_times = {});

    const std::vector<TrajectorySample>& samples() const noexcept { return samples_; }
    const std::vector<double>& pulse_times() const noexcept { return pulse_times_; }
    std::size_t size() const noexcept { return samples_.size(); }
    const TrajectorySample& operator[](std::size_t i) const { return samples_[i]; }
    double start_time() const { return samples_.front().t; }
    double end_time() const { return samples_.back().t; }

    // True when sample i sits on a pulse instant (either side of the jump).
    bool at_pulse(std::size_t i) const;

private:
    std::vector<TrajectorySample> samples_;
    std::vector<double> pulse_times_;
};

double purity(const BlochVector& r);     // (|r|^2 + 1)/2, unclamped
double coherence(const BlochVector& r);  // sqrt(rx^2 + ry^2) = 2|rho_eg|

Mat3 rotation_matrix(Axis axis, double angle);
BlochVector rotate(const BlochVector& r, Axis axis, double angle);

// Bloch form of the dephasing dissipator D(rho) = gamma/2 (sz rho sz - rho)
// with the half-trace pairing D_ij = Tr[s_i D(s_j)]/2, d_i = Tr[s_i D(I)]/2,
// so that dr/dt = D r + d (+ control torque).
struct DissipatorBlochForm {
    Mat3 D;
    Vec3 d;
};

// Applies the dephasing dissipator to an arbitrary 2x2 operator.
CMat2 dephasing_dissipator(const CMat2& rho, double gamma);
DissipatorBlochForm dissipator_bloch_form(double gamma);

// f(r) = -gamma (rx^2 + ry^2); equals r.(D r + d) for the dephasing form.
double purity_flux(const BlochVector& r, double gamma);

struct FluxGridSpec {
    double extent{1.0};  // grid spans [-extent, extent] along rx and rz
    int resolution{101}; // points per axis
};

struct FluxPoint {
    double rx{0.0};
    double rz{0.0};
    double flux{0.0};
};

// Purity flux on the x-z disc (ry = 0) at time t. Points with |r| > 1 are
// omitted; rows are ordered rz-major, rx-minor.
std::vector<FluxPoint> flux_field(const FluxGridSpec& grid, double t, const SpectralParams& params);

// max_i | f(r_i, t_i) - (|r_{i+1}|^2 - |r_{i-1}|^2) / (2 (t_{i+1} - t_{i-1})) |
// over interior samples, skipping pulse instants, their neighbours and
// near-origin samples. Throws ConfigError for fewer than 3 samples.
double admissibility_residual(const Trajectory& traj, const SpectralParams& params);

struct ControlFieldSample {
    double t{0.0};
    Vec3 h;
};

// Minimal-norm control field h_i = r_i x v_i / (2|r_i|^2), with v_i the
// central-difference velocity minus the dissipative drift D r_i. Throws
// ConfigError when the admissibility residual exceeds max_residual and
// SingularStateError when a sample has |r| < 1e-9.
std::vector<ControlFieldSample> reconstruct_control_field(const Trajectory& traj, const SpectralParams& params,
                                                          double max_residual = 1e-4);

// Fibonacci-lattice points on the unit sphere; deterministic.
std::vector<BlochVector> fibonacci_sphere(std::size_t count);

}  // namespace nmc
