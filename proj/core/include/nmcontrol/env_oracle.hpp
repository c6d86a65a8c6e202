// env_oracle.hpp: brute-force discretized bath for the exact pure-dephasing
// model H = w0 sz + sum_k w_k b_k^+ b_k + sz sum_k (g_k b_k + g_k^* b_k^+).
//
// In the interaction picture the evolution is a qubit-conditional
// displacement: |e> drives every mode to D(+xi_k/2), |g> to D(-xi_k/2), with
// xi_k(t) = 2 g_k (1 - e^{i w_k t}) / w_k. An instantaneous y rotation at
// t_p splits the evolution into two segments and four environment branches
// Psi_ab = U_a(t, t_p) U_b(t_p, 0)|0> (a: after the pulse, b: before).
// Segments are composed with D(a) D(b) = e^{i Im(a b^*)} D(a + b); the
// resulting branch phases carry the post-pulse phase y(t) and must be kept.
//
// The continuum is replaced by a midpoint grid on (0, w_max] with
// g_k^2 = J(w_k) dw / 4, which makes (1/2) sum_k |xi_k|^2 reproduce the
// closed-form decoherence function.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nmcontrol/bloch.hpp"
#include "nmcontrol/linalg.hpp"
#include "nmcontrol/spectral_kernels.hpp"

namespace nmc {

struct OracleConfig {
    std::size_t n_modes{2000};
    double omega_max{50.0};
};

class DiscretizedEnv {
public:
    // Explicit mode list; frequencies must be positive.
    DiscretizedEnv(std::vector<double> omegas, std::vector<double> couplings);

    std::size_t size() const noexcept { return omegas_.size(); }
    std::span<const double> omegas() const noexcept { return omegas_; }
    std::span<const double> couplings() const noexcept { return couplings_; }

private:
    std::vector<double> omegas_;
    std::vector<double> couplings_;
};

// Midpoint grid w_k = (k + 1/2) w_max / N with g_k^2 = J(w_k) (w_max / N) / 4.
// Throws ConfigError for N < 1 or w_max <= 0.
DiscretizedEnv build_env(const SpectralParams& params, std::size_t n_modes, double omega_max);
inline DiscretizedEnv build_env(const SpectralParams& params, const OracleConfig& cfg = {}) {
    return build_env(params, cfg.n_modes, cfg.omega_max);
}

// xi_k(t) = 2 g_k (1 - e^{i w_k t}) / w_k
cplx displacement_amplitude(const DiscretizedEnv& env, std::size_t k, double t);

// Letters name the qubit state during the segment after / before the pulse.
enum class BranchLabel { ee, ge, eg, gg };

struct BranchState {
    std::vector<cplx> amplitudes;  // coherent amplitude of each mode
    double phase{0.0};             // accumulated global phase from segment composition
};

// Throws DomainError when t < t_pulse.
BranchState branch_state_amplitudes(const DiscretizedEnv& env, BranchLabel branch, double t, double t_pulse);

// ln <Psi_a|Psi_b>, summed mode by mode in ascending order. The imaginary
// part is not wrapped to (-pi, pi].
cplx branch_log_overlap(const DiscretizedEnv& env, BranchLabel a, BranchLabel b, double t, double t_pulse);
cplx branch_overlap(const DiscretizedEnv& env, BranchLabel a, BranchLabel b, double t, double t_pulse);

// Reduced qubit state for the initial product state (c_e|e> + c_g|g>)|0>,
// with a y rotation by phi at t_pulse. Throws ConfigError unless
// |c_e|^2 + |c_g|^2 = 1 (to 1e-12) and DomainError when t < t_pulse.
DensityMatrix2 oracle_density_matrix(cplx c_e, cplx c_g, double phi, double t, double t_pulse,
                                     const DiscretizedEnv& env);

// Same for an arbitrary Bloch-ball initial state, decomposed into the pure
// states along +-r with weights (1 +- |r|)/2. For t < t_pulse the pulse has
// not happened and the state only dephases.
BlochVector oracle_bloch_vector(const BlochVector& r0, double phi, double t, double t_pulse,
                                const DiscretizedEnv& env);

// Oracle counterparts of the closed-form kernels.
double oracle_decoherence(const DiscretizedEnv& env, double t);           // -ln <Psi_ee|Psi_gg> with no pulse
double oracle_phase_generator(const DiscretizedEnv& env, double t);       // sum_k 4 g_k^2 sin(w_k t) / w_k^2
double oracle_control_phase(const DiscretizedEnv& env, double t, double t_pulse);  // Im ln <Psi_ee|Psi_ge>

}  // namespace nmc
