#include "nmcontrol/env_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nmcontrol/errors.hpp"

namespace nmc {
namespace {

constexpr double sign_of(char qubit_state) { return qubit_state == 'e' ? 1.0 : -1.0; }

// {after-pulse letter, before-pulse letter}
constexpr std::pair<char, char> letters(BranchLabel b) {
    switch (b) {
        case BranchLabel::ee: return {'e', 'e'};
        case BranchLabel::ge: return {'g', 'e'};
        case BranchLabel::eg: return {'e', 'g'};
        case BranchLabel::gg: return {'g', 'g'};
    }
    return {'e', 'e'};
}

// ln <a|b> for coherent product states including their global phases.
cplx log_overlap(const BranchState& a, const BranchState& b) {
    cplx acc{0.0, b.phase - a.phase};
    for (std::size_t k = 0; k < a.amplitudes.size(); ++k) {
        const cplx& x = a.amplitudes[k];
        const cplx& y = b.amplitudes[k];
        acc += -0.5 * std::norm(x) - 0.5 * std::norm(y) + std::conj(x) * y;
    }
    return acc;
}

struct Branches {
    BranchState ee, ge, eg, gg;
};

Branches all_branches(const DiscretizedEnv& env, double t, double t_pulse) {
    return {branch_state_amplitudes(env, BranchLabel::ee, t, t_pulse),
            branch_state_amplitudes(env, BranchLabel::ge, t, t_pulse),
            branch_state_amplitudes(env, BranchLabel::eg, t, t_pulse),
            branch_state_amplitudes(env, BranchLabel::gg, t, t_pulse)};
}

cplx overlap(const BranchState& a, const BranchState& b) { return std::exp(log_overlap(a, b)); }

}  // namespace

DiscretizedEnv::DiscretizedEnv(std::vector<double> omegas, std::vector<double> couplings)
    : omegas_(std::move(omegas)), couplings_(std::move(couplings)) {
    if (omegas_.empty()) throw ConfigError("environment needs at least one mode");
    if (omegas_.size() != couplings_.size()) throw ConfigError("mode frequencies and couplings differ in length");
    for (double w : omegas_)
        if (!(w > 0.0) || !std::isfinite(w)) throw ConfigError("mode frequencies must be positive and finite");
}

DiscretizedEnv build_env(const SpectralParams& params, std::size_t n_modes, double omega_max) {
    if (n_modes < 1) throw ConfigError("build_env: need at least one mode");
    if (!(omega_max > 0.0) || !std::isfinite(omega_max)) throw ConfigError("build_env: omega_max must be positive");
    const double dw = omega_max / static_cast<double>(n_modes);
    std::vector<double> omegas(n_modes);
    std::vector<double> couplings(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        omegas[k] = (static_cast<double>(k) + 0.5) * dw;
        couplings[k] = std::sqrt(spectral_density(omegas[k], params) * dw / 4.0);
    }
    return DiscretizedEnv(std::move(omegas), std::move(couplings));
}

cplx displacement_amplitude(const DiscretizedEnv& env, std::size_t k, double t) {
    const double w = env.omegas()[k];
    const double g = env.couplings()[k];
    // 1 - e^{iwt} = 2 sin^2(wt/2) - i sin(wt); avoids cancellation for small wt.
    const double half = std::sin(0.5 * w * t);
    return (2.0 * g / w) * cplx{2.0 * half * half, -std::sin(w * t)};
}

BranchState branch_state_amplitudes(const DiscretizedEnv& env, BranchLabel branch, double t, double t_pulse) {
    if (!(t_pulse >= 0.0)) throw DomainError("branch_state_amplitudes: t_pulse must be >= 0");
    if (t < t_pulse) throw DomainError("branch_state_amplitudes: requires t >= t_pulse");
    const auto [after, before] = letters(branch);
    const double s_after = sign_of(after);
    const double s_before = sign_of(before);

    BranchState out;
    out.amplitudes.resize(env.size());
    for (std::size_t k = 0; k < env.size(); ++k) {
        const cplx xi_pulse = displacement_amplitude(env, k, t_pulse);
        const cplx first = 0.5 * s_before * xi_pulse;
        const cplx second = 0.5 * s_after * (displacement_amplitude(env, k, t) - xi_pulse);
        out.amplitudes[k] = first + second;
        out.phase += std::imag(second * std::conj(first));
    }
    return out;
}

cplx branch_log_overlap(const DiscretizedEnv& env, BranchLabel a, BranchLabel b, double t, double t_pulse) {
    return log_overlap(branch_state_amplitudes(env, a, t, t_pulse), branch_state_amplitudes(env, b, t, t_pulse));
}

cplx branch_overlap(const DiscretizedEnv& env, BranchLabel a, BranchLabel b, double t, double t_pulse) {
    return std::exp(branch_log_overlap(env, a, b, t, t_pulse));
}

DensityMatrix2 oracle_density_matrix(cplx c_e, cplx c_g, double phi, double t, double t_pulse,
                                     const DiscretizedEnv& env) {
    const double norm2 = std::norm(c_e) + std::norm(c_g);
    if (std::fabs(norm2 - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "oracle_density_matrix: amplitudes must be normalized (|c_e|^2 + |c_g|^2 = " << norm2 << ")";
        throw ConfigError(os.str());
    }
    const Branches br = all_branches(env, t, t_pulse);
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    const double pe = std::norm(c_e);
    const double pg = std::norm(c_g);
    const cplx coh = c_e * std::conj(c_g);  // c_e c_g^*

    // Qubit-environment state |e>|A> + |g>|B> with
    //   A = c_e cos|Psi_ee> - c_g sin|Psi_eg>,  B = c_e sin|Psi_ge> + c_g cos|Psi_gg>.
    const cplx ee_cross = coh * overlap(br.eg, br.ee) + std::conj(coh) * overlap(br.ee, br.eg);
    const double rho_ee = pe * c * c + pg * s * s - (s * c * ee_cross).real();

    const cplx rho_eg = s * c * (pe * overlap(br.ge, br.ee) - pg * overlap(br.gg, br.eg)) +
                        coh * c * c * overlap(br.gg, br.ee) - std::conj(coh) * s * s * overlap(br.ge, br.eg);

    return {cplx{rho_ee}, rho_eg, std::conj(rho_eg), cplx{1.0 - rho_ee}};
}

BlochVector oracle_bloch_vector(const BlochVector& r0, double phi, double t, double t_pulse,
                                const DiscretizedEnv& env) {
    if (t < t_pulse) {
        phi = 0.0;
        t_pulse = t;
    }
    const double length = r0.norm();
    const Vec3 dir = length > 1e-15 ? (1.0 / length) * r0.vec() : Vec3{0.0, 0.0, 1.0};
    auto pure_image = [&](Vec3 n) {
        const double polar = std::acos(std::clamp(n.z, -1.0, 1.0));
        const double azimuth = std::atan2(n.y, n.x);
        const cplx c_e{std::cos(0.5 * polar)};
        const cplx c_g = std::sin(0.5 * polar) * std::polar(1.0, azimuth);
        return oracle_density_matrix(c_e, c_g, phi, t, t_pulse, env).to_bloch().vec();
    };
    const double w_plus = 0.5 * (1.0 + length);
    const double w_minus = 0.5 * (1.0 - length);
    Vec3 out = w_plus * pure_image(dir);
    if (w_minus > 0.0) out = out + w_minus * pure_image(-1.0 * dir);
    return BlochVector::from(out);
}

double oracle_decoherence(const DiscretizedEnv& env, double t) {
    return -branch_log_overlap(env, BranchLabel::ee, BranchLabel::gg, t, t).real();
}

double oracle_phase_generator(const DiscretizedEnv& env, double t) {
    double acc = 0.0;
    for (std::size_t k = 0; k < env.size(); ++k)
        acc -= 2.0 * env.couplings()[k] * displacement_amplitude(env, k, t).imag() / env.omegas()[k];
    return acc;
}

double oracle_control_phase(const DiscretizedEnv& env, double t, double t_pulse) {
    return branch_log_overlap(env, BranchLabel::ee, BranchLabel::ge, t, t_pulse).imag();
}

}  // namespace nmc
