#include "nmcontrol/spectral_kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nmcontrol/errors.hpp"

namespace nmc {
namespace {

void require_nonnegative_time(double t, const char* what) {
    if (!(t >= 0.0)) {
        std::ostringstream os;
        os << what << ": time must be >= 0 (got " << t << ")";
        throw DomainError(os.str());
    }
}

// (1+t^2)^{-s/2}, evaluated in log space so that large t does not overflow
// the intermediate 1+t^2.
double envelope(double t, double s) {
    return std::exp(-0.5 * s * std::log1p(t * t));
}

}  // namespace

SpectralParams::SpectralParams(double s) : s_(s) {
    if (!(s > kMinOhmicity && s <= kMaxOhmicity)) {
        std::ostringstream os;
        os << "Ohmicity s must satisfy 1 < s <= 8 (got " << s << ")";
        throw DomainError(os.str());
    }
    gamma_s_ = std::tgamma(s);
    gamma_sm1_ = std::tgamma(s - 1.0);
}

double spectral_density(double omega, const SpectralParams& params) {
    if (!(omega >= 0.0)) throw DomainError("spectral_density: frequency must be >= 0");
    if (omega == 0.0) return 0.0;
    return std::pow(omega, params.s()) * std::exp(-omega);
}

double decay_rate(double t, const SpectralParams& params) {
    require_nonnegative_time(t, "decay_rate");
    const double s = params.s();
    return envelope(t, s) * params.gamma_s() * std::sin(s * std::atan(t));
}

double decoherence_fn(double t, const SpectralParams& params) {
    require_nonnegative_time(t, "decoherence_fn");
    const double s = params.s();
    const double theta = std::atan(t);
    const double bracket = 1.0 - envelope(t, s) * (std::cos(s * theta) + t * std::sin(s * theta));
    return params.asymptotic_decoherence() * bracket;
}

double phase_fn(double t, const SpectralParams& params) {
    require_nonnegative_time(t, "phase_fn");
    const double s = params.s();
    const double theta = std::atan(t);
    return params.gamma_s_minus_1() * envelope(t, s) * (std::sin(s * theta) - t * std::cos(s * theta));
}

double control_phase_y(double t, double t_pulse, const SpectralParams& params) {
    require_nonnegative_time(t_pulse, "control_phase_y");
    if (t < t_pulse) throw DomainError("control_phase_y: requires t >= t_pulse");
    return phase_fn(t, params) - phase_fn(t_pulse, params) - phase_fn(t - t_pulse, params);
}

KernelSample sample_kernels(double t, const SpectralParams& params) {
    return {t, decay_rate(t, params), decoherence_fn(t, params), phase_fn(t, params)};
}

std::vector<double> rate_zero_crossings(const SpectralParams& params) {
    const double s = params.s();
    std::vector<double> roots;
    // sin(s atan t) vanishes at s atan t = k pi; atan t < pi/2 requires k < s/2.
    for (int k = 1; 2.0 * k < s; ++k) {
        const double guess = std::tan(k * std::numbers::pi / s);
        // The sign of gamma flips across each simple root; bracket and bisect.
        double lo = guess * (1.0 - 1e-6);
        double hi = guess * (1.0 + 1e-6);
        double flo = decay_rate(lo, params);
        if (flo * decay_rate(hi, params) > 0.0) {
            roots.push_back(guess);
            continue;
        }
        for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = decay_rate(mid, params);
            if (fmid == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fmid > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        const double bisected = 0.5 * (lo + hi);
        // Keep whichever of the analytic and bisected roots has the smaller residual.
        roots.push_back(std::fabs(decay_rate(bisected, params)) < std::fabs(decay_rate(guess, params)) ? bisected
                                                                                                         : guess);
    }
    return roots;
}

Horizon horizon(const SpectralParams& params, double default_T) {
    const auto roots = rate_zero_crossings(params);
    if (roots.empty()) {
        std::ostringstream os;
        os << "decay rate never changes sign for s = " << params.s() << " (requires s > 2)";
        throw HorizonError(os.str());
    }
    Horizon h;
    h.t_tilde = roots[0];
    h.T = roots.size() >= 2 ? roots[1] : default_T;
    if (!(h.t_tilde < h.T)) {
        std::ostringstream os;
        os << "first sign change of the decay rate (t = " << h.t_tilde << ") lies beyond the horizon T = " << h.T;
        throw HorizonError(os.str());
    }
    return h;
}

}  // namespace nmc
