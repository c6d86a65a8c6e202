// spectral_kernels.hpp: closed-form kernels of zero-temperature pure
// dephasing with an Ohmic-family spectral density J(w) = w^s e^{-w}.
//
// Units: hbar = 1 and the cutoff frequency is 1, so times are in units of
// 1/w_c and frequencies in units of w_c.
//
//   decay rate          gamma(t) = (1+t^2)^{-s/2} G(s) sin(s atan t)
//   decoherence fn      Gamma(t) = G(s)/(s-1) [1 - (1+t^2)^{-s/2}
//                                   (cos(s atan t) + t sin(s atan t))]
//   phase generator     Gt(t)    = G(s-1) (1+t^2)^{-s/2}
//                                   [sin(s atan t) - t cos(s atan t)]
//
// with G the Euler Gamma function. gamma = dGamma/dt, Gamma(t) equals
// int J(w)(1 - cos wt)/w^2 dw and Gt(t) equals int J(w) sin(wt)/w^2 dw.
//
// Normalization note for the phase generator: the conditional-displacement
// environment oracle (env_oracle.hpp) fixes the prefactor at G(s-1). A
// prefactor of 4 G(s-1) overestimates the post-pulse phase by a factor of
// four and disagrees with the oracle; see tests/unit/test_env_oracle.cpp.
// The kernel uses (1+t^2)^{-s/2}; a (1-t^2)^{-s/2} factor would be singular
// at t = 1 and complex beyond it.

#pragma once

#include <vector>

namespace nmc {

class SpectralParams {
public:
    static constexpr double kMinOhmicity = 1.0;  // exclusive
    static constexpr double kMaxOhmicity = 8.0;  // inclusive

    // Throws DomainError unless 1 < s <= 8.
    explicit SpectralParams(double s);

    double s() const noexcept { return s_; }
    double gamma_s() const noexcept { return gamma_s_; }              // G(s)
    double gamma_s_minus_1() const noexcept { return gamma_sm1_; }    // G(s-1)
    double asymptotic_decoherence() const noexcept { return gamma_s_ / (s_ - 1.0); }

private:
    double s_;
    double gamma_s_;
    double gamma_sm1_;
};

struct KernelSample {
    double t{0.0};
    double gamma{0.0};        // decay rate
    double big_gamma{0.0};    // decoherence function
    double tilde_gamma{0.0};  // phase generator
};

double spectral_density(double omega, const SpectralParams& params);
double decay_rate(double t, const SpectralParams& params);
double decoherence_fn(double t, const SpectralParams& params);
double phase_fn(double t, const SpectralParams& params);

// Post-pulse phase y(t) = Gt(t) - Gt(t_pulse) - Gt(t - t_pulse).
double control_phase_y(double t, double t_pulse, const SpectralParams& params);

KernelSample sample_kernels(double t, const SpectralParams& params);

// Positive roots of gamma(t): t_k = tan(k pi / s) for k >= 1 with k < s/2,
// each confirmed by bisection. Empty for s <= 2.
std::vector<double> rate_zero_crossings(const SpectralParams& params);

struct Horizon {
    double T{0.0};        // end of the control window
    double t_tilde{0.0};  // first sign change of gamma
};

constexpr double kDefaultHorizon = 30.0;

// t_tilde is the first zero crossing; T is the second one when it exists,
// otherwise default_T. Throws HorizonError for s <= 2 or t_tilde >= default_T.
Horizon horizon(const SpectralParams& params, double default_T = kDefaultHorizon);

}  // namespace nmc
