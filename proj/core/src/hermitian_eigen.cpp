#include "nmcontrol/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace nmc {
namespace {

template <std::size_t kDim>
double off_diagonal_norm(const std::array<double, kDim * kDim>& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
            if (i != j) acc += a[kDim * i + j] * a[kDim * i + j];
    return std::sqrt(acc);
}

// Cyclic Jacobi sweeps with the standard stable rotation (Golub & Van Loan 8.5).
template <std::size_t kDim>
std::array<double, kDim> jacobi_eigenvalues(std::array<double, kDim * kDim> a) {
    auto at = [&a](std::size_t i, std::size_t j) -> double& { return a[kDim * i + j]; };
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::fabs(v));
    const double stop = 1e-17 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < 64 && off_diagonal_norm<kDim>(a) > stop; ++sweep) {
        for (std::size_t p = 0; p < kDim - 1; ++p) {
            for (std::size_t q = p + 1; q < kDim; ++q) {
                const double apq = at(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < kDim; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < kDim; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::array<double, kDim> ev{};
    for (std::size_t i = 0; i < kDim; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

std::array<double, 4> hermitian_eigenvalues(const CMat4& h) {
    constexpr std::size_t kDim = 8;
    std::array<double, kDim * kDim> a{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            // Symmetrize so that round-off in the input cannot break the embedding.
            const cplx hij = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a[kDim * i + j] = hij.real();
            a[kDim * (i + 4) + (j + 4)] = hij.real();
            a[kDim * (i + 4) + j] = hij.imag();
            a[kDim * i + (j + 4)] = -hij.imag();
        }
    }
    const auto ev = jacobi_eigenvalues<kDim>(a);
    // Eigenvalues of the embedding come in equal pairs.
    return {0.5 * (ev[0] + ev[1]), 0.5 * (ev[2] + ev[3]), 0.5 * (ev[4] + ev[5]), 0.5 * (ev[6] + ev[7])};
}

std::array<double, 3> symmetric_eigenvalues(const Mat3& a) {
    std::array<double, 9> sym{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) sym[3 * i + j] = 0.5 * (a(i, j) + a(j, i));
    return jacobi_eigenvalues<3>(sym);
}

double spectral_norm(const Mat3& a) {
    Mat3 gram;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 3; ++k) acc += a(k, i) * a(k, j);
            gram(i, j) = acc;
        }
    return std::sqrt(std::max(0.0, symmetric_eigenvalues(gram)[2]));
}

std::array<double, 2> hermitian_eigenvalues(const CMat2& h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const cplx b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    return {mean - radius, mean + radius};
}

}  // namespace nmc
