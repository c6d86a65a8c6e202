// linalg.hpp: fixed-size 3-vectors, 3x3 matrices and 2x2 / 4x4 complex
// matrices used by the qubit code. Nothing here allocates.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace nmc {

using cplx = std::complex<double>;

struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double max_abs_diff(Vec3 a, Vec3 b) {
    return std::fmax(std::fabs(a.x - b.x), std::fmax(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}

struct Mat3 {
    std::array<double, 9> m{};  // row-major

    static constexpr Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
    static constexpr Mat3 zero() { return Mat3{}; }
    static constexpr Mat3 diag(double a, double b, double c) { return Mat3{{a, 0, 0, 0, b, 0, 0, 0, c}}; }

    constexpr double operator()(std::size_t r, std::size_t c) const { return m[3 * r + c]; }
    constexpr double& operator()(std::size_t r, std::size_t c) { return m[3 * r + c]; }

    friend constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
                out(i, j) = acc;
            }
        return out;
    }
    friend constexpr Vec3 operator*(const Mat3& a, Vec3 v) {
        return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
                a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
                a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
    }
    friend constexpr Mat3 operator-(const Mat3& a, const Mat3& b) {
        Mat3 out;
        for (std::size_t i = 0; i < 9; ++i) out.m[i] = a.m[i] - b.m[i];
        return out;
    }
};

inline double max_abs(const Mat3& a) {
    double out = 0.0;
    for (double v : a.m) out = std::fmax(out, std::fabs(v));
    return out;
}

// Complex 2x2 (qubit operators) and 4x4 (Choi matrices), row-major.
template <std::size_t N>
struct CMat {
    std::array<cplx, N * N> m{};

    constexpr cplx operator()(std::size_t r, std::size_t c) const { return m[N * r + c]; }
    constexpr cplx& operator()(std::size_t r, std::size_t c) { return m[N * r + c]; }

    friend CMat operator*(const CMat& a, const CMat& b) {
        CMat out;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                cplx acc{};
                for (std::size_t k = 0; k < N; ++k) acc += a(i, k) * b(k, j);
                out(i, j) = acc;
            }
        return out;
    }
    friend CMat operator+(const CMat& a, const CMat& b) {
        CMat out;
        for (std::size_t i = 0; i < N * N; ++i) out.m[i] = a.m[i] + b.m[i];
        return out;
    }
    friend CMat operator-(const CMat& a, const CMat& b) {
        CMat out;
        for (std::size_t i = 0; i < N * N; ++i) out.m[i] = a.m[i] - b.m[i];
        return out;
    }
    friend CMat operator*(cplx s, const CMat& a) {
        CMat out;
        for (std::size_t i = 0; i < N * N; ++i) out.m[i] = s * a.m[i];
        return out;
    }

    cplx trace() const {
        cplx acc{};
        for (std::size_t i = 0; i < N; ++i) acc += (*this)(i, i);
        return acc;
    }
    CMat adjoint() const {
        CMat out;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj((*this)(j, i));
        return out;
    }
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

// Pauli basis with the convention |e> = |0>, sigma_z|e> = +|e>.
inline CMat2 pauli_identity() { return CMat2{{cplx{1}, cplx{0}, cplx{0}, cplx{1}}}; }
inline CMat2 pauli_x() { return CMat2{{cplx{0}, cplx{1}, cplx{1}, cplx{0}}}; }
inline CMat2 pauli_y() { return CMat2{{cplx{0}, cplx{0, -1}, cplx{0, 1}, cplx{0}}}; }
inline CMat2 pauli_z() { return CMat2{{cplx{1}, cplx{0}, cplx{0}, cplx{-1}}}; }

// Eigenvalues of a Hermitian 4x4 matrix in ascending order. Cyclic Jacobi on
// the real-symmetric 8x8 embedding [[Re, -Im], [Im, Re]]; each eigenvalue of
// the embedding appears twice. Accuracy is near machine precision.
std::array<double, 4> hermitian_eigenvalues(const CMat4& h);

// Same routine for the 2x2 case (closed form).
std::array<double, 2> hermitian_eigenvalues(const CMat2& h);

// Eigenvalues of the symmetric part of a 3x3 matrix, ascending.
std::array<double, 3> symmetric_eigenvalues(const Mat3& a);

// Largest singular value.
double spectral_norm(const Mat3& a);

}  // namespace nmc
