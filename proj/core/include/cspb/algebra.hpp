#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace cspb {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx iu{0.0, 1.0};

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

// Complex 3-vector. dot() and cross() are bilinear (no conjugation); the
// polarization scalar F·F and all field identities here use that convention.
struct CVec3 {
    cplx x{}, y{}, z{};

    CVec3() = default;
    CVec3(cplx X, cplx Y, cplx Z) : x(X), y(Y), z(Z) {}
    explicit CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

    Vec3 real() const { return {x.real(), y.real(), z.real()}; }
    Vec3 imag() const { return {x.imag(), y.imag(), z.imag()}; }

    CVec3& operator+=(const CVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    CVec3& operator-=(const CVec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    CVec3& operator*=(cplx s) { x *= s; y *= s; z *= s; return *this; }
};

inline CVec3 operator+(CVec3 a, const CVec3& b) { return a += b; }
inline CVec3 operator-(CVec3 a, const CVec3& b) { return a -= b; }
inline CVec3 operator*(CVec3 a, cplx s) { return a *= s; }
inline CVec3 operator*(cplx s, CVec3 a) { return a *= s; }
inline CVec3 operator*(CVec3 a, double s) { return a *= cplx(s, 0); }
inline CVec3 operator*(double s, CVec3 a) { return a *= cplx(s, 0); }
inline CVec3 operator-(const CVec3& a) { return {-a.x, -a.y, -a.z}; }

inline cplx dot(const CVec3& a, const CVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline cplx dot(const Vec3& a, const CVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline cplx dot(const CVec3& a, const Vec3& b) { return dot(b, a); }
inline CVec3 cross(const CVec3& a, const CVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline CVec3 cross(const Vec3& a, const CVec3& b) { return cross(CVec3(a), b); }
inline CVec3 cross(const CVec3& a, const Vec3& b) { return cross(a, CVec3(b)); }
// Euclidean magnitude sqrt(sum |a_i|^2), not the bilinear dot.
inline double abs2(const CVec3& a) { return std::norm(a.x) + std::norm(a.y) + std::norm(a.z); }
inline double abs(const CVec3& a) { return std::sqrt(abs2(a)); }

// Complex 3x3 matrix, row-major. Used for field Hessians.
struct Mat3c {
    std::array<cplx, 9> m{};

    cplx& operator()(int i, int j) { return m[3 * i + j]; }
    const cplx& operator()(int i, int j) const { return m[3 * i + j]; }

    static Mat3c identity(cplx s = 1.0) {
        Mat3c r;
        r(0, 0) = r(1, 1) = r(2, 2) = s;
        return r;
    }
    static Mat3c outer(const CVec3& a, const CVec3& b) {
        Mat3c r;
        const cplx av[3] = {a.x, a.y, a.z}, bv[3] = {b.x, b.y, b.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = av[i] * bv[j];
        return r;
    }
    // a⊗b + b⊗a
    static Mat3c sym_outer(const CVec3& a, const CVec3& b) {
        Mat3c r = outer(a, b);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < i; ++j) {
                cplx s = r(i, j) + r(j, i);
                r(i, j) = r(j, i) = s;
            }
        for (int i = 0; i < 3; ++i) r(i, i) *= 2.0;
        return r;
    }

    Mat3c& operator+=(const Mat3c& o) {
        for (int k = 0; k < 9; ++k) m[k] += o.m[k];
        return *this;
    }
    Mat3c& operator*=(cplx s) {
        for (auto& v : m) v *= s;
        return *this;
    }

    CVec3 apply(const CVec3& v) const {
        return {(*this)(0, 0) * v.x + (*this)(0, 1) * v.y + (*this)(0, 2) * v.z,
                (*this)(1, 0) * v.x + (*this)(1, 1) * v.y + (*this)(1, 2) * v.z,
                (*this)(2, 0) * v.x + (*this)(2, 1) * v.y + (*this)(2, 2) * v.z};
    }
    cplx trace() const { return m[0] + m[4] + m[8]; }
};

inline Mat3c operator+(Mat3c a, const Mat3c& b) { return a += b; }
inline Mat3c operator*(Mat3c a, cplx s) { return a *= s; }
inline Mat3c operator*(cplx s, Mat3c a) { return a *= s; }

}  // namespace cspb
