#pragma once

#include <algorithm>
#include <array>

#include "pleatbend/moebius.hpp"

namespace pleatbend {

/// Point of the upper half-space model H^3 = { z + t j : z in C, t > 0 }.
struct H3Point {
    Complex z{0.0, 0.0};
    double t = 1.0;

    H3Point() = default;
    H3Point(Complex z_, double t_) : z(z_), t(t_) {
        if (!(t > 0.0)) throw std::invalid_argument("H3Point: height must be positive");
    }

    static H3Point j() { return H3Point(Complex(0.0), 1.0); }
};

inline double ht(const H3Point& p) { return p.t; }
inline Complex Zc(const H3Point& p) { return p.z; }

/// cosh of the hyperbolic distance (standard upper half-space formula).
inline double cosh_distance(const H3Point& p, const H3Point& q) {
    double dz2 = std::norm(p.z - q.z);
    double dt = p.t - q.t;
    return 1.0 + (dz2 + dt * dt) / (2.0 * p.t * q.t);
}

inline double hyperbolic_distance(const H3Point& p, const H3Point& q) {
    return std::acosh(std::max(1.0, cosh_distance(p, q)));
}

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& u, const Vec3& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }
inline Vec3 operator-(const Vec3& u, const Vec3& v) { return {u[0] - v[0], u[1] - v[1], u[2] - v[2]}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
inline double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }
inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Euclidean angle between two nonzero vectors, in [0, pi].
inline double vector_angle(const Vec3& u, const Vec3& v) {
    return std::atan2(norm(cross(u, v)), dot(u, v));
}

/// Tangent vector to H^3: a base point and a nonzero Euclidean direction.
struct TangentVectorH3 {
    H3Point base;
    Vec3 dir{0.0, 0.0, 1.0};

    TangentVectorH3() = default;
    TangentVectorH3(H3Point base_, Vec3 dir_) : base(base_), dir(dir_) {
        if (!(norm(dir) > 0.0)) throw std::invalid_argument("TangentVectorH3: zero direction");
    }

    TangentVectorH3 normalized() const {
        double n = norm(dir);
        return TangentVectorH3(base, {dir[0] / n, dir[1] / n, dir[2] / n});
    }
};

/// Poincare extension of A to H^3 via the quaternion formula
///   A(z+tj) = ((az+b)conj(cz+d) + a conj(c) t^2 + tj) / (|cz+d|^2 + |c|^2 t^2).
inline H3Point poincare_extend(const MoebiusTransform& A, const H3Point& p) {
    Complex w = A.c * p.z + A.d;
    double denom = std::norm(w) + std::norm(A.c) * p.t * p.t;
    Complex zn = (A.a * p.z + A.b) * std::conj(w) + A.a * std::conj(A.c) * p.t * p.t;
    return H3Point(zn / denom, p.t / denom);
}

/// Analytic pushforward of a tangent vector under the Poincare extension.
inline TangentVectorH3 differential(const MoebiusTransform& A, const TangentVectorH3& v) {
    const Complex z = v.base.z;
    const double t = v.base.t;
    const Complex w = A.c * z + A.d;
    const Complex num = (A.a * z + A.b) * std::conj(w) + A.a * std::conj(A.c) * t * t;
    const double den = std::norm(w) + std::norm(A.c) * t * t;

    // Partials of numerator and denominator in z, conj(z), t.
    const Complex Nz = A.a * std::conj(w);
    const Complex Nzb = (A.a * z + A.b) * std::conj(A.c);
    const Complex Nt = 2.0 * A.a * std::conj(A.c) * t;
    const Complex Dz = A.c * std::conj(w);  // d(den)/dz; d(den)/dzbar is its conjugate
    const double Dt = 2.0 * std::norm(A.c) * t;

    const double den2 = den * den;
    const Complex Zz = (Nz * den - num * Dz) / den2;
    const Complex Zzb = (Nzb * den - num * std::conj(Dz)) / den2;
    const Complex Zt = (Nt * den - num * Dt) / den2;
    const Complex Tz = -t * Dz / den2;
    const double Tt = (den - t * Dt) / den2;

    const Complex dz(v.dir[0], v.dir[1]);
    const double dt = v.dir[2];
    const Complex dZ = Zz * dz + Zzb * std::conj(dz) + Zt * dt;
    const double dT = 2.0 * (Tz * dz).real() + Tt * dt;

    return TangentVectorH3(poincare_extend(A, v.base), {dZ.real(), dZ.imag(), dT});
}

/// The appendix comparison function
///   D(u, v) = max{ |ht(P)/ht(Q) - 1|, |Z(P) - Z(Q)|, |angle(u, v)| }.
/// Not a metric; the height term is not symmetric.
inline double dist_th3(const TangentVectorH3& u, const TangentVectorH3& v) {
    double h = std::abs(u.base.t / v.base.t - 1.0);
    double z = std::abs(u.base.z - v.base.z);
    double a = vector_angle(u.dir, v.dir);
    return std::max({h, z, a});
}

/// Isometry taking p to j with trivial rotation: z -> (z - z0)/t0.
/// Its differential rescales directions uniformly, so tangent directions
/// are unchanged.
inline MoebiusTransform frame_at(const H3Point& p) {
    return MoebiusTransform(Complex(1.0), -p.z, Complex(0.0), Complex(p.t));
}

/// Endpoint at infinity of the geodesic ray from v.base in direction
/// v.dir.  For a base at j this is the stereographic image
/// (dx + i dy) : (1 - dz) of the unit direction.
inline BoundaryPoint endpoint_of_ray(const TangentVectorH3& v) {
    TangentVectorH3 u = v.normalized();
    MoebiusTransform M = frame_at(u.base);
    BoundaryPoint at_j = (u.dir[0] == 0.0 && u.dir[1] == 0.0 && u.dir[2] > 0.0)
                             ? BoundaryPoint::infinity()
                             : BoundaryPoint(Complex(u.dir[0], u.dir[1]), Complex(1.0 - u.dir[2]));
    return apply_boundary(M.inverse(), at_j);
}

}  // namespace pleatbend
