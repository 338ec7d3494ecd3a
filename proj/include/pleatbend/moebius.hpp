#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace pleatbend {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Wrap an angle into the principal interval (-pi, pi].
inline double principal_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

/// Point of the sphere at infinity, stored projectively as (z : w).
/// Finite points are (z : 1), infinity is (1 : 0).  Equality is the
/// scale-relative cross-product test, so points near infinity need no
/// special casing.
struct BoundaryPoint {
    Complex z{0.0, 0.0};
    Complex w{1.0, 0.0};

    BoundaryPoint() = default;
    BoundaryPoint(Complex z_, Complex w_) : z(z_), w(w_) { rescale(); }
    explicit BoundaryPoint(Complex finite) : z(finite), w(1.0) { rescale(); }

    static BoundaryPoint infinity() { return BoundaryPoint(Complex(1.0), Complex(0.0)); }

    bool is_infinity(double tol = 1e-12) const { return std::abs(w) <= tol * std::abs(z); }

    /// Finite value z/w; may overflow for points at/near infinity.
    Complex value() const { return z / w; }

    double scale() const { return std::max(std::abs(z), std::abs(w)); }

    void rescale() {
        double s = scale();
        if (s == 0.0) throw std::invalid_argument("BoundaryPoint: (0 : 0) is not projective");
        z /= s;
        w /= s;
    }
};

inline Complex cross(const BoundaryPoint& p, const BoundaryPoint& q) {
    return p.z * q.w - q.z * p.w;
}

inline bool approx_equal(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 1e-10) {
    return std::abs(cross(p, q)) <= tol * p.scale() * q.scale();
}

/// Complex translation length: re >= 0 is the translation part, im in
/// (-pi, pi] the rotation part (principal representative mod 2*pi).
struct ComplexLength {
    double re = 0.0;
    double im = 0.0;

    ComplexLength() = default;
    ComplexLength(double re_, double im_) : re(re_), im(principal_angle(im_)) {
        if (re < 0.0) {
            if (re < -1e-12) throw std::invalid_argument("ComplexLength: negative real part");
            re = 0.0;
        }
    }
    explicit ComplexLength(Complex l) : ComplexLength(l.real(), l.imag()) {}

    Complex value() const { return Complex(re, im); }
};

/// Element of PSL(2,C): unit-determinant 2x2 complex matrix modulo sign.
/// Renormalized to det 1 on construction; all comparisons are
/// sign-agnostic.
struct MoebiusTransform {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    MoebiusTransform() = default;
    MoebiusTransform(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {
        normalize();
    }

    static MoebiusTransform identity() { return MoebiusTransform(); }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    void normalize() {
        Complex dt = det();
        double m = std::abs(dt);
        if (!(m > 0.0) || !std::isfinite(m))
            throw std::invalid_argument("MoebiusTransform: singular matrix");
        Complex s = std::sqrt(dt);
        a /= s;
        b /= s;
        c /= s;
        d /= s;
    }

    MoebiusTransform inverse() const { return MoebiusTransform(d, -b, -c, a); }

    BoundaryPoint apply(const BoundaryPoint& x) const {
        return BoundaryPoint(a * x.z + b * x.w, c * x.z + d * x.w);
    }

    friend MoebiusTransform operator*(const MoebiusTransform& A, const MoebiusTransform& B) {
        return MoebiusTransform(A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
                                A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d);
    }
};

/// Moebius action on boundary points; the projective formulation has no
/// poles.
inline BoundaryPoint apply_boundary(const MoebiusTransform& A, const BoundaryPoint& x) {
    return A.apply(x);
}

inline double frobenius(const MoebiusTransform& A) {
    return std::sqrt(std::norm(A.a) + std::norm(A.b) + std::norm(A.c) + std::norm(A.d));
}

/// Sign-agnostic matrix distance: min over +/- of the Frobenius norm.
inline double matrix_distance(const MoebiusTransform& A, const MoebiusTransform& B) {
    double plus = std::sqrt(std::norm(A.a - B.a) + std::norm(A.b - B.b) + std::norm(A.c - B.c) +
                            std::norm(A.d - B.d));
    double minus = std::sqrt(std::norm(A.a + B.a) + std::norm(A.b + B.b) + std::norm(A.c + B.c) +
                             std::norm(A.d + B.d));
    return std::min(plus, minus);
}

inline double distance_to_identity(const MoebiusTransform& A) {
    return matrix_distance(A, MoebiusTransform::identity());
}

inline bool approx_identity(const MoebiusTransform& A, double tol = 1e-12) {
    return distance_to_identity(A) <= tol;
}

enum class IsometryKind { Identity, Parabolic, Elliptic, Loxodromic };

struct Classification {
    IsometryKind kind = IsometryKind::Identity;
    ComplexLength length;
    /// |tr^2 - 4| fell inside the conditioning band 1e-9; the element is
    /// numerically indistinguishable from a parabolic.
    bool parabolic_ambiguous = false;
};

/// Classify an isometry and return its complex translation length with
/// tr = +-2 cosh(l/2), Re l >= 0, Im l in (-pi, pi].  Elliptics report
/// re = 0 and the rotation angle in [0, pi] as im.
inline Classification classify(const MoebiusTransform& A) {
    Classification out;
    if (approx_identity(A)) {
        out.kind = IsometryKind::Identity;
        return out;
    }
    Complex t = A.trace();
    Complex t2 = t * t;
    if (std::abs(t2 - 4.0) <= 1e-9) {
        out.kind = IsometryKind::Parabolic;
        out.parabolic_ambiguous = true;
        return out;
    }
    bool real_trace2 = std::abs(t2.imag()) <= 1e-12 * std::max(1.0, std::abs(t2));
    if (real_trace2 && t2.real() >= 0.0 && t2.real() < 4.0) {
        out.kind = IsometryKind::Elliptic;
        // |tr| = 2|cos(theta/2)| determines the angle up to sign; report
        // the representative in [0, pi].
        double half = std::clamp(std::abs(t) / 2.0, 0.0, 1.0);
        double theta = 2.0 * std::acos(half);
        out.length = ComplexLength(0.0, theta);
        return out;
    }
    out.kind = IsometryKind::Loxodromic;
    Complex l = 2.0 * std::acosh(t / 2.0);
    double re = l.real();
    double im = principal_angle(l.imag());
    if (re < 0.0) {
        // acosh is principal (Re >= 0); tiny negatives are roundoff.
        re = std::max(re, 0.0);
    }
    out.length = ComplexLength(re, im);
    return out;
}

}  // namespace pleatbend
