#pragma once

#include "pleatbend/h3.hpp"

namespace pleatbend {

/// Oriented geodesic of H^3: ordered pair of distinct boundary points,
/// from the repelling/initial endpoint to the attracting/terminal one.
struct OrientedGeodesic {
    BoundaryPoint p_minus;
    BoundaryPoint p_plus;

    OrientedGeodesic() : p_minus(Complex(0.0)), p_plus(BoundaryPoint::infinity()) {}
    OrientedGeodesic(BoundaryPoint m, BoundaryPoint p) : p_minus(m), p_plus(p) {
        if (approx_equal(p_minus, p_plus))
            throw std::invalid_argument("OrientedGeodesic: coincident endpoints");
    }

    OrientedGeodesic reversed() const { return OrientedGeodesic(p_plus, p_minus); }
};

/// Moebius map sending g.p_minus -> 0 and g.p_plus -> infinity, so the
/// image of g is the upward-oriented vertical axis.
inline MoebiusTransform standardizer(const OrientedGeodesic& g) {
    const BoundaryPoint& m = g.p_minus;
    const BoundaryPoint& p = g.p_plus;
    return MoebiusTransform(m.w, -m.z, p.w, -p.z);
}

inline OrientedGeodesic map_geodesic(const MoebiusTransform& A, const OrientedGeodesic& g) {
    return OrientedGeodesic(apply_boundary(A, g.p_minus), apply_boundary(A, g.p_plus));
}

/// Axis of a loxodromic (or elliptic) transform, oriented from the
/// repelling to the attracting fixed point.  For elliptics the
/// orientation is chosen so the rotation angle about the oriented axis
/// lies in (0, pi].
inline OrientedGeodesic axis_of(const MoebiusTransform& A) {
    Classification cls = classify(A);
    if (cls.kind == IsometryKind::Identity || cls.kind == IsometryKind::Parabolic)
        throw std::domain_error("axis_of: transform has no axis");

    Complex t = A.trace();
    Complex s = std::sqrt(t * t - 4.0);
    Complex l1 = (t + s) / 2.0;
    Complex l2 = (t - s) / 2.0;

    auto eigenvector = [&A](Complex lambda) {
        // (a - lambda) z + b w = 0  or  c z + (d - lambda) w = 0
        auto residual = [&A, lambda](const BoundaryPoint& v) {
            Complex rz = A.a * v.z + A.b * v.w - lambda * v.z;
            Complex rw = A.c * v.z + A.d * v.w - lambda * v.w;
            return std::abs(rz) + std::abs(rw);
        };
        double n1 = std::max(std::abs(A.b), std::abs(lambda - A.a));
        double n2 = std::max(std::abs(lambda - A.d), std::abs(A.c));
        if (n1 < 1e-14 && n2 < 1e-14) {
            // Diagonal matrix: eigenvectors are the coordinate axes.
            return std::abs(A.a - lambda) < std::abs(A.d - lambda)
                       ? BoundaryPoint(Complex(1.0), Complex(0.0))
                       : BoundaryPoint(Complex(0.0), Complex(1.0));
        }
        if (n1 < 1e-14) return BoundaryPoint(lambda - A.d, A.c);
        if (n2 < 1e-14) return BoundaryPoint(A.b, lambda - A.a);
        BoundaryPoint e1(A.b, lambda - A.a);
        BoundaryPoint e2(lambda - A.d, A.c);
        return residual(e1) <= residual(e2) ? e1 : e2;
    };

    BoundaryPoint f1 = eigenvector(l1);
    BoundaryPoint f2 = eigenvector(l2);

    if (cls.kind == IsometryKind::Loxodromic) {
        // Attracting fixed point belongs to the eigenvalue of larger modulus.
        if (std::abs(l1) >= std::abs(l2)) return OrientedGeodesic(f2, f1);
        return OrientedGeodesic(f1, f2);
    }
    // Elliptic: with p_minus at the f_m eigenvalue mu_m, the map is
    // conjugate to z -> (mu_plus/mu_minus) z; orient so the angle is in
    // (0, pi].
    double ang = principal_angle(std::arg(l1 / l2));
    if (ang > 0.0) return OrientedGeodesic(f2, f1);
    return OrientedGeodesic(f1, f2);
}

/// Hyperbolic rotation by angle theta about the oriented geodesic g:
/// conjugate g to (0, infinity) and apply z -> exp(i theta) z.
inline MoebiusTransform rotation_about_axis(const OrientedGeodesic& g, double theta) {
    MoebiusTransform M = standardizer(g);
    Complex h = std::exp(Complex(0.0, theta / 2.0));
    MoebiusTransform D(h, Complex(0.0), Complex(0.0), 1.0 / h);
    return M.inverse() * D * M;
}

/// Translation by complex length s along the oriented geodesic g
/// (positive real part moves points toward g.p_plus).
inline MoebiusTransform translation_along_axis(const OrientedGeodesic& g, Complex s) {
    MoebiusTransform M = standardizer(g);
    Complex h = std::exp(s / 2.0);
    MoebiusTransform D(h, Complex(0.0), Complex(0.0), 1.0 / h);
    return M.inverse() * D * M;
}

/// Half-turn (rotation by pi) about g; an involution in PSL(2,C).
inline MoebiusTransform half_turn(const OrientedGeodesic& g) { return rotation_about_axis(g, kPi); }

struct CommonOrthogonal {
    OrientedGeodesic geodesic;  // oriented from the foot on alpha to the foot on beta
    H3Point foot_alpha;
    H3Point foot_beta;
};

/// Signed arc-length parameter of a point p along g (p need not lie on
/// g; the parameter of its projection is returned).
inline double arc_parameter(const OrientedGeodesic& g, const H3Point& p) {
    H3Point q = poincare_extend(standardizer(g), p);
    return std::log(std::sqrt(std::norm(q.z) + q.t * q.t));
}

/// Point at signed arc-length parameter s along g.
inline H3Point point_at(const OrientedGeodesic& g, double s) {
    return poincare_extend(standardizer(g).inverse(), H3Point(Complex(0.0), std::exp(s)));
}

/// The unique geodesic meeting alpha and beta at right angles, oriented
/// from its foot on alpha to its foot on beta.  Intersecting geodesics
/// are handled (the orthogonal passes through the intersection point);
/// shared endpoints and coincident geodesics are errors.
inline CommonOrthogonal common_orthogonal(const OrientedGeodesic& alpha, const OrientedGeodesic& beta) {
    bool same_fwd = approx_equal(alpha.p_minus, beta.p_minus) && approx_equal(alpha.p_plus, beta.p_plus);
    bool same_rev = approx_equal(alpha.p_minus, beta.p_plus) && approx_equal(alpha.p_plus, beta.p_minus);
    if (same_fwd || same_rev) throw std::domain_error("common_orthogonal: coincident geodesics");
    if (approx_equal(alpha.p_minus, beta.p_minus) || approx_equal(alpha.p_minus, beta.p_plus) ||
        approx_equal(alpha.p_plus, beta.p_minus) || approx_equal(alpha.p_plus, beta.p_plus))
        throw std::domain_error("common_orthogonal: parallel geodesics (shared endpoint)");

    MoebiusTransform M = standardizer(alpha);
    Complex u = apply_boundary(M, beta.p_minus).value();
    Complex v = apply_boundary(M, beta.p_plus).value();
    // Geodesics orthogonal to the vertical axis have antipodal endpoints
    // +-w; orthogonality to (u, v) forces w^2 = u v.
    Complex w = std::sqrt(u * v);
    OrientedGeodesic gamma_std{BoundaryPoint(-w), BoundaryPoint(w)};

    H3Point foot_a_std(Complex(0.0), std::abs(w));
    // Foot on beta: standardize beta inside the same frame and take the
    // apex of the image of gamma.
    OrientedGeodesic beta_std{BoundaryPoint(u), BoundaryPoint(v)};
    MoebiusTransform Mb = standardizer(beta_std);
    Complex g1 = apply_boundary(Mb, gamma_std.p_minus).value();
    Complex g2 = apply_boundary(Mb, gamma_std.p_plus).value();
    H3Point foot_b_in_mb(Complex(0.0), std::sqrt(std::abs(g1) * std::abs(g2)));
    H3Point foot_b_std = poincare_extend(Mb.inverse(), foot_b_in_mb);

    // Orient gamma from alpha to beta.
    double sa = arc_parameter(gamma_std, foot_a_std);
    double sb = arc_parameter(gamma_std, foot_b_std);
    if (sb < sa) gamma_std = gamma_std.reversed();

    MoebiusTransform Minv = M.inverse();
    CommonOrthogonal out;
    out.geodesic = map_geodesic(Minv, gamma_std);
    out.foot_alpha = poincare_extend(Minv, foot_a_std);
    out.foot_beta = poincare_extend(Minv, foot_b_std);
    return out;
}

/// Complex distance d_gamma(alpha, beta): real part the distance between
/// the feet of the common orthogonal (>= 0 by its orientation), imaginary
/// part the parallel-transport angle between the oriented tangents.
inline ComplexLength complex_distance(const OrientedGeodesic& alpha, const OrientedGeodesic& beta) {
    CommonOrthogonal co = common_orthogonal(alpha, beta);
    MoebiusTransform M = standardizer(co.geodesic);
    Complex ap = apply_boundary(M, alpha.p_plus).value();
    Complex am = apply_boundary(M, alpha.p_minus).value();
    Complex bp = apply_boundary(M, beta.p_plus).value();
    Complex bm = apply_boundary(M, beta.p_minus).value();
    double re = 0.5 * (std::log(std::abs(bp)) + std::log(std::abs(bm)) - std::log(std::abs(ap)) -
                       std::log(std::abs(am)));
    double im = std::arg(bp / ap);
    return ComplexLength(std::max(0.0, re), im);
}

/// cosh of the complex distance from the cross ratio of the endpoints;
/// an independent algebraic route used as an oracle.
inline Complex cosh_distance_cross_ratio(const OrientedGeodesic& alpha, const OrientedGeodesic& beta) {
    auto pd = [](const BoundaryPoint& p, const BoundaryPoint& q) { return cross(p, q); };
    Complex cr = (pd(alpha.p_minus, beta.p_minus) * pd(alpha.p_plus, beta.p_plus)) /
                 (pd(alpha.p_minus, beta.p_plus) * pd(alpha.p_plus, beta.p_minus));
    return (1.0 + cr) / (1.0 - cr);
}

/// Unit tangent to g at a point P on g (within 1e-9 hyperbolic distance),
/// pointing toward g.p_plus.
inline TangentVectorH3 tangent_at_foot(const OrientedGeodesic& g, const H3Point& p) {
    MoebiusTransform M = standardizer(g);
    H3Point q = poincare_extend(M, p);
    double off = std::asinh(std::abs(q.z) / q.t);
    if (off > 1e-9) throw std::domain_error("tangent_at_foot: point is not on the geodesic");
    TangentVectorH3 up(H3Point(Complex(0.0), q.t), {0.0, 0.0, 1.0});
    return differential(M.inverse(), up).normalized();
}

}  // namespace pleatbend
