#pragma once

#include <limits>

#include "pleatbend/h3.hpp"

namespace pleatbend {

/// Cone C(p, g, theta) with vertex p, axis direction g based at p and
/// half-angle theta in (0, pi).
struct Cone {
    H3Point vertex;
    TangentVectorH3 axis;
    double angle = kPi / 2.0;

    Cone() = default;
    Cone(H3Point vertex_, TangentVectorH3 axis_, double angle_)
        : vertex(vertex_), axis(axis_), angle(angle_) {
        if (!(angle > 0.0 && angle < kPi)) throw std::invalid_argument("Cone: angle outside (0, pi)");
        if (hyperbolic_distance(axis.base, vertex) > 1e-9)
            throw std::invalid_argument("Cone: axis must be based at the vertex");
    }
};

enum class DiskKind { Disk, DiskComplement, HalfPlane };

/// Open round region of the sphere at infinity, stored as the Hermitian
/// form H = [[A, B], [conj(B), C]] with A, C real.  The region is
/// { (z : w) : A|z|^2 + 2 Re(conj(B) z conj(w)) + C|w|^2 < 0 }, which
/// uniformly covers disks (A > 0), disk complements (A < 0, these contain
/// infinity) and half-planes (A = 0).  A Moebius map M sends the form to
/// (M^-1)* H (M^-1).
struct BoundaryDisk {
    double A = 1.0;
    Complex B{0.0, 0.0};
    double C = -1.0;

    BoundaryDisk() = default;
    BoundaryDisk(double A_, Complex B_, double C_) : A(A_), B(B_), C(C_) { rescale(); }

    static BoundaryDisk disk(Complex center, double radius) {
        return BoundaryDisk(1.0, -center, std::norm(center) - radius * radius);
    }
    static BoundaryDisk disk_complement(Complex center, double radius) {
        return BoundaryDisk(-1.0, center, radius * radius - std::norm(center));
    }

    void rescale() {
        double s = std::max({std::abs(A), std::abs(B), std::abs(C)});
        if (!(s > 0.0)) throw std::invalid_argument("BoundaryDisk: zero form");
        A /= s;
        B /= s;
        C /= s;
    }

    double eval(const BoundaryPoint& p) const {
        return A * std::norm(p.z) + 2.0 * (std::conj(B) * p.z * std::conj(p.w)).real() +
               C * std::norm(p.w);
    }
    bool contains(const BoundaryPoint& p) const { return eval(p) < 0.0; }

    DiskKind kind(double tol = 1e-13) const {
        if (std::abs(A) <= tol) return DiskKind::HalfPlane;
        return A > 0.0 ? DiskKind::Disk : DiskKind::DiskComplement;
    }

    /// Center and radius of the boundary circle (disk and complement
    /// kinds only).
    Complex center() const { return -B / A; }
    double radius() const {
        double r2 = (std::norm(B) - A * C) / (A * A);
        return std::sqrt(std::max(0.0, r2));
    }

    /// Signed Euclidean depth of a finite point inside a half-plane
    /// region (negative inside), valid for the HalfPlane kind.
    double halfplane_depth(Complex p) const {
        return (2.0 * (std::conj(B) * p).real() + C) / (2.0 * std::abs(B));
    }

    BoundaryDisk transformed(const MoebiusTransform& M) const {
        MoebiusTransform N = M.inverse();
        // H' = N^* H N with H = [[A, B], [conj(B), C]].
        Complex h11 = std::conj(N.a) * (A * N.a + B * N.c) + std::conj(N.c) * (std::conj(B) * N.a + C * N.c);
        Complex h12 = std::conj(N.a) * (A * N.b + B * N.d) + std::conj(N.c) * (std::conj(B) * N.b + C * N.d);
        Complex h22 = std::conj(N.b) * (A * N.b + B * N.d) + std::conj(N.d) * (std::conj(B) * N.b + C * N.d);
        return BoundaryDisk(h11.real(), h12, h22.real());
    }
};

/// Shadow of a cone: the open round disk (or complement / half-plane) of
/// endpoints of rays from the vertex inside the cone.
inline BoundaryDisk cone_shadow(const Cone& cone) {
    TangentVectorH3 u = cone.axis.normalized();
    // In the frame based at j the shadow of C(j, u, theta) is the
    // stereographic image of the spherical cap { w . u > cos(theta) }.
    double ct = std::cos(cone.angle);
    BoundaryDisk at_j(ct - u.dir[2], -Complex(u.dir[0], u.dir[1]), u.dir[2] + ct);
    MoebiusTransform M = frame_at(cone.vertex);
    // The region in the original frame is the pullback { x : M x in S_j }.
    MoebiusTransform Minv = M.inverse();
    return at_j.transformed(Minv);
}

/// Euclidean clearance of closure(inner) inside outer: the distance from
/// closure(inner) to the complement of outer, negative (or -inf) when the
/// containment fails.
inline double signed_clearance(const BoundaryDisk& inner, const BoundaryDisk& outer) {
    constexpr double kFail = -std::numeric_limits<double>::infinity();
    DiskKind ki = inner.kind();
    DiskKind ko = outer.kind();

    if (ki == DiskKind::Disk) {
        Complex ci = inner.center();
        double ri = inner.radius();
        switch (ko) {
            case DiskKind::Disk:
                return outer.radius() - (std::abs(ci - outer.center()) + ri);
            case DiskKind::DiskComplement:
                return std::abs(ci - outer.center()) - ri - outer.radius();
            case DiskKind::HalfPlane:
                return -outer.halfplane_depth(ci) - ri;
        }
    }
    if (ki == DiskKind::DiskComplement) {
        if (ko != DiskKind::DiskComplement) return kFail;
        // closure(C \ disk_i) inside (C \ closed disk_o) iff the closed
        // outer circle sits strictly inside the open inner one.
        return inner.radius() - (std::abs(inner.center() - outer.center()) + outer.radius());
    }
    // ki == HalfPlane
    if (ko == DiskKind::Disk) return kFail;
    if (ko == DiskKind::DiskComplement) {
        // The closed half-plane must avoid the closed outer disk.
        return inner.halfplane_depth(outer.center()) - outer.radius();
    }
    // half-plane in half-plane: requires parallel, same-side normals
    Complex ni = inner.B / std::abs(inner.B);
    Complex no = outer.B / std::abs(outer.B);
    if (std::abs(ni - no) > 1e-9) return kFail;
    return inner.C / (2.0 * std::abs(inner.B)) - outer.C / (2.0 * std::abs(outer.B));
}

/// True iff the closure of inner's shadow lies in outer's shadow with
/// Euclidean clearance >= margin (strictly inside at margin 0).
inline bool shadows_nested(const Cone& inner, const Cone& outer, double margin) {
    if (margin < 0.0) throw std::invalid_argument("shadows_nested: negative margin");
    double cl = signed_clearance(cone_shadow(inner), cone_shadow(outer));
    return cl > 0.0 && cl >= margin;
}

}  // namespace pleatbend
