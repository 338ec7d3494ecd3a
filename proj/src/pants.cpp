#include "pleatbend/pants.hpp"

namespace pleatbend {

MoebiusTransform half_turn_about(Complex p, Complex q) {
    // trace-zero involution fixing p and q
    Complex s = Complex(0.0, 1.0) / (p - q);
    return MoebiusTransform(s * (p + q), -2.0 * s * p * q, 2.0 * s, -s * (p + q));
}

namespace {

/// eta_k is the common orthogonal of the axes of cuffs k-1 and k+1,
/// oriented from axis k-1 to axis k+1 (indices mod 3).
OrientedGeodesic eta_line(const std::array<OrientedGeodesic, 3>& axes, int k) {
    return common_orthogonal(axes[(k + 2) % 3], axes[(k + 1) % 3]).geodesic;
}

}  // namespace

ComplexLength measure_half_length(const std::array<MoebiusTransform, 3>& cuffs, int i) {
    std::array<OrientedGeodesic, 3> axes{axis_of(cuffs[0]), axis_of(cuffs[1]), axis_of(cuffs[2])};
    // eta_{i-1} ends on axis i while eta_{i+1} starts there; reverse the
    // former so both tangents point off axis i to the same side (into
    // the hexagon) and the twist angle carries no pi offset.
    OrientedGeodesic eta_prev = eta_line(axes, (i + 2) % 3).reversed();
    OrientedGeodesic eta_next = eta_line(axes, (i + 1) % 3);
    return complex_distance(eta_prev, eta_next);
}

PantsRep build_pants(const ComplexLength& hl0, const ComplexLength& hl1, const ComplexLength& hl2) {
    for (const ComplexLength* hl : {&hl0, &hl1, &hl2})
        if (!(hl->re > 1e-9))
            throw std::invalid_argument("build_pants: half-lengths need positive real part");

    const Complex h0 = hl0.value(), h1 = hl1.value(), h2 = hl2.value();
    const Complex w2 = std::exp(-h0);
    const Complex c1 = std::cosh(h1), c2 = std::cosh(h2);

    // eta_1 = (-1, 1), eta_2 = (-w2, w2); the half-turn products give
    // X0 = R(eta_1) R(eta_2) = z -> e^{2 hl0} z.  The unknown eta_0 =
    // (p, q) is pinned by the trace conditions tr X1 = +-2 cosh(hl1),
    // tr X2 = +-2 cosh(hl2), which are linear in u = pq and v = p - q.
    MoebiusTransform Re1 = half_turn_about(Complex(-1.0), Complex(1.0));
    MoebiusTransform Re2 = half_turn_about(-w2, w2);

    auto matches = [](const ComplexLength& a, const ComplexLength& b) {
        return std::abs(a.re - b.re) <= 1e-8 * std::max(1.0, std::abs(b.re)) &&
               std::abs(principal_angle(a.im - b.im)) <= 1e-8;
    };

    for (int branch = 0; branch < 8; ++branch) {
        double s1 = (branch & 1) ? -1.0 : 1.0;
        double s2 = (branch & 2) ? -1.0 : 1.0;
        Complex denom = s1 * c1 * w2 - s2 * c2;
        if (std::abs(denom) < 1e-12) continue;
        Complex v = (1.0 - w2 * w2) / denom;
        Complex u = 1.0 + s2 * c2 * v;
        Complex s = std::sqrt(v * v + 4.0 * u);
        if (branch & 4) s = -s;
        Complex p = (s + v) / 2.0, q = (s - v) / 2.0;
        if (std::abs(p - q) < 1e-12) continue;

        MoebiusTransform Re0 = half_turn_about(p, q);
        std::array<MoebiusTransform, 3> X{Re1 * Re2, Re2 * Re0, Re0 * Re1};

        // The relation X0 X1 X2 = id holds identically; the branch is
        // accepted when the definitional measurement reproduces all
        // three inputs (translation lengths alone do not pin the signs).
        bool ok = true;
        std::array<const ComplexLength*, 3> want{&hl0, &hl1, &hl2};
        for (int i = 0; i < 3 && ok; ++i) {
            Classification cls = classify(X[i]);
            if (cls.kind != IsometryKind::Loxodromic) {
                ok = false;
                break;
            }
            ComplexLength m;
            try {
                m = measure_half_length(X, i);
            } catch (const std::domain_error&) {
                ok = false;
                break;
            }
            ok = matches(m, *want[i]);
        }
        if (!ok) continue;

        PantsRep rep;
        rep.cuff = X;
        std::array<OrientedGeodesic, 3> axes{axis_of(X[0]), axis_of(X[1]), axis_of(X[2])};
        for (int k = 0; k < 3; ++k) rep.eta[k] = eta_line(axes, k);
        return rep;
    }
    throw std::domain_error("build_pants: no geometric branch realizes the given half-lengths");
}

}  // namespace pleatbend
