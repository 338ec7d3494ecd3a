#include "pleatbend/appendix.hpp"

#include <algorithm>
#include <random>

#include "pleatbend/parallel.hpp"

namespace pleatbend {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

/// In-plane geodesic (vertical plane over R) crossing the vertical axis
/// at height tc with angle phi in (0, pi) measured from the upward axis
/// direction; endpoints tc (cos phi +- 1)/sin phi on the real line.
OrientedGeodesic inplane_crossing(double tc, double phi) {
    double sp = std::sin(phi), cp = std::cos(phi);
    double e1 = tc * (cp - 1.0) / sp;
    double e2 = tc * (cp + 1.0) / sp;
    return OrientedGeodesic(BoundaryPoint(Complex(e1)), BoundaryPoint(Complex(e2)));
}

/// Tangent vector with dist_th3 to {e^-m j, -j} at most delta; the
/// height component is additionally capped so the height stays positive.
TangentVectorH3 perturbed_down_vector(Rng& g, double m, double delta) {
    double hcap = std::min(0.98 * delta, 0.95);
    double t = std::exp(-m) * (1.0 + uniform(g, -1.0, 1.0) * hcap);
    double r = uniform(g, 0.0, 0.98) * delta;
    double th = uniform(g, 0.0, 2.0 * kPi);
    Complex z = r * std::exp(Complex(0.0, th));
    double alpha = uniform(g, 0.0, 0.98) * std::min(delta, kPi / 2.0);
    double psi = uniform(g, 0.0, 2.0 * kPi);
    Vec3 dir{std::sin(alpha) * std::cos(psi), std::sin(alpha) * std::sin(psi), -std::cos(alpha)};
    return TangentVectorH3(H3Point(z, t), dir);
}

TangentVectorH3 reference_down(double m) {
    return TangentVectorH3(H3Point(Complex(0.0), std::exp(-m)), {0.0, 0.0, -1.0});
}

double point_to_geodesic(const H3Point& p, const MoebiusTransform& std_frame) {
    H3Point q = poincare_extend(std_frame, p);
    return std::asinh(std::abs(q.z) / q.t);
}

/// Hausdorff distance between the chords h1 cap D_r0(j) and h2 cap
/// D_r0(j); returns a negative value if either chord is empty.
double chord_hausdorff(const OrientedGeodesic& h1, const OrientedGeodesic& h2, double r0) {
    MoebiusTransform m1 = standardizer(h1), m2 = standardizer(h2);
    auto chord = [&](const MoebiusTransform& M) -> std::pair<double, double> {
        H3Point q = poincare_extend(M, H3Point::j());
        double disc = q.t * q.t * std::cosh(r0) * std::cosh(r0) - std::norm(q.z) - q.t * q.t;
        if (disc <= 0.0) return {1.0, -1.0};
        double root = std::sqrt(disc);
        return {std::log(q.t * std::cosh(r0) - root), std::log(q.t * std::cosh(r0) + root)};
    };
    auto [a1, b1] = chord(m1);
    auto [a2, b2] = chord(m2);
    if (a1 > b1 || a2 > b2) return -1.0;

    const int kSamples = 33;
    double h = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        double s1 = a1 + (b1 - a1) * i / (kSamples - 1);
        H3Point p1 = poincare_extend(m1.inverse(), H3Point(Complex(0.0), std::exp(s1)));
        h = std::max(h, point_to_geodesic(p1, m2));
        double s2 = a2 + (b2 - a2) * i / (kSamples - 1);
        H3Point p2 = poincare_extend(m2.inverse(), H3Point(Complex(0.0), std::exp(s2)));
        h = std::max(h, point_to_geodesic(p2, m1));
    }
    return h;
}

/// Geodesic from boundary point x0 through the interior point p.
OrientedGeodesic geodesic_through(const BoundaryPoint& x0, const H3Point& p) {
    // N sends x0 to infinity; geodesics through x0 become vertical lines.
    MoebiusTransform N = x0.is_infinity()
                             ? MoebiusTransform::identity()
                             : MoebiusTransform(Complex(0.0), Complex(1.0), x0.w, -x0.z);
    H3Point q = poincare_extend(N, p);
    BoundaryPoint other = apply_boundary(N.inverse(), BoundaryPoint(q.z));
    return OrientedGeodesic(other, x0);
}

H3Point point_at_distance(Rng& g, double rho) {
    for (;;) {
        Vec3 w{uniform(g, -1, 1), uniform(g, -1, 1), uniform(g, -1, 1)};
        double n = norm(w);
        if (n < 0.1) continue;
        w = (1.0 / n) * w;
        BoundaryPoint fwd = endpoint_of_ray(TangentVectorH3(H3Point::j(), w));
        BoundaryPoint bwd = endpoint_of_ray(TangentVectorH3(H3Point::j(), {-w[0], -w[1], -w[2]}));
        OrientedGeodesic G(bwd, fwd);
        return point_at(G, arc_parameter(G, H3Point::j()) + rho);
    }
}

struct TrialLemma {
    double ratio = 0.0;
    bool violation = false;
};

LemmaReport reduce(const std::string& name, const std::vector<TrialLemma>& trials, double cap,
                   const std::string& note = "") {
    LemmaReport rep;
    rep.name = name;
    rep.trials = static_cast<long>(trials.size());
    for (const TrialLemma& t : trials) {
        rep.fitted_constant = std::max(rep.fitted_constant, t.ratio);
        if (t.violation) ++rep.violations;
    }
    rep.worst_ratio = rep.fitted_constant;
    rep.pass = rep.violations == 0 && rep.fitted_constant <= cap;
    rep.note = note;
    return rep;
}

/// Deterministic corner scan for Lemma A.4 at a given ball radius.  The
/// stabilizer of j is unitary, so the Frobenius norm is conjugation
/// invariant and the shared endpoint can be put at 0 with the first
/// geodesic's far endpoint on the positive real axis.
double lemma_a4_corner_scan(double r0) {
    double worst = 0.0;
    std::vector<double> radii;
    for (int i = 0; i <= 20; ++i) radii.push_back(0.05 * std::pow(800.0, i / 20.0));
    BoundaryPoint zero{Complex(0.0)};
    for (double y1 : radii) {
        OrientedGeodesic h1(zero, BoundaryPoint(Complex(y1)));
        for (double y2 : radii) {
            for (int k = 0; k < 16; ++k) {
                double phi = 2.0 * kPi * k / 16.0;
                Complex e2 = y2 * std::exp(Complex(0.0, phi));
                if (std::abs(e2 - Complex(y1)) < 1e-9) continue;
                OrientedGeodesic h2(zero, BoundaryPoint(e2));
                double d = chord_hausdorff(h1, h2, r0);
                if (d < 1e-6) continue;
                for (double eps : {kPi, 1.5, 0.5, 0.05}) {
                    MoebiusTransform prod =
                        rotation_about_axis(h1, eps) * rotation_about_axis(h2, -eps);
                    worst = std::max(worst, distance_to_identity(prod) / (d * eps));
                }
            }
        }
    }
    return worst;
}

/// Deterministic corner scan for Lemma A.3 at small rotation angle and
/// pure perturbation directions.
double lemma_a3_corner_scan() {
    double worst = 0.0;
    const double eps = 0.04, delta = 0.04;
    for (double r : {1.0, 2.0, 3.0, 4.0, 5.0}) {
        TangentVectorH3 ref = reference_down(r);
        std::vector<TangentVectorH3> perturbed;
        double t0 = std::exp(-r);
        perturbed.emplace_back(H3Point(Complex(0.0), t0 * (1 + delta * 0.98)), Vec3{0, 0, -1});
        perturbed.emplace_back(H3Point(Complex(0.0), t0 * (1 - delta * 0.98)), Vec3{0, 0, -1});
        perturbed.emplace_back(H3Point(Complex(delta * 0.98, 0.0), t0), Vec3{0, 0, -1});
        perturbed.emplace_back(H3Point(Complex(0.0, delta * 0.98), t0), Vec3{0, 0, -1});
        double a = delta * 0.98;
        perturbed.emplace_back(H3Point(Complex(0.0), t0), Vec3{std::sin(a), 0, -std::cos(a)});
        perturbed.emplace_back(H3Point(Complex(0.0), t0), Vec3{0, std::sin(a), -std::cos(a)});
        perturbed.push_back(ref);
        for (int iu = 1; iu <= 9; ++iu) {
            double tc = std::exp(-0.1 * iu * r);
            for (int ip = 1; ip <= 12; ++ip) {
                double phi = kPi / 2.0 * ip / 12.0;
                MoebiusTransform R = rotation_about_axis(inplane_crossing(tc, phi), eps);
                for (const TangentVectorH3& v : perturbed) {
                    double d_actual = dist_th3(v, ref);
                    double lhs = dist_th3(differential(R, v), ref);
                    worst = std::max(worst, lhs / (d_actual + eps));
                }
            }
        }
    }
    return worst;
}

/// Deterministic corner scan for Lemma A.2: pure Lie-algebra directions
/// for the near-identity isometry against pure perturbation directions.
double lemma_a2_corner_scan() {
    double worst = 0.0;
    const double s = 0.1, delta = 0.1;
    std::vector<MoebiusTransform> gens;
    for (int k = 0; k < 8; ++k) {
        Complex da(0.0), db(0.0), dc(0.0), dd(0.0);
        Complex unit = (k % 2 == 0) ? Complex(s, 0.0) : Complex(0.0, s);
        if (k / 2 == 0) { da = unit; dd = -unit; }
        if (k / 2 == 1) db = unit;
        if (k / 2 == 2) dc = unit;
        if (k / 2 == 3) { da = unit; dd = unit; }
        gens.emplace_back(1.0 + da, db, dc, 1.0 + dd);
    }
    for (int im = 0; im <= 10; ++im) {
        double m = 0.01 + 8.0 * im / 10.0;
        TangentVectorH3 ref = reference_down(m);
        double t0 = std::exp(-m);
        std::vector<TangentVectorH3> perturbed;
        perturbed.emplace_back(H3Point(Complex(0.0), t0 * (1 + 0.98 * delta)), Vec3{0, 0, -1});
        perturbed.emplace_back(H3Point(Complex(0.0), t0 * (1 - 0.98 * delta)), Vec3{0, 0, -1});
        for (int iz = 0; iz < 4; ++iz)
            perturbed.emplace_back(
                H3Point(0.98 * delta * std::exp(Complex(0.0, kPi * iz / 2.0)), t0), Vec3{0, 0, -1});
        double a = 0.98 * delta;
        for (int ia = 0; ia < 4; ++ia) {
            double psi = kPi * ia / 2.0;
            perturbed.emplace_back(H3Point(Complex(0.0), t0),
                                   Vec3{std::sin(a) * std::cos(psi), std::sin(a) * std::sin(psi),
                                        -std::cos(a)});
        }
        perturbed.push_back(ref);
        for (const MoebiusTransform& iso : gens) {
            double gn = distance_to_identity(iso);
            for (const TangentVectorH3& v : perturbed) {
                double denom = dist_th3(v, ref) + gn;
                if (denom < 1e-8) continue;
                worst = std::max(worst, dist_th3(differential(iso, v), ref) / denom);
            }
        }
    }
    return worst;
}

}  // namespace

double rotated_axis_angle(double tc, double eps, double theta) {
    OrientedGeodesic g = inplane_crossing(tc, eps);
    MoebiusTransform R = rotation_about_axis(g, theta);
    TangentVectorH3 u(H3Point(Complex(0.0), tc), {0.0, 0.0, -1.0});
    TangentVectorH3 v = differential(R, u);
    return vector_angle(u.dir, v.dir);
}

double measure_nesting_delta(double m0, long samples_per_level, uint64_t seed) {
    Cone outer(H3Point::j(), TangentVectorH3(H3Point::j(), {0.0, 0.0, -1.0}), kPi / 2.0);
    BoundaryDisk outer_shadow = cone_shadow(outer);

    auto nested = [&](const TangentVectorH3& v) {
        Cone inner(v.base, v, kPi / 2.0);
        return signed_clearance(cone_shadow(inner), outer_shadow) > 0.0;
    };

    // The failure boundary sits at the corners of the perturbation box
    // (all three D_TH3 components at full size); scan azimuth alignments
    // and heights deterministically, then confirm with random samples.
    auto corners_ok = [&](double delta) {
        double hcap = std::min(0.98 * delta, 0.95);
        double tilt = std::min(0.98 * delta, kPi / 2.0);
        for (int im = 0; im <= 12; ++im) {
            double m = m0 + 6.0 * im / 12.0;
            for (double hsign : {-1.0, 1.0}) {
                double t = std::exp(-m) * (1.0 + hsign * hcap);
                for (int iz = 0; iz < 12; ++iz) {
                    Complex z = 0.98 * delta * std::exp(Complex(0.0, 2.0 * kPi * iz / 12.0));
                    for (int ia = 0; ia < 12; ++ia) {
                        double psi = 2.0 * kPi * ia / 12.0;
                        Vec3 dir{std::sin(tilt) * std::cos(psi), std::sin(tilt) * std::sin(psi),
                                 -std::cos(tilt)};
                        if (!nested(TangentVectorH3(H3Point(z, t), dir))) return false;
                    }
                }
            }
        }
        return true;
    };
    auto mc_ok = [&](double delta) {
        Rng g(seed);
        for (long i = 0; i < samples_per_level; ++i) {
            double m = m0 + uniform(g, 0.0, 6.0);
            if (!nested(perturbed_down_vector(g, m, delta))) return false;
        }
        return true;
    };
    auto all_nested = [&](double delta) { return corners_ok(delta) && mc_ok(delta); };

    double lo = 0.0, hi = 1.5;
    if (all_nested(hi)) return hi;
    for (int it = 0; it < 40; ++it) {
        double mid = 0.5 * (lo + hi);
        (all_nested(mid) ? lo : hi) = mid;
    }
    return lo;
}

AppendixReport verify_appendix_bounds(long trials, uint64_t seed) {
    AppendixConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    return verify_appendix_bounds(cfg);
}

const LemmaReport& AppendixReport::lemma(const std::string& name) const {
    for (const auto& l : lemmas)
        if (l.name == name) return l;
    throw std::out_of_range("no such lemma report: " + name);
}

AppendixReport verify_appendix_bounds(const AppendixConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("verify_appendix_bounds: trials >= 1 required");
    AppendixReport report;
    const long n = cfg.trials;

    // Lemma A.1: measured delta(m0) and a verification pass at half the
    // measured threshold.
    {
        double m0 = 1.0;
        double delta_hat = measure_nesting_delta(m0, std::max(200L, n / 20), cfg.seed);
        Cone outer(H3Point::j(), TangentVectorH3(H3Point::j(), {0.0, 0.0, -1.0}), kPi / 2.0);
        BoundaryDisk outer_shadow = cone_shadow(outer);
        std::vector<TrialLemma> out(n);
        parallel_for(n, [&](std::size_t i) {
            Rng g(cfg.seed + 0x9e3779b97f4a7c15ULL * (i + 1));
            double m = m0 + uniform(g, 0.0, 6.0);
            TangentVectorH3 v = perturbed_down_vector(g, m, delta_hat / 2.0);
            Cone inner(v.base, v, kPi / 2.0);
            double cl = signed_clearance(cone_shadow(inner), outer_shadow);
            out[i].violation = cl <= 0.0;
        });
        LemmaReport rep = reduce("A.1", out, 10.0, "fitted constant = measured delta(m0=1)");
        rep.fitted_constant = delta_hat;
        rep.worst_ratio = delta_hat;
        rep.pass = rep.violations == 0 && delta_hat > 1e-3;
        report.lemmas.push_back(rep);
    }

    // Lemma A.2: D(g(v), ref) <= C1 delta + C2 ||g - id||.
    {
        std::vector<TrialLemma> out(n);
        parallel_for(n, [&](std::size_t i) {
            Rng g(cfg.seed + 0xa2b4c6d8e0f1a3b5ULL * (i + 1));
            double m = uniform(g, 0.01, 8.0);
            double delta = uniform(g, 0.0, 0.2);
            TangentVectorH3 v = perturbed_down_vector(g, m, delta);
            Complex a = 1.0 + uniform(g, 0.0, 0.15) * Complex(uniform(g, -1, 1), uniform(g, -1, 1));
            Complex b = uniform(g, 0.0, 0.15) * Complex(uniform(g, -1, 1), uniform(g, -1, 1));
            Complex c = uniform(g, 0.0, 0.15) * Complex(uniform(g, -1, 1), uniform(g, -1, 1));
            Complex d = 1.0 + uniform(g, 0.0, 0.15) * Complex(uniform(g, -1, 1), uniform(g, -1, 1));
            MoebiusTransform iso(a, b, c, d);
            double gn = distance_to_identity(iso);
            if (gn > 0.5) return;
            double d_actual = dist_th3(v, reference_down(m));
            double denom = d_actual + gn;
            if (denom < 1e-8) return;
            double lhs = dist_th3(differential(iso, v), reference_down(m));
            out[i].ratio = lhs / denom;
        });
        LemmaReport rep = reduce("A.2", out, cfg.cap_a2);
        rep.fitted_constant = std::max(rep.fitted_constant, lemma_a2_corner_scan());
        rep.worst_ratio = rep.fitted_constant;
        rep.pass = rep.violations == 0 && rep.fitted_constant <= cfg.cap_a2;
        report.lemmas.push_back(rep);
    }

    // Lemma A.3: D(R_h^eps(v), ref) <= C0 delta + C eps in the small
    // eps0/delta0 regime, plus a deterministic corner scan.
    {
        std::vector<TrialLemma> out(n);
        parallel_for(n, [&](std::size_t i) {
            Rng g(cfg.seed + 0xb3c5d7e9f1a2b4c6ULL * (i + 1));
            double r = uniform(g, 1.0, 5.0);
            double tc = std::exp(-uniform(g, 0.02, 0.98) * r);
            double phi = uniform(g, 0.05, kPi / 2.0);
            OrientedGeodesic h = inplane_crossing(tc, phi);
            double eps = uniform(g, 0.0, 0.05);
            double delta = uniform(g, 0.0, 0.05);
            TangentVectorH3 v = perturbed_down_vector(g, r, delta);
            double d_actual = dist_th3(v, reference_down(r));
            double denom = d_actual + eps;
            if (denom < 1e-8) return;
            MoebiusTransform R = rotation_about_axis(h, eps);
            double lhs = dist_th3(differential(R, v), reference_down(r));
            out[i].ratio = lhs / denom;
        });
        LemmaReport rep = reduce("A.3", out, cfg.cap_a3, "eps0 = delta0 = 0.05 regime");
        rep.fitted_constant = std::max(rep.fitted_constant, lemma_a3_corner_scan());
        rep.worst_ratio = rep.fitted_constant;
        rep.pass = rep.violations == 0 && rep.fitted_constant <= cfg.cap_a3;
        report.lemmas.push_back(rep);
    }

    // Lemma A.4 at r0 = 1 and r0 = 3: ||R_h1^eps R_h2^-eps - id|| <= C d eps.
    for (double r0 : {1.0, 3.0}) {
        double corner = lemma_a4_corner_scan(r0);
        std::vector<TrialLemma> out(n);
        parallel_for(n, [&](std::size_t i) {
            Rng g(cfg.seed + 0xc4d6e8fa0b1c2d3eULL * (i + 1) + static_cast<uint64_t>(r0 * 97));
            Vec3 w{uniform(g, -1, 1), uniform(g, -1, 1), uniform(g, -1, 1)};
            double wn = norm(w);
            if (wn < 0.1) return;
            w = (1.0 / wn) * w;
            BoundaryPoint x0 = endpoint_of_ray(TangentVectorH3(H3Point::j(), w));
            H3Point p1 = point_at_distance(g, uniform(g, 0.0, 0.9 * r0));
            H3Point p2 = point_at_distance(g, uniform(g, 0.0, 0.9 * r0));
            OrientedGeodesic h1 = geodesic_through(x0, p1);
            OrientedGeodesic h2 = geodesic_through(x0, p2);
            double d = chord_hausdorff(h1, h2, r0);
            if (d < 1e-10) return;
            double eps = uniform(g, 1e-3, kPi);
            MoebiusTransform prod = rotation_about_axis(h1, eps) * rotation_about_axis(h2, -eps);
            out[i].ratio = distance_to_identity(prod) / (d * eps);
        });
        std::string name = r0 == 1.0 ? "A.4(r0=1)" : "A.4(r0=3)";
        LemmaReport rep = reduce(name, out, cfg.cap_a4, "fitted constant from corner scan + MC");
        rep.fitted_constant = std::max(rep.fitted_constant, corner);
        rep.worst_ratio = rep.fitted_constant;
        rep.pass = rep.violations == 0 && rep.fitted_constant <= cfg.cap_a4;
        report.lemmas.push_back(rep);
    }

    // Lemma A.5: exact angle bound |eps1| <= (pi/2)|theta||eps| over the
    // full angle range, plus a fitted constant for the D_TH3 smallness in
    // the asymptotic (small eps) regime.
    {
        std::vector<TrialLemma> out(n);
        parallel_for(n, [&](std::size_t i) {
            Rng g(cfg.seed + 0xd5e7f90a1b2c3d4eULL * (i + 1));
            double m = uniform(g, 0.5, 6.0);
            double tc = std::exp(-uniform(g, 0.02, 0.98) * m);
            double eps_full = uniform(g, 1e-4, kPi / 2.0);
            double theta = uniform(g, 0.0, 2.0 * kPi);
            double eps1 = rotated_axis_angle(tc, eps_full, theta);
            out[i].violation = eps1 > (kPi / 2.0) * theta * eps_full + 1e-9;

            double eps = uniform(g, 1e-4, 0.5);
            OrientedGeodesic gg = inplane_crossing(tc, eps);
            MoebiusTransform R = rotation_about_axis(gg, theta);
            double lhs = dist_th3(differential(R, reference_down(m)), reference_down(m));
            out[i].ratio = lhs / eps;
        });
        report.lemmas.push_back(
            reduce("A.5", out, cfg.cap_a5, "violations count the exact (pi/2)|theta||eps| bound"));
    }

    // Two-rotation comparison (the displayed max inequality of the
    // nesting proof).  The display is false for unrestricted rotation
    // angles (two half-turns about separated axes compose to a large
    // translation); it is verified here in the small-angle regime in
    // which the proof uses it.
    {
        std::vector<TrialLemma> out(n);
        parallel_for(n, [&](std::size_t i) {
            Rng g(cfg.seed + 0xe6f80a1b2c3d4e5fULL * (i + 1));
            double m = uniform(g, 0.3, 2.0);
            double mp = m + uniform(g, 0.05, 2.0);
            double mpp = mp + uniform(g, 0.05, 2.0);
            double eps = uniform(g, 1e-3, 0.3);
            double epsp = uniform(g, 1e-3, 0.3);
            double theta = uniform(g, 0.0, 0.2);
            double thetap = uniform(g, 0.0, 0.2);
            OrientedGeodesic h = inplane_crossing(std::exp(-m), eps);
            OrientedGeodesic hp = inplane_crossing(std::exp(-mp), epsp);
            TangentVectorH3 v = reference_down(mpp);
            MoebiusTransform prod = rotation_about_axis(h, theta) * rotation_about_axis(hp, thetap);
            double lhs = dist_th3(differential(prod, v), v);

            double epspp = std::max(eps, epsp);
            OrientedGeodesic hpp = inplane_crossing(std::exp(-m), epspp);
            double rhs = 0.0;
            for (int k = 0; k <= 128; ++k) {
                double t2 = 2.0 * kPi * k / 128.0;
                MoebiusTransform R = rotation_about_axis(hpp, t2);
                rhs = std::max(rhs, dist_th3(differential(R, v), v));
            }
            if (rhs < 1e-12) return;
            out[i].ratio = lhs / rhs;
            out[i].violation = lhs > rhs * (1.0 + 1e-6) + 1e-9;
        });
        report.lemmas.push_back(
            reduce("dist_max", out, 1.0 + 1e-6,
                   "small-angle regime of use; the unrestricted display fails (ratios ~7 at "
                   "theta near pi)"));
    }

    report.pass = true;
    for (const auto& l : report.lemmas) report.pass = report.pass && l.pass;
    return report;
}

}  // namespace pleatbend
