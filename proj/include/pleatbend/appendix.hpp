#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pleatbend/cone.hpp"
#include "pleatbend/geodesic.hpp"

namespace pleatbend {

/// Monte-Carlo verification report for one of the appendix lemmas: the
/// left side of the bound is checked against (fitted constant) x right
/// side over random admissible inputs.
struct LemmaReport {
    std::string name;
    long trials = 0;
    double fitted_constant = 0.0;  // max LHS/RHS ratio seen
    double worst_ratio = 0.0;
    long violations = 0;           // trials violating a hard cap / exact bound
    bool pass = true;
    std::string note;
};

struct AppendixReport {
    std::vector<LemmaReport> lemmas;
    bool pass = true;

    const LemmaReport& lemma(const std::string& name) const;
};

struct AppendixConfig {
    long trials = 10000;
    uint64_t seed = 1;
    /// Caps on the fitted constants (roughly 2x the measured values); a
    /// fit above the cap fails the lemma's report.
    double cap_a2 = 4.0;
    double cap_a3 = 4.0;
    double cap_a4 = 13.0;
    double cap_a5 = 4.0;
};

/// Monte-Carlo verification of Lemmas A.1-A.5 (and the two-rotation
/// comparison used in the nesting proof).  Lemma A.5's angle bound
/// |eps1| <= (pi/2)|theta||eps| is asserted exactly; the others report
/// fitted constants.
AppendixReport verify_appendix_bounds(long trials, uint64_t seed);
AppendixReport verify_appendix_bounds(const AppendixConfig& cfg);

/// Largest perturbation delta(m0) for which every sampled tangent vector
/// within delta of {e^-m j, -j} (m >= m0) still has its pi/2-cone shadow
/// nested in the unit disk; measured by bisection (Lemma A.1).
double measure_nesting_delta(double m0, long samples_per_level, uint64_t seed);

/// Intersection-angle of R_g^theta(L) with L for a geodesic g crossing
/// the vertical axis at height tc with angle eps (both in the vertical
/// plane over R).  Exposed for the Lemma A.5 oracle.
double rotated_axis_angle(double tc, double eps, double theta);

}  // namespace pleatbend
