#pragma once

#include <array>

#include "pleatbend/geodesic.hpp"

namespace pleatbend {

/// Pair-of-pants representation: three loxodromic generators with
/// X0 X1 X2 = +-id, cuff i having complex translation length 2 hl_i,
/// together with the three common perpendiculars (eta_k is orthogonal to
/// the axes of X_{k-1} and X_{k+1}) used for half-length and twist-bend
/// measurements.  Normalized so the axis of X0 is (0, infinity) with the
/// foot of eta_1 at (0, 1) and eta_1 in the vertical plane over R.
struct PantsRep {
    std::array<MoebiusTransform, 3> cuff;
    std::array<OrientedGeodesic, 3> eta;
};

/// Half-turn about the geodesic with endpoints p and q (closed form).
MoebiusTransform half_turn_about(Complex p, Complex q);

/// Build the normalized pants representation from three half-lengths
/// (Re hl_i > 0 required).  Throws on degenerate (numerically parabolic)
/// data or when no geometric branch reproduces the inputs.
PantsRep build_pants(const ComplexLength& hl0, const ComplexLength& hl1, const ComplexLength& hl2);

/// Half-length of cuff i measured from the three cuff images per the
/// definition: the complex distance d_{gamma_i}(eta_{i-1}, eta_{i+1})
/// between the common perpendiculars of the axes.
ComplexLength measure_half_length(const std::array<MoebiusTransform, 3>& cuffs, int i);

}  // namespace pleatbend
