#pragma once

#include <random>

#include "pleatbend/geodesic.hpp"

namespace pbtest {

using namespace pleatbend;

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Complex random_complex(std::mt19937_64& g, double scale = 1.0) {
    return Complex(uniform(g, -scale, scale), uniform(g, -scale, scale));
}

/// Random element of PSL(2,C) with entries O(scale); always invertible.
inline MoebiusTransform random_moebius(std::mt19937_64& g, double scale = 1.0) {
    for (;;) {
        Complex a = random_complex(g, scale), b = random_complex(g, scale);
        Complex c = random_complex(g, scale), d = random_complex(g, scale);
        if (std::abs(a * d - b * c) > 1e-3) return MoebiusTransform(a, b, c, d);
    }
}

inline H3Point random_h3(std::mt19937_64& g, double spread = 2.0) {
    return H3Point(random_complex(g, spread), std::exp(uniform(g, -1.5, 1.5)));
}

inline Vec3 random_direction(std::mt19937_64& g) {
    for (;;) {
        Vec3 v{uniform(g, -1, 1), uniform(g, -1, 1), uniform(g, -1, 1)};
        double n = norm(v);
        if (n > 0.1 && n < 1.0) return {v[0] / n, v[1] / n, v[2] / n};
    }
}

inline OrientedGeodesic random_geodesic(std::mt19937_64& g, double scale = 2.0) {
    for (;;) {
        Complex u = random_complex(g, scale), v = random_complex(g, scale);
        if (std::abs(u - v) > 0.2)
            return OrientedGeodesic(BoundaryPoint(u), BoundaryPoint(v));
    }
}

inline MoebiusTransform random_loxodromic(std::mt19937_64& g) {
    OrientedGeodesic axis = random_geodesic(g);
    Complex l(uniform(g, 0.3, 3.0), uniform(g, -2.5, 2.5));
    return translation_along_axis(axis, l);
}

}  // namespace pbtest
