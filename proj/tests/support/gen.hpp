#pragma once

#include <random>

#include "singline/schubert.hpp"

namespace singline::testing {

/// Random class homogeneous of degree `deg` with coefficients in [-lim, lim].
inline CohClass random_homogeneous(std::mt19937& rng, int deg, int lim = 5) {
    std::uniform_int_distribution<int> coeff(-lim, lim);
    CohClass out;
    for (Schubert b : kBasis) {
        if (degree(b) == deg) {
            out += Scalar(coeff(rng)) * CohClass(b);
        }
    }
    return out;
}

/// Random class in all degrees, with small rational coefficients.
inline CohClass random_class(std::mt19937& rng, int lim = 5) {
    std::uniform_int_distribution<int> num(-lim, lim);
    std::uniform_int_distribution<int> den(1, 4);
    CohClass out;
    for (Schubert b : kBasis) {
        Scalar c(num(rng), den(rng));
        c.canonicalize();
        out += c * CohClass(b);
    }
    return out;
}

}  // namespace singline::testing
