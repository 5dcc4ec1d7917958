#pragma once

// Limiting spectral law of the signal-free whitened sample covariance
// (multivariate F matrix).  On (0,inf) the law has density
//
//     f(x) = (1-c1) sqrt((x-b1)(b2-x)) / (2 pi x (x c1 + c)),   b1 <= x <= b2,
//
// plus an atom of mass max(0, 1-1/c) at x = 0, where
//
//     b1 = ((1 - sqrt(a)) / (1-c1))^2,  b2 = ((1 + sqrt(a)) / (1-c1))^2,
//     a  = 1 - (1-c)(1-c1) = c + c1 - c c1.
//
// As c1 -> 0 the law reduces to Marchenko-Pastur with ratio c.

#include <functional>
#include <utility>

#include "gevd/types.hpp"

namespace gevd {

// Endpoints of the continuous bulk.  b1 = 0 exactly when c = 1.
SupportInterval support_endpoints(const AspectRatios& r);

struct DensityValue {
    double density = 0.0;       // continuous part at x
    double atom_at_zero = 0.0;  // mass of the point mass at 0
};

// Density of the continuous part at x >= 0 together with the atom mass.
DensityValue limit_density(double x, const AspectRatios& r);

// Distribution function: atom + integral of the continuous part over [b1, x].
// The endpoint square-root singularities are removed with the substitution
// x = b1 + (b2-b1) sin^2(theta) before quadrature.
double limit_cdf(double x, const AspectRatios& r);

// Empirical distribution function of a spectrum plus its Kolmogorov-Smirnov
// distance to the limit law, evaluated at every jump from both sides.
struct EdfResult {
    std::function<double(double)> edf;
    double ks = 0.0;
};

EdfResult edf_and_ks(const EmpiricalSpectrum& spec, const AspectRatios& r);

}  // namespace gevd
