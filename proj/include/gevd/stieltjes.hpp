#pragma once

// Stieltjes-transform machinery for sample covariance limits with an
// arbitrary discrete population spectrum H.  Central object: the inverse
// map of the companion transform,
//
//     x(m) = -1/m + c * integral( t / (1 + t m) dH(t) ),
//
// whose increasing stretches (over admissible real m) sweep out the
// complement of the limiting support.  On top of it: support scanning,
// mass at zero, the spike-visibility function g, its threshold g(t)=1,
// and the image of a visible population spike.  This path is independent
// of the closed forms in phase_transition.hpp and is used to cross-check
// them.

#include <utility>
#include <vector>

#include "gevd/types.hpp"

namespace gevd {

// Finitely supported probability measure: weights sum to 1, locations >= 0.
struct DiscreteMeasure {
    struct Atom {
        double weight;
        double location;
    };
    std::vector<Atom> atoms;

    void validate() const;
    double max_location() const;
    double min_positive_location() const;
    double mass_at(double location) const;

    static DiscreteMeasure point_mass(double location) { return DiscreteMeasure{{{1.0, location}}}; }
};

struct RealInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// x(m) and dx/dm.  m must be nonzero and -1/m must avoid the atoms of H
// (relative pole tolerance 1e-12 on |1 + t m|).
std::pair<double, double> x_map(double m_val, double c, const DiscreteMeasure& H);

// Maximal intervals of x outside the limiting support, intersected with
// `search`.  Scans every m-window between pole asymptotes with
// `grid_points` nodes, bisects the sign changes of dx/dm, and maps the
// increasing stretches through x(m).
std::vector<RealInterval> support_scan(double c, const DiscreteMeasure& H, RealInterval search,
                                       int grid_points);

// Limiting mass at zero: H(0) when c(1-H(0)) <= 1, otherwise 1 - 1/c.
double mass_at_zero(double c, const DiscreteMeasure& H);

// g(t) = c * integral( t'^2 / (t'-t)^2 dH(t') ); a spike at t is visible
// iff g(t) < 1.
double g_general(double t, double c, const DiscreteMeasure& H);

enum class ThresholdSide { right };

// Solves g(t) = 1 right of the support of H by bisection; |g(t*)-1| <= 1e-10.
double g_threshold(double c, const DiscreteMeasure& H, ThresholdSide side = ThresholdSide::right);

// Limit of the sample eigenvalues caused by a visible population spike at
// t_prime:  t' (1 + c * integral( t / (t'-t) dH(t) )).
double spike_prediction(double t_prime, double c, const DiscreteMeasure& H);

// Stieltjes transform of the Marchenko-Pastur law with ratio c1 on
// (0, (1-sqrt(c1))^2], real branch.
double mh1_stieltjes(double x, double c1);

// Closed form of g for H = spectrum of an inverted MP(c1) sample covariance;
// valid for t > (1-sqrt(c1))^-2.
double g_closed(double t, double c, double c1);

// Equal-weight quantile discretization of the MP(c1) law with k atoms, and
// the corresponding inverted measure (atom locations mapped t -> 1/t).
DiscreteMeasure mp_quantile_measure(double c1, int k);
DiscreteMeasure inverse_mp_measure(double c1, int k);

}  // namespace gevd
