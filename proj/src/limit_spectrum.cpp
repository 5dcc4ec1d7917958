#include "gevd/limit_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "gevd/detail/numeric.hpp"

namespace gevd {

SupportInterval support_endpoints(const AspectRatios& r) {
    r.validate();
    const double a = r.c + r.c1 - r.c * r.c1;
    const double s = std::sqrt(a);
    const double d = 1.0 - r.c1;
    SupportInterval out;
    out.b1 = ((1.0 - s) / d) * ((1.0 - s) / d);
    out.b2 = ((1.0 + s) / d) * ((1.0 + s) / d);
    if (r.c == 1.0) out.b1 = 0.0;
    return out;
}

DensityValue limit_density(double x, const AspectRatios& r) {
    r.validate();
    if (x < 0.0) throw std::domain_error("limit_density: x must be >= 0");
    DensityValue out;
    out.atom_at_zero = std::max(0.0, 1.0 - 1.0 / r.c);
    const SupportInterval s = support_endpoints(r);
    if (x < s.b1 || x > s.b2) return out;
    const double rad = (x - s.b1) * (s.b2 - x);
    if (rad <= 0.0 || x == 0.0) return out;
    out.density = (1.0 - r.c1) * std::sqrt(rad) / (2.0 * M_PI * x * (x * r.c1 + r.c));
    return out;
}

namespace {

// Integral of the continuous part over [b1, x_hi] in the angle variable
// theta, where x = b1 + (b2-b1) sin^2(theta).  The Jacobian cancels the
// square-root edge factors, leaving a bounded smooth integrand.
double bulk_mass_below(double x_hi, const AspectRatios& r, const SupportInterval& s) {
    if (x_hi <= s.b1) return 0.0;
    const double width = s.b2 - s.b1;
    const double frac = std::min(1.0, (x_hi - s.b1) / width);
    const double theta_hi = std::asin(std::sqrt(frac));
    const double scale = (1.0 - r.c1) * width * width / (4.0 * M_PI);
    auto integrand = [&](double th) {
        const double st = std::sin(th);
        const double x = s.b1 + width * st * st;
        if (x <= 0.0) return 0.0;
        const double s2 = std::sin(2.0 * th);
        return scale * s2 * s2 / (x * (x * r.c1 + r.c));
    };
    return detail::integrate_adaptive(integrand, 0.0, theta_hi, 1e-12);
}

}  // namespace

double limit_cdf(double x, const AspectRatios& r) {
    r.validate();
    if (x < 0.0) throw std::domain_error("limit_cdf: x must be >= 0");
    const SupportInterval s = support_endpoints(r);
    const double atom = std::max(0.0, 1.0 - 1.0 / r.c);
    if (x >= s.b2) return atom + bulk_mass_below(s.b2, r, s);
    return atom + bulk_mass_below(x, r, s);
}

EdfResult edf_and_ks(const EmpiricalSpectrum& spec, const AspectRatios& r) {
    if (spec.values.empty()) throw std::domain_error("edf_and_ks: empty spectrum");
    auto ascending = std::make_shared<std::vector<double>>(spec.values.rbegin(), spec.values.rend());
    if (!std::is_sorted(ascending->begin(), ascending->end()))
        throw std::domain_error("edf_and_ks: spectrum must be sorted");

    const double n = static_cast<double>(ascending->size());
    EdfResult out;
    out.edf = [ascending, n](double x) {
        const auto it = std::upper_bound(ascending->begin(), ascending->end(), x);
        return static_cast<double>(it - ascending->begin()) / n;
    };

    double ks = 0.0;
    for (std::size_t i = 0; i < ascending->size(); ++i) {
        const double F = limit_cdf((*ascending)[i], r);
        const double above = static_cast<double>(i + 1) / n - F;
        const double below = F - static_cast<double>(i) / n;
        ks = std::max({ks, std::abs(above), std::abs(below)});
    }
    out.ks = ks;
    return out;
}

}  // namespace gevd
