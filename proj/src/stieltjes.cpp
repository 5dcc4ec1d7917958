#include "gevd/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gevd/detail/numeric.hpp"

namespace gevd {

namespace {
constexpr double kPoleTol = 1e-12;
constexpr double kHuge = 1e300;
}  // namespace

void DiscreteMeasure::validate() const {
    if (atoms.empty()) throw std::domain_error("DiscreteMeasure: needs at least one atom");
    double total = 0.0;
    for (const auto& a : atoms) {
        if (!(a.weight > 0.0)) throw std::domain_error("DiscreteMeasure: weights must be positive");
        if (!(a.location >= 0.0))
            throw std::domain_error("DiscreteMeasure: locations must be >= 0");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::domain_error("DiscreteMeasure: weights must sum to 1 (got " +
                                std::to_string(total) + ")");
}

double DiscreteMeasure::max_location() const {
    double m = 0.0;
    for (const auto& a : atoms) m = std::max(m, a.location);
    return m;
}

double DiscreteMeasure::min_positive_location() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& a : atoms)
        if (a.location > 0.0) m = std::min(m, a.location);
    return m;
}

double DiscreteMeasure::mass_at(double location) const {
    double w = 0.0;
    for (const auto& a : atoms)
        if (a.location == location) w += a.weight;
    return w;
}

std::pair<double, double> x_map(double m_val, double c, const DiscreteMeasure& H) {
    H.validate();
    if (!(c > 0.0)) throw std::domain_error("x_map: c must be > 0");
    if (m_val == 0.0) throw std::domain_error("x_map: m must be nonzero");
    double sum_x = 0.0;
    double sum_d = 0.0;
    for (const auto& a : H.atoms) {
        const double tm = a.location * m_val;
        const double denom = 1.0 + tm;
        if (std::abs(denom) <= kPoleTol * std::max(1.0, std::abs(tm)))
            throw std::domain_error("x_map: -1/m hits the atom at t=" +
                                    std::to_string(a.location));
        sum_x += a.weight * a.location / denom;
        const double q = tm / denom;
        sum_d += a.weight * q * q;
    }
    const double x = -1.0 / m_val + c * sum_x;
    const double dx = (1.0 - c * sum_d) / (m_val * m_val);
    return {x, dx};
}

double mass_at_zero(double c, const DiscreteMeasure& H) {
    H.validate();
    if (!(c > 0.0)) throw std::domain_error("mass_at_zero: c must be > 0");
    const double h0 = H.mass_at(0.0);
    if (c * (1.0 - h0) <= 1.0) return h0;
    return 1.0 - 1.0 / c;
}

double g_general(double t, double c, const DiscreteMeasure& H) {
    H.validate();
    if (!(c > 0.0)) throw std::domain_error("g_general: c must be > 0");
    double s = 0.0;
    for (const auto& a : H.atoms) {
        const double d = a.location - t;
        if (std::abs(d) <= kPoleTol * std::max(1.0, a.location))
            throw std::domain_error("g_general: t hits the atom at t=" +
                                    std::to_string(a.location));
        s += a.weight * (a.location / d) * (a.location / d);
    }
    return c * s;
}

double g_threshold(double c, const DiscreteMeasure& H, ThresholdSide) {
    H.validate();
    const double top = H.max_location();
    if (!(top > 0.0)) throw std::domain_error("g_threshold: H has no positive atom");
    const double scale = std::max(top, 1.0);
    const double lo = top + scale * 1e-12;
    double hi = top + scale;
    int grow = 0;
    while (g_general(hi, c, H) >= 1.0) {
        hi = top + (hi - top) * 4.0;
        if (++grow > 120) throw std::runtime_error("g_threshold: g stays >= 1 within search bound");
    }
    const double t_star = detail::bisect([&](double t) { return g_general(t, c, H) - 1.0; },
                                         lo, hi, 1e-16, 400);
    if (std::abs(g_general(t_star, c, H) - 1.0) > 1e-10)
        throw std::runtime_error("g_threshold: bisection did not reach |g-1| <= 1e-10");
    return t_star;
}

double spike_prediction(double t_prime, double c, const DiscreteMeasure& H) {
    H.validate();
    if (!(c > 0.0)) throw std::domain_error("spike_prediction: c must be > 0");
    if (!(t_prime > H.max_location()))
        throw std::domain_error("spike_prediction: t' must lie strictly right of all atoms");
    double s = 0.0;
    for (const auto& a : H.atoms) {
        const double d = t_prime - a.location;
        if (d <= kPoleTol * std::max(1.0, a.location))
            throw std::domain_error("spike_prediction: t' hits the atom at t=" +
                                    std::to_string(a.location));
        s += a.weight * a.location / d;
    }
    return t_prime * (1.0 + c * s);
}

double mh1_stieltjes(double x, double c1) {
    if (!(c1 > 0.0 && c1 < 1.0)) throw std::domain_error("mh1_stieltjes: c1 must lie in (0,1)");
    const double sq = std::sqrt(c1);
    const double lo_edge = (1.0 - sq) * (1.0 - sq);
    const double hi_edge = (1.0 + sq) * (1.0 + sq);
    if (!(x > 0.0) || x > lo_edge)
        throw std::domain_error("mh1_stieltjes: x must lie in (0, (1-sqrt(c1))^2]");
    const double rad = std::max(0.0, (x - lo_edge) * (x - hi_edge));
    return (-x + 1.0 - c1 - std::sqrt(rad)) / (2.0 * c1 * x);
}

double g_closed(double t, double c, double c1) {
    if (!(c > 0.0)) throw std::domain_error("g_closed: c must be > 0");
    if (!(c1 > 0.0 && c1 < 1.0)) throw std::domain_error("g_closed: c1 must lie in (0,1)");
    const double sq = std::sqrt(c1);
    const double lo = 1.0 / ((1.0 - sq) * (1.0 - sq));
    if (!(t > lo)) throw std::domain_error("g_closed: t must exceed (1-sqrt(c1))^-2");
    const double rad = (1.0 - t * (1.0 - sq) * (1.0 - sq)) * (1.0 - t * (1.0 + sq) * (1.0 + sq));
    return c / (2.0 * c1) *
           (-(1.0 - c1) + (t * (1.0 - c1) * (1.0 - c1) - (1.0 + c1)) / std::sqrt(rad));
}

// ---------------------------------------------------------------------------
// support_scan

namespace {

// Log-graded grid over the open window (a, b) with nodes accumulating at
// both ends; stationary points of x(m) can sit arbitrarily close to a pole.
std::vector<double> window_grid(double a, double b, int points) {
    const double width = b - a;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    const int half = points / 2;
    const double lo_frac = 1e-10;
    for (int i = 0; i < half; ++i) {
        const double u = static_cast<double>(i) / (half - 1);
        const double frac = lo_frac * std::pow(0.5 / lo_frac, u);
        grid.push_back(a + width * frac);
    }
    for (int i = half - 1; i >= 0; --i) {
        const double u = static_cast<double>(i) / (half - 1);
        const double frac = lo_frac * std::pow(0.5 / lo_frac, u);
        grid.push_back(b - width * frac);
    }
    return grid;
}

// Semi-infinite windows are parameterized by log distance from the finite end.
std::vector<double> ray_grid(double end, bool positive_direction, int points, double scale) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    const double d_lo = scale * 1e-12;
    const double d_hi = scale * 1e14;
    for (int i = 0; i < points; ++i) {
        const double u = static_cast<double>(i) / (points - 1);
        const double d = d_lo * std::pow(d_hi / d_lo, u);
        grid.push_back(positive_direction ? end + d : end - d);
    }
    return grid;
}

double dx_at(double m, double c, const DiscreteMeasure& H) {
    return x_map(m, c, H).second;
}

double x_at(double m, double c, const DiscreteMeasure& H) {
    const double x = x_map(m, c, H).first;
    return std::clamp(x, -kHuge, kHuge);
}

// Extracts the x-images of the maximal dx/dm > 0 stretches along one grid.
void scan_grid(const std::vector<double>& grid, double c, const DiscreteMeasure& H,
               std::vector<RealInterval>& gaps) {
    const std::size_t n = grid.size();
    if (n < 2) return;
    std::vector<double> dx(n);
    for (std::size_t i = 0; i < n; ++i) dx[i] = dx_at(grid[i], c, H);

    std::size_t i = 0;
    while (i < n) {
        if (dx[i] <= 0.0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && dx[j + 1] > 0.0) ++j;
        double m_lo = grid[i];
        double m_hi = grid[j];
        if (i > 0)
            m_lo = detail::bisect([&](double m) { return dx_at(m, c, H); }, grid[i - 1], grid[i],
                                  1e-14, 300);
        if (j + 1 < n)
            m_hi = detail::bisect([&](double m) { return dx_at(m, c, H); }, grid[j + 1], grid[j],
                                  1e-14, 300);
        gaps.push_back({x_at(m_lo, c, H), x_at(m_hi, c, H)});
        i = j + 1;
    }
}

}  // namespace

std::vector<RealInterval> support_scan(double c, const DiscreteMeasure& H, RealInterval search,
                                       int grid_points) {
    H.validate();
    if (!(c > 0.0)) throw std::domain_error("support_scan: c must be > 0");
    if (!(search.lo < search.hi)) throw std::domain_error("support_scan: degenerate search window");
    if (grid_points < 100) throw std::domain_error("support_scan: grid_points must be >= 100");

    // Pole asymptotes m = -1/t over distinct positive atom locations.
    std::vector<double> poles;
    for (const auto& a : H.atoms)
        if (a.location > 0.0) poles.push_back(-1.0 / a.location);
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
    if (poles.empty()) throw std::domain_error("support_scan: H has no positive atom");

    const double scale = std::max({std::abs(poles.front()), std::abs(poles.back()), 1.0});

    std::vector<RealInterval> gaps;
    scan_grid(ray_grid(poles.front(), false, grid_points, scale), c, H, gaps);
    for (std::size_t k = 0; k + 1 < poles.size(); ++k)
        scan_grid(window_grid(poles[k], poles[k + 1], grid_points), c, H, gaps);
    scan_grid(ray_grid(poles.back(), true, grid_points, std::abs(poles.back())), c, H, gaps);
    scan_grid(ray_grid(0.0, true, grid_points, 1.0), c, H, gaps);

    // Clip to the search window, then merge.
    std::vector<RealInterval> clipped;
    for (const auto& g : gaps) {
        const double lo = std::max(g.lo, search.lo);
        const double hi = std::min(g.hi, search.hi);
        if (lo < hi) clipped.push_back({lo, hi});
    }
    std::sort(clipped.begin(), clipped.end(),
              [](const RealInterval& a, const RealInterval& b) { return a.lo < b.lo; });
    std::vector<RealInterval> merged;
    for (const auto& g : clipped) {
        if (!merged.empty() && g.lo <= merged.back().hi + 1e-9 * scale)
            merged.back().hi = std::max(merged.back().hi, g.hi);
        else
            merged.push_back(g);
    }
    return merged;
}

// ---------------------------------------------------------------------------
// Marchenko-Pastur quantile discretization

namespace {

struct MpAngleDensity {
    double c1, a, b, width;

    explicit MpAngleDensity(double c1_) : c1(c1_) {
        const double sq = std::sqrt(c1);
        a = (1.0 - sq) * (1.0 - sq);
        b = (1.0 + sq) * (1.0 + sq);
        width = b - a;
    }

    // Mass density in theta after x = a + width sin^2(theta).
    double operator()(double th) const {
        const double st = std::sin(th);
        const double x = a + width * st * st;
        const double s2 = std::sin(2.0 * th);
        return width * width * s2 * s2 / (4.0 * 2.0 * M_PI * c1 * x);
    }
};

}  // namespace

DiscreteMeasure mp_quantile_measure(double c1, int k) {
    if (!(c1 > 0.0 && c1 < 1.0))
        throw std::domain_error("mp_quantile_measure: c1 must lie in (0,1)");
    if (k < 1) throw std::domain_error("mp_quantile_measure: k must be >= 1");

    const MpAngleDensity dens(c1);
    constexpr int kCells = 8192;
    const double h = (M_PI / 2.0) / kCells;
    std::vector<double> cum(kCells + 1, 0.0);
    for (int i = 0; i < kCells; ++i)
        cum[i + 1] = cum[i] + detail::gl15_panel(dens, i * h, (i + 1) * h);
    const double total = cum.back();  // equals 1 up to quadrature roundoff

    DiscreteMeasure out;
    out.atoms.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double p = (i + 0.5) / k * total;
        const auto it = std::upper_bound(cum.begin(), cum.end(), p);
        const int cell = std::max(0, static_cast<int>(it - cum.begin()) - 1);
        const double th_lo = cell * h;
        const double th = detail::bisect(
            [&](double t) { return cum[cell] + detail::gl15_panel(dens, th_lo, t) - p; },
            th_lo, th_lo + h, 1e-15, 200);
        const double st = std::sin(th);
        out.atoms.push_back({1.0 / k, dens.a + dens.width * st * st});
    }
    return out;
}

DiscreteMeasure inverse_mp_measure(double c1, int k) {
    DiscreteMeasure mp = mp_quantile_measure(c1, k);
    for (auto& a : mp.atoms) a.location = 1.0 / a.location;
    std::sort(mp.atoms.begin(), mp.atoms.end(),
              [](const DiscreteMeasure::Atom& x, const DiscreteMeasure::Atom& y) {
                  return x.location < y.location;
              });
    return mp;
}

}  // namespace gevd
