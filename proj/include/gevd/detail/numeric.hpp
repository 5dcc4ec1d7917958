#pragma once

// Small numerical helpers shared across the library: fixed-order
// Gauss-Legendre panels, an adaptive wrapper, bisection, and sample
// quantiles.  Nothing here is exposed through the public interfaces.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gevd::detail {

// 15-point Gauss-Legendre nodes/weights on [-1,1], computed once by Newton
// iteration on the Legendre recurrence.
struct GaussLegendre15 {
    std::array<double, 15> x{};
    std::array<double, 15> w{};

    GaussLegendre15() {
        constexpr int n = 15;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            x[i] = t;
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

inline const GaussLegendre15& gl15() {
    static const GaussLegendre15 table;
    return table;
}

template <typename F>
double gl15_panel(F&& f, double a, double b) {
    const auto& g = gl15();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 15; ++i) s += g.w[i] * f(mid + half * g.x[i]);
    return s * half;
}

// Adaptive integration by panel halving; the integrands here are smooth
// except for isolated near-kinks, so plain Richardson acceptance suffices.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
    struct Rec {
        double a, b, whole;
        int depth;
    };
    double total = 0.0;
    std::vector<Rec> stack;
    stack.push_back({a, b, gl15_panel(f, a, b), 0});
    while (!stack.empty()) {
        Rec r = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (r.a + r.b);
        const double left = gl15_panel(f, r.a, mid);
        const double right = gl15_panel(f, mid, r.b);
        const double delta = left + right - r.whole;
        if (std::abs(delta) <= abs_tol || r.depth >= max_depth) {
            total += left + right + delta / 63.0;
        } else {
            stack.push_back({r.a, mid, left, r.depth + 1});
            stack.push_back({mid, r.b, right, r.depth + 1});
        }
    }
    return total;
}

// Bisection for a continuous f with f(lo), f(hi) of opposite sign.
template <typename F>
double bisect(F&& f, double lo, double hi, double x_tol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::runtime_error("bisect: endpoints do not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= x_tol * std::max(1.0, std::abs(mid))) break;
    }
    return 0.5 * (lo + hi);
}

// Type-7 sample quantile (linear interpolation of order statistics) on a
// sorted ascending vector.
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw std::domain_error("quantile of empty sample");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    const double h = p * (static_cast<double>(sorted.size()) - 1.0);
    const auto i = static_cast<std::size_t>(h);
    if (i + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(i);
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

// FNV-1a 64-bit content hash, used for parameter provenance stamps.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& s) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace gevd::detail
