#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gevd {

// Scalar field of the Gaussian snapshot model.
enum class Field { real, complex };

inline const char* to_string(Field f) { return f == Field::real ? "real" : "complex"; }

inline Field field_from_string(const std::string& s) {
    if (s == "real") return Field::real;
    if (s == "complex") return Field::complex;
    throw std::domain_error("unknown field: " + s + " (expected 'real' or 'complex')");
}

// Dimensions of the two-sample problem: n sensors, m signal-bearing
// snapshots, N noise-only snapshots.  N >= n+2 keeps the noise sample
// covariance invertible with probability 1.
struct SystemShape {
    int n = 0;
    int m = 0;
    int N = 0;
    Field field = Field::real;

    void validate() const {
        if (n < 1) throw std::domain_error("SystemShape: n must be >= 1");
        if (m < 1) throw std::domain_error("SystemShape: m must be >= 1");
        if (N < n + 2)
            throw std::domain_error("SystemShape: N must be >= n+2 so the noise sample "
                                    "covariance is invertible (got N=" + std::to_string(N) +
                                    ", n=" + std::to_string(n) + ")");
    }
};

// The two ratios that every limiting formula depends on: c = n/m, c1 = n/N.
struct AspectRatios {
    double c = 0.0;
    double c1 = 0.0;

    AspectRatios() = default;
    AspectRatios(double c_, double c1_) : c(c_), c1(c1_) { validate(); }

    static AspectRatios from_shape(const SystemShape& s) {
        s.validate();
        return AspectRatios(static_cast<double>(s.n) / s.m, static_cast<double>(s.n) / s.N);
    }

    void validate() const {
        if (!(c > 0.0)) throw std::domain_error("AspectRatios: c must be > 0");
        if (!(c1 > 0.0 && c1 < 1.0)) throw std::domain_error("AspectRatios: c1 must lie in (0,1)");
    }
};

// Support [b1, b2] of the continuous part of the limiting spectrum.
struct SupportInterval {
    double b1 = 0.0;
    double b2 = 0.0;
};

// Sample generalized eigenvalues, sorted descending, all >= 0.
struct EmpiricalSpectrum {
    std::vector<double> values;

    static EmpiricalSpectrum from_unsorted(std::vector<double> v) {
        if (v.empty()) throw std::domain_error("EmpiricalSpectrum: empty spectrum");
        for (double x : v)
            if (!(x >= 0.0)) throw std::domain_error("EmpiricalSpectrum: negative eigenvalue");
        std::sort(v.begin(), v.end(), std::greater<double>());
        return EmpiricalSpectrum{std::move(v)};
    }

    std::size_t size() const { return values.size(); }

    bool is_descending() const {
        return std::is_sorted(values.begin(), values.end(), std::greater_equal<double>());
    }
};

}  // namespace gevd
