#pragma once

#include <complex>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;

// Plain lattice sum straight from the definition, with half-integer
// characteristics passed in halves and no reduction of any kind.
inline cplx theta2(int a2, int c2, int b2, int d2, cplx x, cplx y, cplx t1, cplx t2, cplx t12, int radius) {
    const cplx ipi(0.0, std::numbers::pi);
    cplx s = 0.0;
    for (int m = -radius; m <= radius; ++m) {
        for (int n = -radius; n <= radius; ++n) {
            const double p = m + a2 / 4.0, q = n + c2 / 4.0;
            const cplx quad = t1 * p * p + 2.0 * t12 * p * q + t2 * q * q;
            const cplx lin = 2.0 * p * (x + b2 / 4.0) + 2.0 * q * (y + d2 / 4.0);
            s += std::exp(ipi * (quad + lin));
        }
    }
    return s;
}

// Genus-one theta[a; b](z, t) with a, b in halves.
inline cplx theta1(int a2, int b2, cplx z, cplx t, int radius) {
    const cplx ipi(0.0, std::numbers::pi);
    cplx s = 0.0;
    for (int m = -radius; m <= radius; ++m) {
        const double p = m + a2 / 4.0;
        s += std::exp(ipi * (t * p * p + 2.0 * p * (z + b2 / 4.0)));
    }
    return s;
}

inline double agm(double a, double b) {
    for (int i = 0; i < 60 && std::abs(a - b) > 1e-16 * a; ++i) {
        const double m = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = m;
    }
    return a;
}

// Complete elliptic integral of the first kind.
inline double complete_k(double k) { return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(1.0 - k * k))); }

}  // namespace oracle
