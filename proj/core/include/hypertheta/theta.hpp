#pragma once

#include "hypertheta/characteristic.hpp"

#include <complex>

namespace hypertheta {

using cplx = std::complex<double>;

enum class Scale { Base, Doubled };

// Symmetric 2x2 period matrix [[tau1, tau12], [tau12, tau2]].
struct PeriodMatrix {
    cplx tau1{0.0, 1.0};
    cplx tau2{0.0, 1.0};
    cplx tau12{0.0, 0.0};
    Scale scale = Scale::Base;

    bool is_valid() const;
    // Smallest eigenvalue of the imaginary part.
    double min_imag_eigenvalue() const;
};

struct EvalPoint {
    cplx x{0.0, 0.0};
    cplx y{0.0, 0.0};

    bool is_finite() const;
    friend EvalPoint operator+(const EvalPoint& p, const EvalPoint& q) { return {p.x + q.x, p.y + q.y}; }
    friend EvalPoint operator-(const EvalPoint& p, const EvalPoint& q) { return {p.x - q.x, p.y - q.y}; }
    friend EvalPoint operator*(double s, const EvalPoint& p) { return {s * p.x, s * p.y}; }
};

struct PrecisionPolicy {
    double eps_tail = 1e-14;
    int max_radius = 60;
    double rel_tol = 1e-9;
    double abs_tol = 1e-13;

    void validate() const;
};

struct ThetaValue {
    cplx value;
    int radius;
};

// Throws InvalidPeriod unless tau has positive definite imaginary part.
void require_valid(const PeriodMatrix& tau);

PeriodMatrix double_periods(const PeriodMatrix& tau);

// Upper bound on sum |term| over lattice points with max(|m|, |n|) > radius,
// for a canonical characteristic (entries in [0, 2)). Returns +inf when the
// bound does not apply at this radius (radius below the Gaussian peak).
//
// With v = (m + a/2, n + c/2), Y = Im T, lambda = smallest eigenvalue of Y and
// s = |(Im x, Im y)|, each term satisfies
//   |term| = exp(-pi v.Y.v - 2 pi v.Im z) <= g(|v|),
//   g(r) = exp(-pi lambda r^2 + 2 pi s r).
// A point on the square shell max(|m|,|n|) = k has |v| > k - 1 and the shell
// holds 8k points, so for radius >= s / lambda (where g is decreasing)
//   tail <= sum_{k > radius} 8k g(k - 1).
// The ratio of consecutive summands decreases with k; the series is summed
// explicitly until that ratio drops below one and the remainder is closed
// with the geometric bound t / (1 - ratio).
double tail_bound(const Characteristic& canonical, const EvalPoint& z, const PeriodMatrix& tau,
                  int radius);

// Smallest radius with tail_bound < eps_tail; throws RadiusExceeded past max_radius.
int truncation_radius(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau,
                      const PrecisionPolicy& pol);

// Square-window lattice sum at a fixed radius, no truncation logic.
cplx theta_sum(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau, int radius);

ThetaValue theta_eval_detailed(const Characteristic& ch, const EvalPoint& z,
                               const PeriodMatrix& tau, const PrecisionPolicy& pol);

cplx theta_eval(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau,
                const PrecisionPolicy& pol = {});

}  // namespace hypertheta
