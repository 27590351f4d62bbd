#include "hypertheta/theta.hpp"

#include "hypertheta/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hypertheta {

namespace {

constexpr double pi = std::numbers::pi;

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

bool PeriodMatrix::is_valid() const {
    if (!finite(tau1) || !finite(tau2) || !finite(tau12)) return false;
    const double y1 = tau1.imag();
    const double y2 = tau2.imag();
    const double y12 = tau12.imag();
    return y1 > 0.0 && y2 > 0.0 && y1 * y2 - y12 * y12 > 0.0;
}

double PeriodMatrix::min_imag_eigenvalue() const {
    const double y1 = tau1.imag();
    const double y2 = tau2.imag();
    const double y12 = tau12.imag();
    const double half_trace = 0.5 * (y1 + y2);
    const double spread = std::hypot(0.5 * (y1 - y2), y12);
    const double largest = half_trace + spread;
    // det / largest avoids cancellation in half_trace - spread.
    return (y1 * y2 - y12 * y12) / largest;
}

bool EvalPoint::is_finite() const { return finite(x) && finite(y); }

void PrecisionPolicy::validate() const {
    if (!(eps_tail > 0.0) || !(rel_tol > 0.0) || !(abs_tol > 0.0) || max_radius < 1) {
        throw std::invalid_argument("precision policy requires eps_tail, rel_tol, abs_tol > 0 and max_radius >= 1");
    }
}

void require_valid(const PeriodMatrix& tau) {
    if (!tau.is_valid()) {
        throw InvalidPeriod("imaginary part of the period matrix is not positive definite");
    }
}

PeriodMatrix double_periods(const PeriodMatrix& tau) {
    return {2.0 * tau.tau1, 2.0 * tau.tau2, 2.0 * tau.tau12, Scale::Doubled};
}

double tail_bound(const Characteristic&, const EvalPoint& z, const PeriodMatrix& tau, int radius) {
    const double lambda = tau.min_imag_eigenvalue();
    const double s = std::hypot(z.x.imag(), z.y.imag());
    if (radius < 1 || radius < s / lambda) return std::numeric_limits<double>::infinity();

    auto summand = [&](int k) {
        const double r = k - 1;
        return 8.0 * k * std::exp(-pi * lambda * r * r + 2.0 * pi * s * r);
    };

    double total = 0.0;
    double t = summand(radius + 1);
    for (int k = radius + 1; k < radius + 10000; ++k) {
        if (t == 0.0) return total;
        const double next = summand(k + 1);
        const double ratio = next / t;
        if (ratio < 1.0) {
            return total + t / (1.0 - ratio);
        }
        total += t;
        t = next;
    }
    return std::numeric_limits<double>::infinity();
}

int truncation_radius(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau,
                      const PrecisionPolicy& pol) {
    require_valid(tau);
    const Characteristic canonical = reduce_characteristic(ch).ch;
    for (int r = 1; r <= pol.max_radius; ++r) {
        if (tail_bound(canonical, z, tau, r) < pol.eps_tail) return r;
    }
    int needed = pol.max_radius + 1;
    while (needed < 100000 && !(tail_bound(canonical, z, tau, needed) < pol.eps_tail)) ++needed;
    throw RadiusExceeded("truncation radius " + std::to_string(needed) + " exceeds max_radius " +
                             std::to_string(pol.max_radius),
                         needed);
}

cplx theta_sum(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau, int radius) {
    const ReducedCharacteristic red = reduce_characteristic(ch);
    const double ha = 0.5 * red.ch.a.value();
    const double hc = 0.5 * red.ch.c.value();
    const cplx xs = z.x + 0.5 * red.ch.b.value();
    const cplx ys = z.y + 0.5 * red.ch.d.value();
    const cplx ipi(0.0, pi);

    cplx sum(0.0, 0.0);
    for (int m = -radius; m <= radius; ++m) {
        const double p = m + ha;
        const cplx row = tau.tau1 * p * p + 2.0 * p * xs;
        for (int n = -radius; n <= radius; ++n) {
            const double q = n + hc;
            const cplx e = row + tau.tau2 * q * q + 2.0 * tau.tau12 * p * q + 2.0 * q * ys;
            sum += std::exp(ipi * e);
        }
    }
    return red.phase * sum;
}

ThetaValue theta_eval_detailed(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau,
                               const PrecisionPolicy& pol) {
    require_valid(tau);
    if (!z.is_finite()) throw std::invalid_argument("evaluation point has non-finite components");
    const int r = truncation_radius(ch, z, tau, pol);
    return {theta_sum(ch, z, tau, r), r};
}

cplx theta_eval(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau,
                const PrecisionPolicy& pol) {
    return theta_eval_detailed(ch, z, tau, pol).value;
}

}  // namespace hypertheta
