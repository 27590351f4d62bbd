#include "hypertheta/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypertheta {

JacobiTriple jacobi_eval(double u, double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("jacobi_eval: modulus must lie in [0, 1]");
    if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};
    if (k == 1.0) {
        const double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }
    // Descending Landen: AGM of 1 and k' = sqrt(1 - k^2), then unwind.
    constexpr int max_steps = 16;
    constexpr double tol = 1e-9;  // the next step squares the error
    double em[max_steps], en[max_steps];
    double a = 1.0;
    double emc = (1.0 - k) * (1.0 + k);
    double c = 1.0;
    int last = 0;
    for (int i = 0; i < max_steps; ++i) {
        last = i;
        em[i] = a;
        emc = std::sqrt(emc);
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (std::abs(a - emc) <= tol * a) break;
        emc *= a;
        a = c;
    }
    const double v = u * c;
    JacobiTriple out{std::sin(v), std::cos(v), 1.0};
    if (out.sn != 0.0) {
        a = out.cn / out.sn;
        c *= a;
        double dn = 1.0;
        for (int i = last; i >= 0; --i) {
            const double b = em[i];
            a *= c;
            c *= dn;
            dn = (en[i] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / std::sqrt(c * c + 1.0);
        out.sn = out.sn >= 0.0 ? a : -a;
        out.cn = c * out.sn;
        out.dn = dn;
    }
    return out;
}

RotationMatrix z_block(const JacobiTriple& j) {
    return {{{j.cn, j.sn, 0.0}, {-j.sn, j.cn, 0.0}, {0.0, 0.0, 1.0}}};
}

RotationMatrix x_block(const JacobiTriple& j, double k) {
    return {{{1.0, 0.0, 0.0}, {0.0, j.dn, k * j.sn}, {0.0, -k * j.sn, j.dn}}};
}

RotationMatrix multiply(const RotationMatrix& a, const RotationMatrix& b) {
    RotationMatrix out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
}

RotationMatrix transpose(const RotationMatrix& a) {
    RotationMatrix out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = a[j][i];
    return out;
}

double determinant(const RotationMatrix& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double max_abs_difference(const RotationMatrix& a, const RotationMatrix& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

RotationMatrix euler_lhs(double u1, double u3, double k) {
    const auto j1 = jacobi_eval(u1, k), j2 = jacobi_eval(u1 + u3, k), j3 = jacobi_eval(u3, k);
    return multiply(multiply(x_block(j3, k), z_block(j2)), x_block(j1, k));
}

RotationMatrix euler_rhs(double u1, double u3, double k) {
    const auto j1 = jacobi_eval(u1, k), j2 = jacobi_eval(u1 + u3, k), j3 = jacobi_eval(u3, k);
    return multiply(multiply(z_block(j1), x_block(j2, k)), z_block(j3));
}

double yang_baxter_residual(double u1, double u3, double k) {
    return max_abs_difference(euler_lhs(u1, u3, k), euler_rhs(u1, u3, k));
}

const std::array<std::string, 6>& ComponentResiduals::labels() {
    static const std::array<std::string, 6> names{"11", "33", "13", "12", "23", "22"};
    return names;
}

double ComponentResiduals::max_abs() const {
    double worst = 0.0;
    for (double v : values) worst = std::max(worst, std::abs(v));
    return worst;
}

ComponentResiduals component_residuals(double u1, double u3, double k) {
    const auto j1 = jacobi_eval(u1, k), j2 = jacobi_eval(u1 + u3, k), j3 = jacobi_eval(u3, k);
    // Side angles a_i and vertex angles A_i.
    const double ca1 = j1.cn, sa1 = j1.sn, ca2 = j2.cn, sa2 = j2.sn, ca3 = j3.cn, sa3 = j3.sn;
    const double cA1 = j1.dn, sA1 = k * j1.sn, cA3 = j3.dn, sA3 = k * j3.sn;
    const double cA2 = -j2.dn, sA2 = k * j2.sn;

    ComponentResiduals r;
    r.values[0] = ca2 - ca1 * ca3 - cA2 * sa1 * sa3;
    r.values[1] = cA2 + cA1 * cA3 - ca2 * sA1 * sA3;
    r.values[2] = -sa1 * sA2 + sa2 * sA1;
    r.values[3] = -ca1 * sa3 + cA1 * sa2 + cA2 * sa1 * ca3;
    r.values[4] = -ca1 * sA2 + cA1 * sA3 + cA3 * sA1 * ca2;
    r.values[5] = sa1 * sa3 - sA1 * sA3 + cA2 * ca1 * ca3 + ca2 * cA1 * cA3;
    return r;
}

ThetaJacobi jacobi_from_theta(double u, double t, const PrecisionPolicy& pol) {
    if (!(t > 0.0)) throw std::invalid_argument("jacobi_from_theta: t must be positive");
    const PeriodMatrix tau{{0.0, t}, {0.0, t}, {0.0, 0.0}, Scale::Base};
    auto ic = Characteristic::integer;
    // On the product matrix theta[a 0; b 0](x, 0) = g[a;b](x) g[0;0](0), and
    // theta[0 0; 0 0](0, 0) = g[0;0](0)^2.
    const double g00 = std::sqrt(theta_eval(ic(0, 0, 0, 0), {}, tau, pol).real());
    auto g = [&](int a, int b, double x) {
        return theta_eval(ic(a, 0, b, 0), EvalPoint{x, 0.0}, tau, pol).real() / g00;
    };
    const double th2 = g(1, 0, 0.0), th3 = g(0, 0, 0.0), th4 = g(0, 1, 0.0);
    const double x = u / (std::numbers::pi * th3 * th3);
    const double d = g(0, 1, x);
    ThetaJacobi out;
    out.k = th2 * th2 / (th3 * th3);
    out.triple.sn = (th3 / th2) * (-g(1, 1, x)) / d;
    out.triple.cn = (th4 / th2) * g(1, 0, x) / d;
    out.triple.dn = (th4 / th3) * g(0, 0, x) / d;
    return out;
}

}  // namespace hypertheta
