#pragma once

#include "hypertheta/theta.hpp"

#include <array>
#include <string>

namespace hypertheta {

struct JacobiTriple {
    double sn = 0.0;
    double cn = 1.0;
    double dn = 1.0;
};

// sn, cn, dn for real u and modulus k in [0, 1], by descending Landen
// transformation (arithmetic-geometric mean on the complementary modulus).
// k = 0 and k = 1 return the circular and hyperbolic closed forms.
JacobiTriple jacobi_eval(double u, double k);

using RotationMatrix = std::array<std::array<double, 3>, 3>;

// cn/sn rotation about the third axis.
RotationMatrix z_block(const JacobiTriple& j);
// dn/(k sn) rotation about the first axis.
RotationMatrix x_block(const JacobiTriple& j, double k);

RotationMatrix multiply(const RotationMatrix& a, const RotationMatrix& b);
RotationMatrix transpose(const RotationMatrix& a);
double determinant(const RotationMatrix& a);
double max_abs_difference(const RotationMatrix& a, const RotationMatrix& b);

// X(u3) Z(u1 + u3) X(u1)
RotationMatrix euler_lhs(double u1, double u3, double k);
// Z(u1) X(u1 + u3) Z(u3)
RotationMatrix euler_rhs(double u1, double u3, double k);

double yang_baxter_residual(double u1, double u3, double k);

struct ComponentResiduals {
    // Entries 11, 33, 13, 12, 23, 22 of the spherical relations.
    std::array<double, 6> values{};
    static const std::array<std::string, 6>& labels();
    double max_abs() const;
};

// Spherical-triangle relations with cos a_i -> cn(u_i), sin a_i -> sn(u_i),
// cos A_i -> dn(u_i), sin A_i -> k sn(u_i) for i = 1, 3, while the middle
// angle enters the right-hand product as pi - A_2, so cos A_2 -> -dn(u_2)
// and sin A_2 -> k sn(u_2).
ComponentResiduals component_residuals(double u1, double u3, double k);

// Jacobi functions from genus-one theta quotients, computed with the genus-2
// evaluator on the product period matrix (i t, i t, 0).
struct ThetaJacobi {
    double k;
    JacobiTriple triple;
};
ThetaJacobi jacobi_from_theta(double u, double t, const PrecisionPolicy& pol = {});

}  // namespace hypertheta
