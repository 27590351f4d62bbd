#include "hypertheta/errors.hpp"
#include "hypertheta/sampling.hpp"
#include "hypertheta/theta.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hypertheta;

namespace {

const PeriodMatrix kSquare{{0, 1}, {0, 1}, {0, 0}};
const PeriodMatrix kSkew{{0.1, 1.1}, {-0.2, 0.9}, {0.15, 0.35}};
const EvalPoint kZ{{0.2, 0.1}, {-0.3, 0.05}};

cplx brute(int a2, int c2, int b2, int d2, const EvalPoint& z, const PeriodMatrix& t, int r = 20) {
    return oracle::theta2(a2, c2, b2, d2, z.x, z.y, t.tau1, t.tau2, t.tau12, r);
}

}  // namespace

TEST(Theta, ConstantAtSquareLatticeMatchesGenusOneSquare) {
    // theta3(0, e^-pi) = pi^(1/4) / Gamma(3/4)
    const double expected = std::sqrt(std::numbers::pi) / std::pow(std::tgamma(0.75), 2);
    const cplx v = theta_eval(Characteristic::integer(0, 0, 0, 0), {}, kSquare);
    EXPECT_NEAR(v.real(), expected, 1e-14);
    EXPECT_NEAR(v.real(), 1.18034059901609, 1e-13);
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(Theta, AgreesWithBruteForceOnAllIntegerCharacteristics) {
    for (int i = 0; i < 16; ++i) {
        const int a = (i >> 3) & 1, c = (i >> 2) & 1, b = (i >> 1) & 1, d = i & 1;
        const cplx v = theta_eval(Characteristic::integer(a, c, b, d), kZ, kSkew);
        const cplx o = brute(2 * a, 2 * c, 2 * b, 2 * d, kZ, kSkew);
        EXPECT_LT(std::abs(v - o), 1e-13) << i;
    }
}

TEST(Theta, AgreesWithBruteForceOnUnreducedCharacteristics) {
    // Entries outside [0, 2) go through the reduction phase; the oracle sums
    // the definition directly.
    const int cases[][4] = {{1, -1, 3, 0}, {-3, 2, -5, 6}, {5, 7, 1, -2}, {2, 2, 4, 4}, {-2, 0, 0, -4}};
    for (const auto& h : cases) {
        const cplx v = theta_eval(Characteristic::from_halves(h[0], h[1], h[2], h[3]), kZ, kSkew);
        const cplx o = brute(h[0], h[1], h[2], h[3], kZ, kSkew);
        EXPECT_LT(std::abs(v - o), 1e-12 * std::max(1.0, std::abs(o)));
    }
}

TEST(Theta, ReductionPhaseLaw) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto smp = draw_sample(sample_seed(99, s));
        for (int a2 = -3; a2 <= 3; ++a2) {
            const Characteristic ch = Characteristic::from_halves(a2, 1, a2 + 5, -6);
            const auto red = reduce_characteristic(ch);
            const cplx lhs = theta_sum(ch, smp.p1, smp.tau, 25);
            const cplx rhs = red.phase * theta_sum(red.ch, smp.p1, smp.tau, 25);
            EXPECT_LT(std::abs(lhs - rhs), 1e-12);
            const cplx o = brute(a2, 1, a2 + 5, -6, smp.p1, smp.tau, 25);
            EXPECT_LT(std::abs(lhs - o), 1e-12);
        }
    }
}

TEST(Theta, OddCharacteristicsVanishAtOrigin) {
    const PrecisionPolicy pol;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto smp = draw_sample(sample_seed(7, s));
        for (const auto& ch : odd_characteristics())
            EXPECT_LT(std::abs(theta_eval(ch, {}, smp.tau, pol)), 10 * pol.eps_tail);
    }
}

TEST(Theta, DiagonalPeriodsFactorizeIntoGenusOne) {
    const PrecisionPolicy pol;
    const PeriodMatrix t{{0.3, 1.2}, {-0.1, 0.8}, {0, 0}};
    for (int i = 0; i < 16; ++i) {
        const int a = (i >> 3) & 1, c = (i >> 2) & 1, b = (i >> 1) & 1, d = i & 1;
        const cplx v = theta_eval(Characteristic::integer(a, c, b, d), kZ, t, pol);
        const cplx f = oracle::theta1(2 * a, 2 * b, kZ.x, t.tau1, 30) * oracle::theta1(2 * c, 2 * d, kZ.y, t.tau2, 30);
        EXPECT_LT(std::abs(v - f), 4 * pol.eps_tail * std::max(1.0, std::abs(f))) << i;
    }
}

TEST(Theta, RadiusStability) {
    const PrecisionPolicy pol;
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto smp = draw_sample(sample_seed(3, s));
        for (int i = 0; i < 16; ++i) {
            const Characteristic ch = from_integer_index(i);
            const auto tv = theta_eval_detailed(ch, smp.p1, smp.tau, pol);
            const cplx wider = theta_sum(ch, smp.p1, smp.tau, tv.radius + 10);
            EXPECT_LT(std::abs(tv.value - wider), 2 * pol.eps_tail);
        }
    }
}

TEST(Theta, TailBoundDominatesObservedTail) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto smp = draw_sample(sample_seed(5, s));
        const Characteristic ch = Characteristic::from_halves(1, 3, 2, 0);
        for (int r = 2; r <= 5; ++r) {
            const double bound = tail_bound(ch, smp.p1, smp.tau, r);
            const double observed = std::abs(theta_sum(ch, smp.p1, smp.tau, r + 30) - theta_sum(ch, smp.p1, smp.tau, r));
            EXPECT_LE(observed, bound * (1 + 1e-12) + 1e-16);
        }
    }
}

TEST(Theta, HalfCharacteristicEvenness) {
    // theta[-ch](-z) = theta[ch](z) for every characteristic.
    for (int a2 = -1; a2 <= 2; ++a2) {
        for (int d2 = -1; d2 <= 2; ++d2) {
            const cplx v = theta_eval(Characteristic::from_halves(a2, 1, 3, d2), kZ, kSkew);
            const cplx w = theta_eval(Characteristic::from_halves(-a2, -1, -3, -d2), -1.0 * kZ, kSkew);
            EXPECT_LT(std::abs(v - w), 1e-13);
        }
    }
}

TEST(Theta, InvalidPeriodIsRejected) {
    EXPECT_THROW(theta_eval(Characteristic{}, {}, PeriodMatrix{{0, 1}, {0, 1}, {0, 1}}), InvalidPeriod);
    EXPECT_THROW(theta_eval(Characteristic{}, {}, PeriodMatrix{{0, -1}, {0, 1}, {0, 0}}), InvalidPeriod);
}

TEST(Theta, RadiusExceededCarriesRequiredRadius) {
    PrecisionPolicy pol;
    pol.max_radius = 2;
    const PeriodMatrix thin{{0, 0.05}, {0, 0.05}, {0, 0}};
    try {
        theta_eval(Characteristic{}, {}, thin, pol);
        FAIL() << "expected RadiusExceeded";
    } catch (const RadiusExceeded& e) {
        EXPECT_GT(e.required_radius, 2);
    }
}

TEST(Theta, DoubledPeriods) {
    const PeriodMatrix d = double_periods(kSkew);
    EXPECT_EQ(d.tau1, 2.0 * kSkew.tau1);
    EXPECT_EQ(d.tau12, 2.0 * kSkew.tau12);
    EXPECT_EQ(d.scale, Scale::Doubled);
}
