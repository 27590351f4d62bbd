#include "hypertheta/addition.hpp"
#include "hypertheta/errors.hpp"
#include "hypertheta/sampling.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hypertheta;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30}); }

}  // namespace

TEST(Addition, FormulaTable) {
    const auto& fs = addition_formulas();
    ASSERT_EQ(fs.size(), 15u);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        EXPECT_EQ(fs[i].id, "A" + std::to_string(i + 1));
        EXPECT_EQ(fs[i].ch, nontrivial_characteristics()[i]);
        EXPECT_EQ(&addition_formula(fs[i].ch), &fs[i]);
        EXPECT_FALSE(fs[i].numerator.empty());
        EXPECT_EQ(fs[i].numerator.size(), fs[i].denominator.size());
    }
    EXPECT_EQ(doubled_characteristics().size(), 28u);
}

TEST(Addition, FEvalIsThetaRatio) {
    const auto s = draw_sample(3);
    const Characteristic ch = Characteristic::integer(1, 0, 1, 1);
    const cplx direct = oracle::theta2(2, 0, 2, 2, s.p1.x, s.p1.y, s.tau.tau1, s.tau.tau2, s.tau.tau12, 20) /
                        oracle::theta2(0, 0, 0, 0, s.p1.x, s.p1.y, s.tau.tau1, s.tau.tau2, s.tau.tau12, 20);
    EXPECT_LT(rel(f_eval(ch, s.p1, s.tau).value, direct), 1e-12);
}

TEST(Addition, AlgebraicMatchesDirectOnSamples) {
    const PrecisionPolicy pol;
    for (std::uint64_t i = 0; i < 10; ++i) {
        const auto s = draw_sample(sample_seed(17, i));
        const auto consts = constants_vector(s.tau, pol);
        const auto f1 = f_vector(s.p1, s.tau, pol), f2 = f_vector(s.p2, s.tau, pol);
        for (const auto& ch : nontrivial_characteristics()) {
            const cplx alg = add_algebraic(ch, f1, f2, consts).value;
            const cplx dir = f_eval(ch, s.p1 + s.p2, s.tau, pol).value;
            EXPECT_LT(rel(alg, dir), addition_law_tol) << ch.to_string();
            EXPECT_LT(rel(alg, add_direct(ch, s.p1, s.p2, s.tau, pol).value), path_tol);
        }
    }
}

TEST(Addition, IdentityElement) {
    const PrecisionPolicy pol;
    for (std::uint64_t i = 0; i < 10; ++i) {
        const auto s = draw_sample(sample_seed(23, i));
        const auto consts = constants_vector(s.tau, pol);
        const auto f1 = f_vector(s.p1, s.tau, pol), f0 = f_vector({}, s.tau, pol);
        for (const auto& ch : nontrivial_characteristics())
            EXPECT_LT(rel(add_algebraic(ch, f1, f0, consts).value, f1[ch]), 1e-9) << ch.to_string();
    }
}

TEST(Addition, Commutativity) {
    const PrecisionPolicy pol;
    for (std::uint64_t i = 0; i < 10; ++i) {
        const auto s = draw_sample(sample_seed(29, i));
        const auto consts = constants_vector(s.tau, pol);
        const auto f1 = f_vector(s.p1, s.tau, pol), f2 = f_vector(s.p2, s.tau, pol);
        for (const auto& ch : nontrivial_characteristics())
            EXPECT_LT(rel(add_algebraic(ch, f1, f2, consts).value, add_algebraic(ch, f2, f1, consts).value), 1e-10);
    }
}

TEST(Addition, ProjectiveInvariance) {
    // The composition only sees theta vectors up to a common factor.
    const PrecisionPolicy pol;
    const auto s = draw_sample(31);
    const auto consts = constants_vector(s.tau, pol);
    ThetaVector t1 = theta_vector(s.p1, s.tau, pol), t2 = theta_vector(s.p2, s.tau, pol);
    ThetaVector u1 = t1, u2 = t2;
    for (auto& v : u1.values) v *= cplx(2.5, -1.0);
    for (auto& v : u2.values) v *= cplx(-0.3, 0.7);
    for (const auto& ch : nontrivial_characteristics())
        EXPECT_LT(rel(add_from_theta(ch, t1, t2, consts), add_from_theta(ch, u1, u2, consts)), 1e-12);
}

TEST(Addition, ReducedDoubledTableMatchesDirect) {
    const PrecisionPolicy pol;
    for (std::uint64_t i = 0; i < 5; ++i) {
        const auto s = draw_sample(sample_seed(37, i));
        const auto consts = constants_vector(s.tau, pol);
        const auto direct = doubled_table_direct(s.p1, s.tau, pol);
        const auto reduced = doubled_table_reduced(theta_vector(s.p1, s.tau, pol), consts.doubled_resolved);
        for (const auto& [ch, v] : direct) {
            ASSERT_TRUE(reduced.count(ch)) << ch.to_string();
            EXPECT_LT(rel(reduced.at(ch), v), 1e-9) << ch.to_string();
        }
    }
}

TEST(Addition, ConstantsVector) {
    const PrecisionPolicy pol;
    const auto s = draw_sample(41);
    const auto c = constants_vector(s.tau, pol);
    EXPECT_EQ(c.theta0.size(), 10u);
    EXPECT_EQ(c.doubled_resolved.size(), 16u);
    for (const auto& [ch, v] : c.doubled_resolved) EXPECT_LT(rel(v, c.doubled_direct.at(ch)), 1e-8);
    const cplx alpha = theta_eval(Characteristic::integer(0, 0, 0, 1), {}, double_periods(s.tau), pol);
    EXPECT_LT(rel(c.alpha(), alpha), 1e-12);
}

TEST(Addition, RunCoversAllFormulas) {
    const auto run = verify_addition(4, 99);
    EXPECT_EQ(run.law.size(), 60u);
    EXPECT_EQ(run.path.size(), 60u);
    for (const auto& r : run.law) EXPECT_TRUE(r.pass) << r.id;
    for (const auto& r : run.path) EXPECT_TRUE(r.pass) << r.id;
}

TEST(Addition, DivisorIsReported) {
    // theta[0 0; 0 0] vanishes at the half period (1/2, 1/2) + tau (1/2, 1/2)
    // for diagonal tau; f_vector there cannot be formed.
    const PeriodMatrix t{{0, 1}, {0, 1}, {0, 0}};
    const EvalPoint half{cplx(0.5, 0.5), cplx(0.0, 0.0)};
    EXPECT_THROW(f_vector(half, t), DivisorHit);
}
