#include "hypertheta/harness.hpp"

#include <gtest/gtest.h>

using namespace hypertheta;
using namespace hypertheta::harness;

TEST(Parse, Complex) {
    EXPECT_EQ(parse_complex("1.5"), cplx(1.5, 0));
    EXPECT_EQ(parse_complex("i"), cplx(0, 1));
    EXPECT_EQ(parse_complex("-i"), cplx(0, -1));
    EXPECT_EQ(parse_complex("-2i"), cplx(0, -2));
    EXPECT_EQ(parse_complex("0.3-0.1i"), cplx(0.3, -0.1));
    EXPECT_EQ(parse_complex("1e-3+2e-2i"), cplx(1e-3, 2e-2));
    EXPECT_EQ(parse_complex(" 2+i "), cplx(2, 1));
    EXPECT_THROW(parse_complex("abc"), ConfigError);
    EXPECT_THROW(parse_complex(""), ConfigError);
    EXPECT_THROW(parse_complex("1+2"), ConfigError);
}

TEST(Parse, Characteristic) {
    EXPECT_EQ(parse_characteristic("1,0,1,1"), Characteristic::integer(1, 0, 1, 1));
    EXPECT_EQ(parse_characteristic("1/2,-1/2,0,3"), Characteristic::from_halves(1, -1, 0, 6));
    EXPECT_THROW(parse_characteristic("1,0,1"), ConfigError);
    EXPECT_THROW(parse_characteristic("1/3,0,0,0"), ConfigError);
    EXPECT_THROW(parse_characteristic("x,0,0,0"), ConfigError);
}

TEST(Parse, PointAndPeriod) {
    const EvalPoint p = parse_point("0.1,0.2,0.3,0.4");
    EXPECT_EQ(p.x, cplx(0.1, 0.2));
    EXPECT_EQ(p.y, cplx(0.3, 0.4));
    EXPECT_EQ(parse_point("0.1+0.2i,-i").y, cplx(0, -1));
    const PeriodMatrix t = parse_period("i,1.2i,0.1+0.2i");
    EXPECT_EQ(t.tau2, cplx(0, 1.2));
    EXPECT_EQ(t.tau12, cplx(0.1, 0.2));
    EXPECT_EQ(parse_period("0,1,0,1,0,0").tau1, cplx(0, 1));
    EXPECT_THROW(parse_period("i,i"), ConfigError);
}

TEST(Parse, Lists) {
    // Positions are kept so a missing characteristic entry is not skipped.
    EXPECT_EQ(split_list("a, b,,c"), (std::vector<std::string>{"a", "b", "", "c"}));
    EXPECT_EQ(config_from_json(R"({"only": "D1,,C2"})").only, (std::vector<std::string>{"D1", "C2"}));
}

TEST(Config, JsonOverridesBase) {
    const auto c = config_from_json(R"({"seed": 5, "samples": 7, "rel_tol": 1e-8, "only": ["D5", "A1"], "suite": "catalog"})");
    EXPECT_EQ(c.seed, 5u);
    EXPECT_EQ(c.n_samples, 7);
    EXPECT_EQ(c.pol.rel_tol, 1e-8);
    EXPECT_EQ(c.only.size(), 2u);
    EXPECT_EQ(c.suite, Suite::Catalog);
    EXPECT_EQ(c.pol.eps_tail, PrecisionPolicy{}.eps_tail);
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(config_from_json(R"({"sed": 5})"), ConfigError);
    EXPECT_THROW(config_from_json(R"({"samples": "many"})"), ConfigError);
    EXPECT_THROW(config_from_json("[1]"), ConfigError);
    EXPECT_THROW(config_from_json("{"), ConfigError);
    EXPECT_THROW(parse_suite("everything"), ConfigError);
    EXPECT_THROW(parse_format("xml"), ConfigError);
    VerificationConfig v;
    v.pol.eps_tail = -1;
    EXPECT_THROW(v.validate(), ConfigError);
}

TEST(Config, SerializationIsStable) {
    VerificationConfig c;
    c.only = {"C3"};
    const std::string s = config_to_json(c);
    EXPECT_EQ(config_to_json(config_from_json(s)), s);
}

TEST(Run, SameConfigSameBytes) {
    VerificationConfig c;
    c.n_samples = 3;
    c.only = {"2e5", "D11", "A4", "E.11"};
    const auto& cat = builtin_catalog();
    const auto a = run_verification(c, cat, "x", "y");
    c.jobs = 3;
    const auto b = run_verification(c, cat, "x", "y");
    EXPECT_EQ(a.reports, b.reports);
    EXPECT_TRUE(a.all_pass);
    EXPECT_NE(a.reports.find("\"suite\":\"elliptic\""), std::string::npos);
    EXPECT_NE(a.reports.find("\"id\":\"A4\""), std::string::npos);
    EXPECT_EQ(a.reports.find("\"id\":\"A5\""), std::string::npos);
}

TEST(Run, UnknownIdIsAConfigError) {
    VerificationConfig c;
    c.n_samples = 1;
    c.only = {"Z9"};
    EXPECT_THROW(run_verification(c, builtin_catalog(), "x", "y"), ConfigError);
}

TEST(Run, EllipticSamples) {
    const auto s = verify_elliptic(20, 4);
    ASSERT_EQ(s.size(), 20u);
    for (const auto& e : s) {
        EXPECT_TRUE(e.pass);
        EXPECT_LE(std::abs(e.u1), elliptic_u_range);
        EXPECT_GE(e.k, 0.0);
        EXPECT_LE(e.k, 1.0);
    }
}
