#include "hypertheta/addition.hpp"
#include "hypertheta/catalog.hpp"
#include "hypertheta/elliptic.hpp"
#include "hypertheta/harness.hpp"
#include "hypertheta/sampling.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace hypertheta;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kSamples = 100;

int failures = 0;

void report(bool ok, const char* name, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), residual_floor}); }

void identity_suite() {
    const Catalog catalog = load_catalog(HYPERTHETA_SHIPPED_CATALOG);
    const PrecisionPolicy pol;
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = verify_catalog(catalog, kSamples, kSeed, pol);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double worst = 0.0;
    int bad = 0, signed_roots = 0;
    for (const auto& r : reports) {
        worst = std::max(worst, r.rel_residual);
        bad += !(r.error.empty() && r.rel_residual < 1e-9);
        signed_roots += r.sign.has_value();
    }
    const bool ok = bad == 0 && reports.size() == catalog.identities.size() * kSamples && signed_roots == 16 * kSamples &&
                    secs < 60.0;
    report(ok, "identity-suite",
           std::to_string(catalog.identities.size()) + " identities x " + std::to_string(kSamples) + " samples, " +
               std::to_string(bad) + " over 1e-9, max rel " + sci(worst) + ", " + sci(secs) + " s");
}

void addition_suite() {
    const PrecisionPolicy pol;
    const AdditionRun run = verify_addition(kSamples, kSeed, pol);
    double worst_law = 0.0, worst_path = 0.0;
    int bad_law = 0, bad_path = 0;
    for (const auto& r : run.law) {
        worst_law = std::max(worst_law, r.rel_residual);
        bad_law += !(r.error.empty() && r.rel_residual < addition_law_tol);
    }
    for (const auto& r : run.path) {
        worst_path = std::max(worst_path, r.rel_residual);
        bad_path += !(r.error.empty() && r.rel_residual < path_tol);
    }

    double worst_unit = 0.0, worst_comm = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        const auto s = draw_sample(sample_seed(kSeed, i));
        const auto consts = constants_vector(s.tau, pol);
        const auto f1 = f_vector(s.p1, s.tau, pol), f2 = f_vector(s.p2, s.tau, pol), f0 = f_vector({}, s.tau, pol);
        for (const auto& ch : nontrivial_characteristics()) {
            worst_unit = std::max(worst_unit, rel(add_algebraic(ch, f1, f0, consts).value, f1[ch]));
            worst_comm = std::max(worst_comm, rel(add_algebraic(ch, f1, f2, consts).value,
                                                  add_algebraic(ch, f2, f1, consts).value));
        }
    }
    const bool law_ok = bad_law == 0 && run.law.size() == 15u * kSamples && worst_unit < 1e-9 && worst_comm < 1e-10;
    report(law_ok, "addition-law",
           std::to_string(run.law.size()) + " compositions, max rel " + sci(worst_law) + "; identity element " +
               sci(worst_unit) + "; commutativity " + sci(worst_comm) + "; redraws " + std::to_string(run.redraws));
    report(bad_path == 0 && run.path.size() == 15u * kSamples, "path-independence",
           std::to_string(run.path.size()) + " reduced/direct pairs, max rel " + sci(worst_path));
}

void theta_core() {
    const PrecisionPolicy pol;
    double odd = 0.0, factor = 0.0, stability = 0.0, phase = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        const auto s = draw_sample(sample_seed(kSeed, i));
        for (const auto& ch : odd_characteristics()) odd = std::max(odd, std::abs(theta_eval(ch, {}, s.tau, pol)));

        PeriodMatrix diag = s.tau;
        diag.tau12 = 0.0;
        for (int k = 0; k < 16; ++k) {
            const Characteristic ch = from_integer_index(k);
            const cplx v = theta_eval(ch, s.p1, diag, pol);
            const cplx f = oracle::theta1(2 * ch.a.num, 2 * ch.b.num, s.p1.x, diag.tau1, 40) *
                           oracle::theta1(2 * ch.c.num, 2 * ch.d.num, s.p1.y, diag.tau2, 40);
            factor = std::max(factor, std::abs(v - f) / std::max(1.0, std::abs(f)));

            const auto tv = theta_eval_detailed(ch, s.p1, s.tau, pol);
            stability = std::max(stability, std::abs(tv.value - theta_sum(ch, s.p1, s.tau, tv.radius + 10)));
        }
        for (int a2 = -3; a2 <= 3; ++a2) {
            const Characteristic ch = Characteristic::from_halves(a2, 1 - a2, 2 * a2 + 5, -6);
            const auto red = reduce_characteristic(ch);
            const cplx direct = oracle::theta2(a2, 1 - a2, 2 * a2 + 5, -6, s.p1.x, s.p1.y, s.tau.tau1, s.tau.tau2,
                                               s.tau.tau12, 25);
            phase = std::max(phase, std::abs(red.phase * theta_sum(red.ch, s.p1, s.tau, 25) - direct));
        }
    }
    const bool ok = odd < 10 * pol.eps_tail && factor < 4 * pol.eps_tail && stability < 2 * pol.eps_tail && phase < 1e-12;
    report(ok, "theta-core-oracles",
           "odd vanishing " + sci(odd) + ", factorization " + sci(factor) + ", radius stability " + sci(stability) +
               ", reduction phase " + sci(phase));
}

void riemann() {
    const auto M = riemann_matrix();
    bool exact = true;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += M[r][k] * M[k][c];
            exact = exact && M[r][c] == M[c][r] && s == (r == c ? 4 : 0);
        }
    }
    const std::pair<int, int> rows[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const PrecisionPolicy pol;
    double round_trip = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        const auto s = draw_sample(sample_seed(kSeed, i));
        const PeriodMatrix t2 = double_periods(s.tau);
        std::array<cplx, 4> squares{}, products{};
        for (int r = 0; r < 4; ++r) {
            auto [b, d] = rows[r];
            squares[r] = std::pow(theta_eval(Characteristic::integer(0, 0, b, d), s.p1, s.tau, pol), 2);
            products[r] = theta_eval(Characteristic::integer(b, d, 0, 0), 2.0 * s.p1, t2, pol) *
                          theta_eval(Characteristic::integer(b, d, 0, 0), {}, t2, pol);
        }
        std::array<cplx, 4> fwd{}, back{};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) fwd[r] += double(M[r][c]) * products[c];
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) back[r] += 0.25 * M[r][c] * fwd[c];
        for (int r = 0; r < 4; ++r) {
            round_trip = std::max(round_trip, rel(fwd[r], squares[r]));
            round_trip = std::max(round_trip, rel(back[r], products[r]));
        }
    }
    const auto& catalog = builtin_catalog();
    double systems = 0.0;
    for (const auto& r : verify_catalog(catalog, kSamples, kSeed, pol, {"2e28", "2e29", "2e31", "2e32", "2e33", "2e34", "2e35"}))
        systems = std::max(systems, r.rel_residual);
    report(exact && round_trip < 1e-10 && systems < 1e-10, "riemann-matrix",
           std::string(exact ? "symmetric, M^2 = 4I exactly" : "matrix identity broken") + "; round trip " +
               sci(round_trip) + "; forward/inverse systems " + sci(systems));
}

void elliptic() {
    const auto samples = harness::verify_elliptic(kSamples, kSeed);
    double yb = 0.0, comp = 0.0;
    for (const auto& e : samples) {
        yb = std::max(yb, e.yang_baxter);
        comp = std::max(comp, e.components.max_abs());
    }
    double degenerate = 0.0;
    for (double u = -3.0; u <= 3.0; u += 0.25) {
        const auto c = jacobi_eval(u, 0.0), h = jacobi_eval(u, 1.0);
        degenerate = std::max({degenerate, std::abs(c.sn - std::sin(u)), std::abs(c.cn - std::cos(u)), std::abs(c.dn - 1.0),
                               std::abs(h.sn - std::tanh(u)), std::abs(h.cn - 1 / std::cosh(u)),
                               std::abs(h.dn - 1 / std::cosh(u))});
    }
    report(samples.size() == kSamples && yb < 1e-10 && comp < 1e-10 && degenerate < 1e-12, "elliptic-rotations",
           "Yang-Baxter " + sci(yb) + ", six components " + sci(comp) + ", k = 0, 1 limits " + sci(degenerate));
}

void determinism() {
    harness::VerificationConfig config;
    config.n_samples = kSamples;
    const Catalog catalog = load_catalog(HYPERTHETA_SHIPPED_CATALOG);
    const auto a = harness::run_verification(config, catalog, "catalog.json", "digest");
    config.jobs = 4;
    const auto b = harness::run_verification(config, catalog, "catalog.json", "digest");
    const bool ok = a.reports == b.reports && !a.reports.empty();
    report(ok, "determinism", std::to_string(a.reports.size()) + " report bytes, identical across runs and thread counts");
}

}  // namespace

int main() {
    identity_suite();
    addition_suite();
    theta_core();
    riemann();
    elliptic();
    determinism();
    std::printf("%d failed\n", failures);
    return failures == 0 ? 0 : 1;
}
