#include "hypertheta/catalog.hpp"
#include "hypertheta/errors.hpp"

#include <cmath>
#include <set>
#include <utility>

namespace hypertheta {

namespace {

using Terms = std::vector<IdentityTerm>;

struct Expr {
    Terms terms;
};

Expr operator+(Expr x, const Expr& y) {
    x.terms.insert(x.terms.end(), y.terms.begin(), y.terms.end());
    return x;
}

Expr operator*(cplx s, Expr x) {
    for (auto& t : x.terms) t.coefficient *= s;
    return x;
}

Expr operator-(const Expr& x) { return cplx(-1.0) * x; }
Expr operator-(const Expr& x, const Expr& y) { return x + (-y); }

Expr operator*(const Expr& x, const Expr& y) {
    Expr out;
    for (const auto& s : x.terms) {
        for (const auto& t : y.terms) {
            IdentityTerm p{s.coefficient * t.coefficient, s.factors};
            p.factors.insert(p.factors.end(), t.factors.begin(), t.factors.end());
            out.terms.push_back(std::move(p));
        }
    }
    return out;
}

Expr sq(const Expr& x) { return x * x; }

Expr scalar(cplx s) { return Expr{{IdentityTerm{s, {}}}}; }

const cplx I1{0.0, 1.0};

Expr th(const Characteristic& ch, ArgSelector arg) {
    return Expr{{IdentityTerm{1.0, {ThetaFactor{ch, arg, Scale::Base}}}}};
}

Expr Th(const Characteristic& ch, ArgSelector arg) {
    return Expr{{IdentityTerm{1.0, {ThetaFactor{ch, arg, Scale::Doubled}}}}};
}

Characteristic ic(int a, int c, int b, int d) { return Characteristic::integer(a, c, b, d); }
Characteristic hc(int a2, int c2, int b2, int d2) { return Characteristic::from_halves(a2, c2, b2, d2); }

constexpr ArgSelector U = args::point;
constexpr ArgSelector O = args::origin;
constexpr ArgSelector U2 = args::twice_first;

std::string bits(int x, int y) { return std::to_string(x) + std::to_string(y); }

// Entries 0/1 of the 2x2 blocks, listed as pairs (first, second).
constexpr std::array<std::pair<int, int>, 4> kPairs{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

class Builder {
public:
    Identity& add(std::string id, std::string family, std::string summary, DomainNote domain,
                  const Expr& lhs, const Expr& rhs, std::vector<std::string> flags = {}) {
        if (!ids_.insert(id).second) throw CatalogError("duplicate identity id " + id);
        Identity idty;
        idty.id = std::move(id);
        idty.family = std::move(family);
        idty.summary = std::move(summary);
        idty.domain = domain;
        idty.lhs = lhs.terms;
        idty.rhs = rhs.terms;
        idty.flags = std::move(flags);
        catalog_.identities.push_back(std::move(idty));
        return catalog_.identities.back();
    }

    Catalog take() { return std::move(catalog_); }

private:
    Catalog catalog_;
    std::set<std::string> ids_;
};

// Two-point product for an integer upper row (a, c) and lower row (b, d):
// theta[a c; b d](p1+p2) theta[a c; 0 0](p1-p2) in doubled-period terms.
std::pair<Expr, Expr> sector_product(int a, int c, int b, int d) {
    Expr lhs = th(ic(a, c, b, d), args::sum) * th(ic(a, c, 0, 0), args::diff);
    Expr rhs;
    for (auto [j, k] : kPairs) {
        rhs = rhs + Th(ic((a + j) % 2, (c + k) % 2, b, d), args::twice_first) *
                        Th(ic(j, k, b, d), args::twice_second);
    }
    return {lhs, rhs};
}

// Products linking theta[a c; 0 0](p1+p2) theta[0 0; 0 0](p1-p2) with the
// half-characteristic doubled thetas; (a2, c2) and (a2', c2') are in halves.
std::pair<Expr, Expr> connector_product(int a, int c, const std::array<std::pair<int, int>, 4>& halves) {
    Expr lhs = th(ic(a, c, 0, 0), args::sum) * th(ic(0, 0, 0, 0), args::diff);
    Expr rhs;
    for (auto [x2, y2] : halves) {
        rhs = rhs + Th(hc(x2, y2, 0, 0), args::twice_first) * Th(hc(x2, y2, 0, 0), args::twice_second);
    }
    return {lhs, rhs};
}

// Functional relation for one lower row: the product theta[ac; L] theta[ac; 0 0](u)
// equals c0 Theta[ac; L](2u) + c1 Theta[partner(ac); L](2u).
struct LowerRowSystem {
    int lb, ld;
    std::array<std::pair<int, int>, 4> order;
    std::pair<int, int> partner_shift;  // added (mod 2) to the upper row
    Characteristic c0, c1;

    Expr product(int r) const {
        auto [a, c] = order[r];
        return th(ic(a, c, lb, ld), U) * th(ic(a, c, 0, 0), U);
    }
    Expr doubled(int r) const {
        auto [a, c] = order[r];
        return Th(ic(a, c, lb, ld), U2);
    }
    int partner(int r) const {
        auto [a, c] = order[r];
        std::pair<int, int> p{(a + partner_shift.first) % 2, (c + partner_shift.second) % 2};
        for (int i = 0; i < 4; ++i)
            if (order[i] == p) return i;
        throw CatalogError("bad partner table");
    }
    Expr k0() const { return Th(c0, O); }
    Expr k1() const { return Th(c1, O); }
    Expr forward_rhs(int r) const {
        const int p = partner(r);
        return k0() * doubled(r) + k1() * doubled(p);
    }
    // (c0^2 - c1^2) Theta[r](2u) = c0 P_r - c1 P_partner
    Expr inverse_lhs(int r) const { return doubled(r) * (sq(k0()) - sq(k1())); }
    Expr inverse_rhs(int r) const { return product(r) * k0() - product(partner(r)) * k1(); }
};

const LowerRowSystem kLower01{0, 1, {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}}, {1, 0}, ic(0, 0, 0, 1), ic(1, 0, 0, 1)};
const LowerRowSystem kLower10{1, 0, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}, {0, 1}, ic(0, 0, 1, 0), ic(0, 1, 1, 0)};
const LowerRowSystem kLower11{1, 1, {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}}, {1, 1}, ic(0, 0, 1, 1), ic(1, 1, 1, 1)};

void add_duplication_families(Builder& B) {
    for (auto [a, c] : kPairs) {
        for (auto [b, d] : kPairs) {
            const std::string tag = "[" + bits(a, c) + ";" + bits(b, d) + "]";
            const Expr lhs = sector_product(a, c, b, d).first;
            Expr rhs_raw;
            for (auto [j, k] : kPairs)
                rhs_raw = rhs_raw + Th(ic(a + j, c + k, b, d), args::twice_first) *
                                        Th(ic(j, k, b, d), args::twice_second);
            B.add("2e4" + tag, "duplication", "two-point product with theta[a c; 0 0] at the difference",
                  DomainNote::TwoPoint, lhs, rhs_raw);
        }
    }
    for (auto [a, c] : kPairs) {
        for (auto [b, d] : kPairs) {
            const std::string tag = "[" + bits(a, c) + ";" + bits(b, d) + "]";
            Expr rhs;
            for (auto [j, k] : kPairs)
                rhs = rhs + Th(ic(a + j, c + k, 2 * b, 2 * d), U2) * Th(ic(j, k, 0, 0), O);
            B.add("2e5" + tag, "duplication", "squared theta through doubled-period values",
                  DomainNote::OnePoint, sq(th(ic(a, c, b, d), U)), rhs);
        }
    }
    for (auto [a, c] : kPairs) {
        for (auto [b, d] : kPairs) {
            const std::string tag = "[" + bits(a, c) + ";" + bits(b, d) + "]";
            Expr rhs;
            for (auto [j, k] : kPairs)
                rhs = rhs + Th(ic(a + j, c + k, b, d), U2) * Th(ic(j, k, b, d), O);
            B.add("2e6" + tag, "duplication", "theta[a c; b d] theta[a c; 0 0] at one point",
                  DomainNote::OnePoint, th(ic(a, c, b, d), U) * th(ic(a, c, 0, 0), U), rhs);
        }
    }
}

void add_sectors(Builder& B) {
    const std::array<std::pair<int, int>, 4> uppers{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    const std::array<int, 4> first_id{8, 13, 18, 23};
    int bnum = 1;
    for (int s = 0; s < 4; ++s) {
        auto [a, c] = uppers[s];
        for (int r = 0; r < 4; ++r) {
            auto [b, d] = kPairs[r];
            auto [lhs, rhs] = sector_product(a, c, b, d);
            const std::string what = "sector product [" + bits(a, c) + ";" + bits(b, d) + "]";
            B.add("2e" + std::to_string(first_id[s] + r), "sector", what, DomainNote::TwoPoint, lhs, rhs);
            B.add("B" + std::to_string(bnum++), "duplication-products", what, DomainNote::TwoPoint, lhs, rhs);
        }
    }
}

const std::array<std::pair<int, int>, 4> kHalvesD{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
const std::array<std::pair<int, int>, 4> kHalvesB{{{0, 1}, {0, -1}, {2, 1}, {2, -1}}};
const std::array<std::pair<int, int>, 4> kHalvesC{{{1, 0}, {-1, 0}, {1, 2}, {-1, 2}}};

void add_connectors(Builder& B) {
    struct Spec {
        const char* id;
        const char* bid;
        int a, c;
        const std::array<std::pair<int, int>, 4>* halves;
    };
    const std::array<Spec, 3> specs{{{"2e42", "B17", 1, 1, &kHalvesD},
                                     {"2e54", "B18", 0, 1, &kHalvesB},
                                     {"2e65", "B19", 1, 0, &kHalvesC}}};
    for (const auto& s : specs) {
        auto [lhs, rhs] = connector_product(s.a, s.c, *s.halves);
        const std::string what = "connector product theta[" + bits(s.a, s.c) + ";00] theta[00;00]";
        B.add(s.id, "connector", what, DomainNote::TwoPoint, lhs, rhs);
        B.add(s.bid, "duplication-products", what, DomainNote::TwoPoint, lhs, rhs);
    }
}

Expr riemann_apply_row(int r, const std::array<Expr, 4>& v, double scale = 1.0) {
    const auto M = riemann_matrix();
    Expr out;
    for (int j = 0; j < 4; ++j) out = out + cplx(scale * M[r][j]) * v[j];
    return out;
}

void add_functional(Builder& B) {
    std::array<Expr, 4> sq_base, dbl_pairs, sq_base0, sq_dbl0;
    for (int i = 0; i < 4; ++i) {
        auto [b, d] = kPairs[i];
        auto [j, k] = kPairs[i];
        sq_base[i] = sq(th(ic(0, 0, b, d), U));
        sq_base0[i] = sq(th(ic(0, 0, b, d), O));
        dbl_pairs[i] = Th(ic(j, k, 0, 0), U2) * Th(ic(j, k, 0, 0), O);
        sq_dbl0[i] = sq(Th(ic(j, k, 0, 0), O));
    }
    for (int i = 0; i < 4; ++i) {
        auto [b, d] = kPairs[i];
        Expr rhs;
        for (auto [j, k] : kPairs) rhs = rhs + Th(ic(j, k, 2 * b, 2 * d), U2) * Th(ic(j, k, 0, 0), O);
        B.add("2e27[" + bits(b, d) + "]", "functional", "squared theta[0 0; b d] before sign packaging",
              DomainNote::OnePoint, sq_base[i], rhs);
    }
    for (int r = 0; r < 4; ++r) {
        const std::string n = std::to_string(r + 1);
        B.add("2e28." + n, "functional", "squared thetas as the Riemann matrix on doubled products, row " + n,
              DomainNote::OnePoint, sq_base[r], riemann_apply_row(r, dbl_pairs));
    }
    for (int r = 0; r < 4; ++r) {
        const std::string n = std::to_string(r + 1);
        Expr rhs = riemann_apply_row(r, sq_base, 0.25);
        B.add("2e29." + n, "functional", "inverse Riemann relation, row " + n, DomainNote::OnePoint,
              dbl_pairs[r], rhs);
    }
    for (auto [a, c] : kPairs) {
        Expr lhs = th(ic(a, c, 0, 1), U) * th(ic(a, c, 0, 0), U);
        Expr rhs = Th(ic(a, c, 0, 1), U2) * Th(ic(0, 0, 0, 1), O) +
                   Th(ic((a + 1) % 2, c, 0, 1), U2) * Th(ic(1, 0, 0, 1), O);
        B.add("2e30[" + bits(a, c) + "]", "functional", "two-term product with lower row 0 1",
              DomainNote::OnePoint, lhs, rhs);
    }
    auto add_forward = [&](const std::string& id, const LowerRowSystem& sys) {
        for (int r = 0; r < 4; ++r) {
            const std::string n = std::to_string(r + 1);
            B.add(id + "." + n, "functional", "product vector from doubled values, row " + n,
                  DomainNote::OnePoint, sys.product(r), sys.forward_rhs(r));
        }
    };
    auto add_inverse = [&](const std::string& id, const LowerRowSystem& sys) {
        for (int r = 0; r < 4; ++r) {
            const std::string n = std::to_string(r + 1);
            B.add(id + "." + n, "functional", "doubled values from the product vector, row " + n,
                  DomainNote::OnePoint, sys.inverse_lhs(r), sys.inverse_rhs(r));
        }
    };
    add_forward("2e31", kLower01);
    add_inverse("2e32", kLower01);
    add_inverse("2e33", kLower10);
    add_forward("2e34", kLower11);
    add_inverse("2e35", kLower11);

    for (int r = 0; r < 4; ++r) {
        const std::string n = std::to_string(r + 1);
        B.add("2e36." + n, "constants", "squared doubled constants from squared constants, row " + n,
              DomainNote::ConstantsOnly, sq_dbl0[r], riemann_apply_row(r, sq_base0, 0.25));
    }

    auto k = [](int a, int c, int b, int d) { return Th(ic(a, c, b, d), O); };
    auto t0 = [](int a, int c, int b, int d) { return th(ic(a, c, b, d), O); };
    const Expr al = k(0, 0, 0, 1), be = k(1, 0, 0, 1);
    const Expr ga = k(0, 0, 1, 0), de = k(0, 1, 1, 0);
    const Expr xi = k(0, 0, 1, 1), ze = k(1, 1, 1, 1);
    const Expr p01 = t0(0, 0, 0, 1) * t0(0, 0, 0, 0), q01 = t0(1, 0, 0, 1) * t0(1, 0, 0, 0);
    const Expr p10 = t0(0, 0, 1, 0) * t0(0, 0, 0, 0), q10 = t0(0, 1, 1, 0) * t0(0, 1, 0, 0);
    const Expr p11 = t0(0, 0, 1, 1) * t0(0, 0, 0, 0), q11 = t0(1, 1, 1, 1) * t0(1, 1, 0, 0);

    B.add("2e37.1", "constants", "sum of squared alpha and beta", DomainNote::ConstantsOnly, p01,
          sq(al) + sq(be));
    B.add("2e37.2", "constants", "twice alpha beta", DomainNote::ConstantsOnly, q01, scalar(2.0) * al * be);
    B.add("2e38+", "constants", "(alpha + beta)^2", DomainNote::ConstantsOnly, sq(al + be), p01 + q01);
    B.add("2e38-", "constants", "(alpha - beta)^2", DomainNote::ConstantsOnly, sq(al - be), p01 - q01);
    B.add("2e39+", "constants", "(gamma + delta)^2", DomainNote::ConstantsOnly, sq(ga + de), p10 + q10);
    B.add("2e39-", "constants", "(gamma - delta)^2", DomainNote::ConstantsOnly, sq(ga - de), p10 - q10);
    B.add("2e40.1", "constants", "sum of squared xi and zeta", DomainNote::ConstantsOnly, p11,
          sq(xi) + sq(ze));
    B.add("2e40.2", "constants", "twice xi zeta", DomainNote::ConstantsOnly, q11, scalar(2.0) * xi * ze);
    B.add("2e41+", "constants", "(xi + zeta)^2", DomainNote::ConstantsOnly, sq(xi + ze), p11 + q11);
    B.add("2e41-", "constants", "(xi - zeta)^2", DomainNote::ConstantsOnly, sq(xi - ze), p11 - q11);
}

// Half-characteristic doubled thetas at 2u, indexed by halves.
Expr S(int a2, int c2) { return Th(hc(a2, c2, 0, 0), U2); }
Expr S0(int a2, int c2) { return Th(hc(a2, c2, 0, 0), O); }

const char* kFlagOrigin = "typo: second lhs factor printed at the origin, encoded at (u,v)";
const char* kFlagTwiceFirst = "typo: rhs argument printed as 2u1, encoded as 2u";

void add_connections(Builder& B) {
    const Expr P = S0(1, 1), Q = S0(1, -1);
    const Expr ev_pp = S(1, 1) + S(-1, -1), ev_pm = S(1, -1) + S(-1, 1);
    const Expr od_pp = S(1, 1) - S(-1, -1), od_pm = S(1, -1) - S(-1, 1);
    auto t = [](int a, int c, int b, int d) { return th(ic(a, c, b, d), U); };
    auto t0 = [](int a, int c, int b, int d) { return th(ic(a, c, b, d), O); };

    B.add("2e47", "connection", "theta[11;00] theta[00;00](u)", DomainNote::OnePoint,
          t(1, 1, 0, 0) * t(0, 0, 0, 0), ev_pp * P + ev_pm * Q);
    B.add("2e48", "connection", "theta[01;00] theta[10;00](u)", DomainNote::OnePoint,
          t(0, 1, 0, 0) * t(1, 0, 0, 0), ev_pm * P + ev_pp * Q);
    B.add("2e49", "connection", "theta[11;10] theta[00;10](u)", DomainNote::OnePoint,
          t(1, 1, 1, 0) * t(0, 0, 1, 0), I1 * (od_pp * P) + I1 * (od_pm * Q));
    B.add("2e50", "connection", "theta[10;10] theta[01;10](u)", DomainNote::OnePoint,
          t(1, 0, 1, 0) * t(0, 1, 1, 0), I1 * (od_pp * Q) + I1 * (od_pm * P));
    const Expr A0 = t0(1, 1, 0, 0) * t0(0, 0, 0, 0), B0 = t0(0, 1, 0, 0) * t0(1, 0, 0, 0);
    B.add("2e51", "connection-constants", "theta[11;00] theta[00;00](0)", DomainNote::ConstantsOnly, A0,
          scalar(2.0) * (sq(P) + sq(Q)));
    B.add("2e52", "connection-constants", "theta[01;00] theta[10;00](0)", DomainNote::ConstantsOnly, B0,
          scalar(4.0) * P * Q);
    const std::vector<std::string> f53{"typo: lhs printed as one product twice; encoded as "
                                       "theta[11;00]theta[00;00] +- theta[01;00]theta[10;00]"};
    B.add("2e53+", "connection-constants", "sum of the two constant products", DomainNote::ConstantsOnly,
          A0 + B0, scalar(2.0) * sq(P + Q), f53);
    B.add("2e53-", "connection-constants", "difference of the two constant products",
          DomainNote::ConstantsOnly, A0 - B0, scalar(2.0) * sq(P - Q), f53);

    // Upper row (0 1) against Theta[0 +-1/2] and Theta[1 +-1/2].
    {
        const Expr K0 = S0(0, 1), K1 = S0(2, 1);
        const Expr e0 = S(0, 1) + S(0, -1), e1 = S(2, 1) + S(2, -1);
        const Expr o0 = S(0, 1) - S(0, -1), o1 = S(2, 1) - S(2, -1);
        const std::vector<std::string> flags{kFlagOrigin, kFlagTwiceFirst};
        B.add("2e59", "connection", "theta[01;00] theta[00;00](u)", DomainNote::OnePoint,
              t(0, 1, 0, 0) * t(0, 0, 0, 0), e0 * K0 + e1 * K1, flags);
        B.add("2e60", "connection", "theta[01;10] theta[00;10](u)", DomainNote::OnePoint,
              t(0, 1, 1, 0) * t(0, 0, 1, 0), e0 * K0 - e1 * K1, flags);
        B.add("2e61", "connection", "theta[01;01] theta[00;01](u)", DomainNote::OnePoint,
              t(0, 1, 0, 1) * t(0, 0, 0, 1), I1 * (o0 * K0) + I1 * (o1 * K1));
        B.add("2e62", "connection", "theta[01;11] theta[00;11](u)", DomainNote::OnePoint,
              t(0, 1, 1, 1) * t(0, 0, 1, 1), I1 * (o0 * K0) - I1 * (o1 * K1));
        B.add("2e63", "connection-constants", "theta[01;00] theta[00;00](0)", DomainNote::ConstantsOnly,
              t0(0, 1, 0, 0) * t0(0, 0, 0, 0), scalar(2.0) * (sq(K0) + sq(K1)));
        B.add("2e64", "connection-constants", "theta[01;10] theta[00;10](0)", DomainNote::ConstantsOnly,
              t0(0, 1, 1, 0) * t0(0, 0, 1, 0), scalar(2.0) * (sq(K0) - sq(K1)));
    }
    // Upper row (1 0) against Theta[+-1/2 0] and Theta[+-1/2 1].
    {
        const Expr L0 = S0(1, 0), L1 = S0(1, 2);
        const Expr e0 = S(1, 0) + S(-1, 0), e1 = S(1, 2) + S(-1, 2);
        const Expr o0 = S(1, 0) - S(-1, 0), o1 = S(1, 2) - S(-1, 2);
        const std::vector<std::string> flags{kFlagOrigin, kFlagTwiceFirst};
        B.add("2e70", "connection", "theta[10;00] theta[00;00](u)", DomainNote::OnePoint,
              t(1, 0, 0, 0) * t(0, 0, 0, 0), e0 * L0 + e1 * L1, flags);
        B.add("2e71", "connection", "theta[10;01] theta[00;01](u)", DomainNote::OnePoint,
              t(1, 0, 0, 1) * t(0, 0, 0, 1), e0 * L0 - e1 * L1, flags);
        B.add("2e72", "connection", "theta[10;10] theta[00;10](u)", DomainNote::OnePoint,
              t(1, 0, 1, 0) * t(0, 0, 1, 0), I1 * (o0 * L0) + I1 * (o1 * L1));
        B.add("2e73", "connection", "theta[10;11] theta[00;11](u)", DomainNote::OnePoint,
              t(1, 0, 1, 1) * t(0, 0, 1, 1), I1 * (o0 * L0) - I1 * (o1 * L1));
        B.add("2e74", "connection-constants", "theta[10;00] theta[00;00](0)", DomainNote::ConstantsOnly,
              t0(1, 0, 0, 0) * t0(0, 0, 0, 0), scalar(2.0) * (sq(L0) + sq(L1)),
              {"typo: first squared constant printed as Theta[0 1/2], encoded as Theta[1/2 0]"});
        B.add("2e75", "connection-constants", "theta[10;01] theta[00;01](0)", DomainNote::ConstantsOnly,
              t0(1, 0, 0, 1) * t0(0, 0, 0, 1), scalar(2.0) * (sq(L0) - sq(L1)));
    }
}

void add_expansion_products(Builder& B) {
    std::array<Expr, 4> sq_base, dbl_pairs;
    for (int i = 0; i < 4; ++i) {
        auto [b, d] = kPairs[i];
        sq_base[i] = sq(th(ic(0, 0, b, d), U));
        dbl_pairs[i] = Th(ic(b, d, 0, 0), U2) * Th(ic(b, d, 0, 0), O);
    }
    int n = 1;
    for (int r = 0; r < 4; ++r)
        B.add("C" + std::to_string(n++), "functional-expansions", "doubled product from squared thetas",
              DomainNote::OnePoint, dbl_pairs[r], riemann_apply_row(r, sq_base, 0.25));
    for (const LowerRowSystem* sys : {&kLower01, &kLower10, &kLower11}) {
        for (int r = 0; r < 4; ++r)
            B.add("C" + std::to_string(n++), "functional-expansions",
                  "doubled theta with lower row " + bits(sys->lb, sys->ld) + " from products",
                  DomainNote::OnePoint, sys->inverse_lhs(r), sys->inverse_rhs(r));
    }

    auto t = [](int a, int c, int b, int d) { return th(ic(a, c, b, d), U); };
    {
        const Expr P = S0(1, 1), Q = S0(1, -1);
        const Expr A1 = t(1, 1, 0, 0) * t(0, 0, 0, 0), B1 = t(0, 1, 0, 0) * t(1, 0, 0, 0);
        const Expr A2 = t(1, 1, 1, 0) * t(0, 0, 1, 0), B2 = t(1, 0, 1, 0) * t(0, 1, 1, 0);
        const Expr det = sq(P) - sq(Q);
        const Expr even_a = A1 * P - B1 * Q, odd_a = A2 * P - B2 * Q;
        const Expr even_b = B1 * P - A1 * Q, odd_b = A2 * Q - B2 * P;
        const std::string what = "half-characteristic doubled theta, upper row +-1/2 +-1/2";
        B.add("C17", "functional-expansions", what, DomainNote::OnePoint, scalar(2.0) * S(1, 1) * det,
              even_a - I1 * odd_a);
        B.add("C18", "functional-expansions", what, DomainNote::OnePoint, scalar(2.0) * S(-1, -1) * det,
              even_a + I1 * odd_a);
        B.add("C19", "functional-expansions", what, DomainNote::OnePoint, scalar(2.0) * S(1, -1) * det,
              even_b + I1 * odd_b);
        B.add("C20", "functional-expansions", what, DomainNote::OnePoint, scalar(2.0) * S(-1, 1) * det,
              even_b - I1 * odd_b);
        n += 4;
    }
    {
        const Expr X = t(0, 1, 0, 0) * t(0, 0, 0, 0), Y = t(0, 1, 1, 0) * t(0, 0, 1, 0);
        const Expr Z1 = t(0, 1, 0, 1) * t(0, 0, 0, 1), Z2 = t(0, 1, 1, 1) * t(0, 0, 1, 1);
        const std::array<std::pair<int, int>, 4> targets{{{0, 1}, {0, -1}, {2, 1}, {2, -1}}};
        for (auto [s1, s2] : targets) {
            const cplx sg = s1 == 0 ? 1.0 : -1.0;
            const cplx si = s2 > 0 ? -I1 : I1;
            B.add("C" + std::to_string(n++), "functional-expansions",
                  "half-characteristic doubled theta, upper row 0/1 and +-1/2", DomainNote::OnePoint,
                  scalar(4.0) * S(s1, s2) * S0(s1, 1), X + sg * Y + si * (Z1 + sg * Z2));
        }
    }
    {
        const Expr X = t(1, 0, 0, 0) * t(0, 0, 0, 0), Y = t(1, 0, 0, 1) * t(0, 0, 0, 1);
        const Expr Z1 = t(1, 0, 1, 0) * t(0, 0, 1, 0), Z2 = t(1, 0, 1, 1) * t(0, 0, 1, 1);
        const std::array<std::pair<int, int>, 4> targets{{{1, 0}, {-1, 0}, {1, 2}, {-1, 2}}};
        for (auto [s1, s2] : targets) {
            const cplx sg = s2 == 0 ? 1.0 : -1.0;
            const cplx si = s1 > 0 ? -I1 : I1;
            B.add("C" + std::to_string(n++), "functional-expansions",
                  "half-characteristic doubled theta, upper row +-1/2 and 0/1", DomainNote::OnePoint,
                  scalar(4.0) * S(s1, s2) * S0(1, s2), X + sg * Y + si * (Z1 + sg * Z2));
        }
    }
}

RootForm make_root(const Characteristic& target, double prefactor, std::vector<int> signs,
                   std::vector<Expr> radicands) {
    RootForm root;
    root.target = target;
    root.prefactor = prefactor;
    root.printed_signs = std::move(signs);
    for (auto& r : radicands) root.radicands.push_back(r.terms);
    return root;
}

void add_constant_roots(Builder& B) {
    auto t0 = [](int a, int c, int b, int d) { return th(ic(a, c, b, d), O); };
    std::array<Expr, 4> sq_base0;
    for (int i = 0; i < 4; ++i) {
        auto [b, d] = kPairs[i];
        sq_base0[i] = sq(t0(0, 0, b, d));
    }
    int n = 1;
    for (int r = 0; r < 4; ++r) {
        auto [j, k] = kPairs[r];
        const Characteristic target = ic(j, k, 0, 0);
        Expr radicand = riemann_apply_row(r, sq_base0);
        auto& idty = B.add("D" + std::to_string(n++), "constants-roots",
                           "doubled constant [" + bits(j, k) + ";00] as one root", DomainNote::ConstantsOnly,
                           sq(Th(target, O)), scalar(0.25) * radicand);
        idty.root = make_root(target, 0.5, {1}, {radicand});
    }

    struct Two {
        Characteristic target;
        Expr A, B;
        double prefactor;
        int second_sign;
    };
    const Expr p01 = t0(0, 0, 0, 1) * t0(0, 0, 0, 0), q01 = t0(1, 0, 0, 1) * t0(1, 0, 0, 0);
    const Expr p10 = t0(0, 0, 1, 0) * t0(0, 0, 0, 0), q10 = t0(0, 1, 1, 0) * t0(0, 1, 0, 0);
    const Expr p11 = t0(0, 0, 1, 1) * t0(0, 0, 0, 0), q11 = t0(1, 1, 1, 1) * t0(1, 1, 0, 0);
    const Expr a0 = t0(1, 1, 0, 0) * t0(0, 0, 0, 0), b0 = t0(0, 1, 0, 0) * t0(1, 0, 0, 0);
    const double inv_2sqrt2 = 1.0 / (2.0 * std::sqrt(2.0));
    const std::vector<Two> twos{
        {ic(0, 0, 0, 1), p01 + q01, p01 - q01, 0.5, 1},
        {ic(1, 0, 0, 1), p01 + q01, p01 - q01, 0.5, -1},
        {ic(0, 0, 1, 0), p10 + q10, p10 - q10, 0.5, 1},
        {ic(0, 1, 1, 0), p10 + q10, p10 - q10, 0.5, -1},
        {ic(0, 0, 1, 1), p11 + q11, p11 - q11, 0.5, 1},
        {ic(1, 1, 1, 1), p11 + q11, p11 - q11, 0.5, -1},
        {hc(1, 1, 0, 0), a0 + b0, a0 - b0, inv_2sqrt2, -1},
        {hc(1, -1, 0, 0), a0 + b0, a0 - b0, inv_2sqrt2, 1},
    };
    for (const auto& w : twos) {
        // Theta = p (s1 sqrt(A) + s2 sqrt(B))  =>  ((Theta/p)^2 - A - B)^2 = 4 A B.
        const double inv_p2 = 1.0 / (w.prefactor * w.prefactor);
        const Expr inner = scalar(std::round(inv_p2)) * sq(Th(w.target, O)) - w.A - w.B;
        auto& idty = B.add("D" + std::to_string(n++), "constants-roots",
                           "doubled constant " + w.target.to_string() + " as two roots",
                           DomainNote::ConstantsOnly, sq(inner), scalar(4.0) * w.A * w.B);
        idty.root = make_root(w.target, w.prefactor, {1, w.second_sign}, {w.A, w.B});
    }

    struct One {
        Characteristic target;
        Expr radicand;
    };
    const std::vector<One> ones{
        {hc(0, 1, 0, 0), t0(0, 1, 0, 0) * t0(0, 0, 0, 0) + t0(0, 1, 1, 0) * t0(0, 0, 1, 0)},
        {hc(1, 0, 0, 0), t0(1, 0, 0, 0) * t0(0, 0, 0, 0) + t0(1, 0, 0, 1) * t0(0, 0, 0, 1)},
        {hc(2, 1, 0, 0), t0(0, 1, 0, 0) * t0(0, 0, 0, 0) - t0(0, 1, 1, 0) * t0(0, 0, 1, 0)},
        {hc(1, 2, 0, 0), t0(1, 0, 0, 0) * t0(0, 0, 0, 0) - t0(1, 0, 0, 1) * t0(0, 0, 0, 1)},
    };
    for (const auto& o : ones) {
        auto& idty = B.add("D" + std::to_string(n++), "constants-roots",
                           "doubled constant " + o.target.to_string() + " as one root",
                           DomainNote::ConstantsOnly, sq(Th(o.target, O)), scalar(0.25) * o.radicand);
        idty.root = make_root(o.target, 0.5, {1}, {o.radicand});
    }
}

}  // namespace

EvalPoint ArgSelector::apply(const EvalPoint& p1, const EvalPoint& p2) const {
    EvalPoint z;
    z.x = static_cast<double>(c1) * p1.x + static_cast<double>(c2) * p2.x;
    z.y = static_cast<double>(c1) * p1.y + static_cast<double>(c2) * p2.y;
    return z;
}

std::array<std::array<int, 4>, 4> riemann_matrix() {
    std::array<std::array<int, 4>, 4> M{};
    for (int r = 0; r < 4; ++r) {
        auto [b, d] = kPairs[r];
        for (int c = 0; c < 4; ++c) {
            auto [j, k] = kPairs[c];
            M[r][c] = ((j * b + k * d) % 2 == 0) ? 1 : -1;
        }
    }
    return M;
}

Identity general_duplication(int a, int c, int b, int d, int e, int g, int f, int h) {
    Expr lhs = th(ic(a, c, b, d), args::sum) * th(ic(e, g, f, h), args::diff);
    Expr rhs;
    for (auto [j, k] : kPairs) {
        rhs = rhs + Th(hc(a + e + 2 * j, c + g + 2 * k, 2 * (b + f), 2 * (d + h)), args::twice_first) *
                        Th(hc(a - e + 2 * j, c - g + 2 * k, 2 * (b - f), 2 * (d - h)), args::twice_second);
    }
    Identity idty;
    idty.id = "general" + ic(a, c, b, d).to_string() + ic(e, g, f, h).to_string();
    idty.family = "general-duplication";
    idty.summary = "theta[a c; b d](p1+p2) theta[e g; f h](p1-p2)";
    idty.domain = DomainNote::TwoPoint;
    idty.lhs = lhs.terms;
    idty.rhs = rhs.terms;
    return idty;
}

Catalog build_catalog() {
    Builder B;
    add_duplication_families(B);
    add_sectors(B);
    add_connectors(B);
    add_functional(B);
    add_connections(B);
    add_expansion_products(B);
    add_constant_roots(B);
    return B.take();
}

const Catalog& builtin_catalog() {
    static const Catalog catalog = build_catalog();
    return catalog;
}

const Identity* Catalog::find(const std::string& id) const {
    for (const auto& idty : identities)
        if (idty.id == id) return &idty;
    return nullptr;
}

const Identity& Catalog::at(const std::string& id) const {
    if (const Identity* p = find(id)) return *p;
    throw CatalogError("unknown identity id " + id);
}

std::vector<const Identity*> Catalog::group(const std::string& id) const {
    std::vector<const Identity*> out;
    for (const auto& idty : identities) {
        const std::string& s = idty.id;
        if (s == id) {
            out.push_back(&idty);
        } else if (s.size() > id.size() && s.compare(0, id.size(), id) == 0) {
            const char next = s[id.size()];
            if (next == '.' || next == '[' || next == '+' || next == '-') out.push_back(&idty);
        }
    }
    return out;
}

std::string domain_name(DomainNote d) {
    switch (d) {
        case DomainNote::TwoPoint: return "TwoPoint";
        case DomainNote::OnePoint: return "OnePoint";
        case DomainNote::ConstantsOnly: return "ConstantsOnly";
    }
    return "OnePoint";
}

}  // namespace hypertheta
