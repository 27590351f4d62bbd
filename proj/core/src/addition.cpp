#include "hypertheta/addition.hpp"
#include "hypertheta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace hypertheta {

namespace {

cplx lookup16(const std::array<cplx, 16>& values, const Characteristic& ch) {
    const auto red = reduce_characteristic(ch);
    return red.phase * values[static_cast<std::size_t>(integer_index(red.ch))];
}

cplx lookup_table(const DoubledTable& table, const Characteristic& ch) {
    const auto red = reduce_characteristic(ch);
    auto it = table.find(red.ch);
    if (it == table.end()) throw CatalogError("no doubled value for " + red.ch.to_string());
    return red.phase * it->second;
}

// A functional expansion whose lhs is (weight) * Theta[target](2u).
struct Expansion {
    Characteristic target;
    const Identity* identity;
};

const std::vector<Expansion>& expansions() {
    static const std::vector<Expansion> list = [] {
        std::vector<Expansion> out;
        const Catalog& cat = builtin_catalog();
        for (int n = 1; n <= 28; ++n) {
            const Identity& idty = cat.at("C" + std::to_string(n));
            std::optional<Characteristic> target;
            for (const auto& term : idty.lhs) {
                for (const auto& f : term.factors) {
                    if (f.arg == args::twice_first) {
                        const auto canon = reduce_characteristic(f.ch).ch;
                        if (target && *target != canon) throw CatalogError(idty.id + ": mixed expansion targets");
                        target = canon;
                    }
                }
            }
            if (!target) throw CatalogError(idty.id + ": no doubled factor at 2u");
            out.push_back({*target, &idty});
        }
        return out;
    }();
    return list;
}

}  // namespace

cplx ThetaVector::operator[](const Characteristic& ch) const { return lookup16(values, ch); }
cplx FVector::operator[](const Characteristic& ch) const { return lookup16(values, ch); }

ThetaVector FVector::as_theta() const { return ThetaVector{values}; }

cplx ConstantsVector::alpha() const { return lookup_table(doubled_resolved, Characteristic::integer(0, 0, 0, 1)); }
cplx ConstantsVector::beta() const { return lookup_table(doubled_resolved, Characteristic::integer(1, 0, 0, 1)); }
cplx ConstantsVector::gamma() const { return lookup_table(doubled_resolved, Characteristic::integer(0, 0, 1, 0)); }
cplx ConstantsVector::delta() const { return lookup_table(doubled_resolved, Characteristic::integer(0, 1, 1, 0)); }
cplx ConstantsVector::xi() const { return lookup_table(doubled_resolved, Characteristic::integer(0, 0, 1, 1)); }
cplx ConstantsVector::zeta() const { return lookup_table(doubled_resolved, Characteristic::integer(1, 1, 1, 1)); }

const std::vector<AdditionFormula>& addition_formulas() {
    static const std::vector<AdditionFormula> list = [] {
        std::vector<AdditionFormula> out;
        auto ic = Characteristic::integer;
        int n = 1;
        auto add = [&](Characteristic ch, std::vector<std::string> num, std::vector<std::string> den) {
            out.push_back({"A" + std::to_string(n++), ch, std::move(num), std::move(den)});
        };
        for (int r = 1; r < 4; ++r) add(ic(0, 0, r / 2, r % 2), {"B" + std::to_string(1 + r)}, {"B1"});
        // Sectors with upper rows 01, 10, 11 connect to the first through
        // the half-characteristic products.
        const std::array<std::pair<int, int>, 3> uppers{{{0, 1}, {1, 0}, {1, 1}}};
        const std::array<const char*, 3> connector{"B18", "B19", "B17"};
        const std::array<int, 3> first{5, 9, 13};
        for (int s = 0; s < 3; ++s) {
            auto [a, c] = uppers[s];
            add(ic(a, c, 0, 0), {connector[s]}, {"B1"});
            const std::string anchor = "B" + std::to_string(first[s]);
            for (int r = 1; r < 4; ++r)
                add(ic(a, c, r / 2, r % 2), {connector[s], "B" + std::to_string(first[s] + r)}, {anchor, "B1"});
        }
        return out;
    }();
    return list;
}

const AdditionFormula& addition_formula(const Characteristic& ch) {
    const auto canon = reduce_characteristic(ch).ch;
    for (const auto& f : addition_formulas())
        if (f.ch == canon) return f;
    throw std::invalid_argument("no addition formula for " + ch.to_string());
}

const std::array<Characteristic, 15>& nontrivial_characteristics() {
    static const std::array<Characteristic, 15> list = [] {
        std::array<Characteristic, 15> out;
        for (int i = 1; i < 16; ++i) out[static_cast<std::size_t>(i - 1)] = from_integer_index(i);
        return out;
    }();
    return list;
}

HyperellipticValue f_eval(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau,
                          const PrecisionPolicy& pol) {
    const cplx den = theta_eval(Characteristic::integer(0, 0, 0, 0), z, tau, pol);
    if (std::abs(den) < divisor_threshold) throw DivisorHit("theta[0 0; 0 0] vanishes at the point");
    return {ch, theta_eval(ch, z, tau, pol) / den};
}

ThetaVector theta_vector(const EvalPoint& z, const PeriodMatrix& tau, const PrecisionPolicy& pol) {
    ThetaVector t;
    for (int i = 0; i < 16; ++i)
        t.values[static_cast<std::size_t>(i)] = theta_eval(from_integer_index(i), z, tau, pol);
    return t;
}

FVector f_vector(const EvalPoint& z, const PeriodMatrix& tau, const PrecisionPolicy& pol) {
    const ThetaVector t = theta_vector(z, tau, pol);
    if (std::abs(t.values[0]) < divisor_threshold) throw DivisorHit("theta[0 0; 0 0] vanishes at the point");
    FVector f;
    f.point = z;
    f.tau = tau;
    for (std::size_t i = 0; i < 16; ++i) f.values[i] = t.values[i] / t.values[0];
    f.values[0] = 1.0;
    return f;
}

const std::vector<Characteristic>& doubled_characteristics() {
    static const std::vector<Characteristic> list = [] {
        std::vector<Characteristic> out;
        for (int i = 0; i < 16; ++i) out.push_back(from_integer_index(i));
        for (const auto& e : expansions())
            if (!e.target.is_integer()) out.push_back(e.target);
        return out;
    }();
    return list;
}

ConstantsVector constants_vector(const PeriodMatrix& tau, const PrecisionPolicy& pol) {
    require_valid(tau);
    ConstantsVector cv;
    cv.tau = tau;
    SampleAssignment s;
    s.tau = tau;
    ThetaCache cache(s, pol);
    for (int i = 0; i < 16; ++i) {
        const Characteristic ch = from_integer_index(i);
        if (!is_odd(ch)) cv.theta0[ch] = cache(ThetaFactor{ch, args::origin, Scale::Base});
    }
    for (const auto& ch : doubled_characteristics()) {
        if (ch.is_integer() && is_odd(ch)) continue;
        cv.doubled_direct[ch] = cache(ThetaFactor{ch, args::origin, Scale::Doubled});
    }
    const Catalog& cat = builtin_catalog();
    for (int n = 1; n <= 16; ++n) {
        const Identity& d = cat.at("D" + std::to_string(n));
        const auto target = reduce_characteristic(d.root->target).ch;
        const cplx direct = cv.doubled_direct.at(target);
        try {
            const SignResolution sr = resolve_sign(d, cache);
            cv.doubled_resolved[target] = sr.value;
            cv.discrepancy[target] = std::abs(sr.value - direct) / std::max(std::abs(direct), residual_floor);
        } catch (const NoConsistentSign& e) {
            cv.warnings.push_back(e.what());
            cv.doubled_resolved[target] = direct;
            cv.discrepancy[target] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return cv;
}

DoubledTable doubled_table_direct(const EvalPoint& z, const PeriodMatrix& tau, const PrecisionPolicy& pol) {
    const PeriodMatrix doubled = double_periods(tau);
    const EvalPoint twice = 2.0 * z;
    DoubledTable table;
    for (const auto& ch : doubled_characteristics()) table[ch] = theta_eval(ch, twice, doubled, pol);
    return table;
}

DoubledTable doubled_table_reduced(const ThetaVector& theta, const DoubledTable& constants) {
    auto source = [&](const ThetaFactor& f) -> cplx {
        if (f.scale == Scale::Base && f.arg == args::point) return theta[f.ch];
        if (f.scale == Scale::Doubled && f.arg == args::origin) return lookup_table(constants, f.ch);
        throw CatalogError("unexpected factor in a functional expansion");
    };
    DoubledTable table;
    for (const auto& e : expansions()) {
        cplx weight = 0.0;
        for (const auto& term : e.identity->lhs) {
            cplx w = term.coefficient;
            for (const auto& f : term.factors) {
                w *= f.arg == args::twice_first ? reduce_characteristic(f.ch).phase : source(f);
            }
            weight += w;
        }
        if (std::abs(weight) < divisor_threshold)
            throw DegenerateDenominator(e.identity->id + ": near-singular constant combination");
        table[e.target] = evaluate_terms(e.identity->rhs, source) / weight;
    }
    return table;
}

cplx add_from_tables(const Characteristic& ch, const DoubledTable& at_first, const DoubledTable& at_second) {
    const AdditionFormula& formula = addition_formula(ch);
    const Catalog& cat = builtin_catalog();
    auto source = [&](const ThetaFactor& f) -> cplx {
        if (f.scale == Scale::Doubled && f.arg == args::twice_first) return lookup_table(at_first, f.ch);
        if (f.scale == Scale::Doubled && f.arg == args::twice_second) return lookup_table(at_second, f.ch);
        throw CatalogError("unexpected factor in a duplication product");
    };
    auto product = [&](const std::vector<std::string>& ids) {
        cplx p = 1.0;
        for (const auto& id : ids) p *= evaluate_terms(cat.at(id).rhs, source);
        return p;
    };
    const cplx den = product(formula.denominator);
    if (std::abs(den) < divisor_threshold)
        throw DegenerateDenominator(formula.id + ": denominator product vanishes");
    return product(formula.numerator) / den;
}

cplx add_from_theta(const Characteristic& ch, const ThetaVector& t1, const ThetaVector& t2,
                    const ConstantsVector& consts) {
    return add_from_tables(ch, doubled_table_reduced(t1, consts.doubled_resolved),
                           doubled_table_reduced(t2, consts.doubled_resolved));
}

HyperellipticValue add_algebraic(const Characteristic& ch, const FVector& f1, const FVector& f2,
                                 const ConstantsVector& consts) {
    return {ch, add_from_theta(ch, f1.as_theta(), f2.as_theta(), consts)};
}

HyperellipticValue add_direct(const Characteristic& ch, const EvalPoint& p1, const EvalPoint& p2,
                              const PeriodMatrix& tau, const PrecisionPolicy& pol) {
    return {ch, add_from_tables(ch, doubled_table_direct(p1, tau, pol), doubled_table_direct(p2, tau, pol))};
}

namespace {

void require_off_divisor(const SampleAssignment& s, const PrecisionPolicy& pol) {
    const std::array<EvalPoint, 4> points{s.p1, s.p2, s.p1 + s.p2, s.p1 - s.p2};
    for (const auto& z : points) {
        if (std::abs(theta_eval(Characteristic::integer(0, 0, 0, 0), z, s.tau, pol)) < divisor_threshold)
            throw DivisorHit("theta[0 0; 0 0] vanishes at a sample point");
    }
    for (const auto& anchor : {Characteristic::integer(0, 1, 0, 0), Characteristic::integer(1, 0, 0, 0),
                               Characteristic::integer(1, 1, 0, 0)}) {
        for (const auto& z : {points[2], points[3]}) {
            if (std::abs(theta_eval(anchor, z, s.tau, pol)) < divisor_threshold)
                throw DegenerateDenominator("sector anchor vanishes at a sample point");
        }
    }
}

}  // namespace

AdditionRun verify_addition(int n_samples, std::uint64_t seed, const PrecisionPolicy& pol,
                            const SamplingFamily& family, int max_redraws) {
    if (n_samples < 1) throw std::invalid_argument("verify_addition: n_samples must be >= 1");
    pol.validate();
    family.validate();
    const auto& formulas = addition_formulas();
    const std::size_t nf = formulas.size();
    AdditionRun run;
    run.law.resize(nf * static_cast<std::size_t>(n_samples));
    run.path.resize(run.law.size());
    PrecisionPolicy law_pol = pol;
    law_pol.rel_tol = addition_law_tol;
    PrecisionPolicy path_pol = pol;
    path_pol.rel_tol = path_tol;

    for (int s = 0; s < n_samples; ++s) {
        const std::uint64_t base = sample_seed(seed, static_cast<std::uint64_t>(s));
        for (int attempt = 0;; ++attempt) {
            if (attempt > max_redraws) throw Error("verify_addition: too many redraws");
            const std::uint64_t sseed = attempt == 0 ? base : sample_seed(base, static_cast<std::uint64_t>(attempt));
            const SampleAssignment sample = draw_sample(sseed, family);
            try {
                require_off_divisor(sample, pol);
                const ConstantsVector consts = constants_vector(sample.tau, pol);
                const FVector f1 = f_vector(sample.p1, sample.tau, pol);
                const FVector f2 = f_vector(sample.p2, sample.tau, pol);
                const DoubledTable r1 = doubled_table_reduced(f1.as_theta(), consts.doubled_resolved);
                const DoubledTable r2 = doubled_table_reduced(f2.as_theta(), consts.doubled_resolved);
                const DoubledTable d1 = doubled_table_direct(sample.p1, sample.tau, pol);
                const DoubledTable d2 = doubled_table_direct(sample.p2, sample.tau, pol);
                const FVector fsum = f_vector(sample.p1 + sample.p2, sample.tau, pol);
                for (std::size_t i = 0; i < nf; ++i) {
                    const auto& formula = formulas[i];
                    const cplx reduced = add_from_tables(formula.ch, r1, r2);
                    const cplx direct = add_from_tables(formula.ch, d1, d2);
                    const std::size_t slot = i * static_cast<std::size_t>(n_samples) + static_cast<std::size_t>(s);
                    run.law[slot] = compare_values(formula.id, reduced, fsum[formula.ch], law_pol);
                    run.path[slot] = compare_values(formula.id, reduced, direct, path_pol);
                    for (auto* r : {&run.law[slot], &run.path[slot]}) {
                        r->sample = s;
                        r->sample_seed = sseed;
                    }
                }
                for (const auto& w : consts.warnings) run.warnings.push_back("sample " + std::to_string(s) + ": " + w);
                break;
            } catch (const DivisorHit& e) {
                run.warnings.push_back("sample " + std::to_string(s) + " redrawn: " + e.what());
            } catch (const DegenerateDenominator& e) {
                run.warnings.push_back("sample " + std::to_string(s) + " redrawn: " + e.what());
            }
            ++run.redraws;
        }
    }
    return run;
}

}  // namespace hypertheta
