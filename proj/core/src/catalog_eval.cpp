#include "hypertheta/catalog.hpp"
#include "hypertheta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace hypertheta {

cplx evaluate_terms(const std::vector<IdentityTerm>& terms, const FactorSource& source) {
    cplx total = 0.0;
    for (const auto& t : terms) {
        cplx v = t.coefficient;
        for (const auto& f : t.factors) v *= source(f);
        total += v;
    }
    return total;
}

ThetaCache::ThetaCache(const SampleAssignment& sample, const PrecisionPolicy& pol)
    : sample_(sample), doubled_(double_periods(sample.tau)), pol_(pol) {}

cplx ThetaCache::operator()(const ThetaFactor& f) {
    const auto red = reduce_characteristic(f.ch);
    const auto key = std::make_tuple(red.ch, f.arg, f.scale);
    auto it = values_.find(key);
    if (it == values_.end()) {
        const EvalPoint z = f.arg.apply(sample_.p1, sample_.p2);
        const PeriodMatrix& tau = f.scale == Scale::Base ? sample_.tau : doubled_;
        it = values_.emplace(key, theta_eval(red.ch, z, tau, pol_)).first;
    }
    return red.phase * it->second;
}

ResidualReport compare_values(const std::string& id, cplx lhs, cplx rhs, const PrecisionPolicy& pol) {
    ResidualReport r;
    r.id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    r.rel_residual = r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), residual_floor});
    r.pass = r.rel_residual < pol.rel_tol || r.abs_residual < pol.abs_tol;
    if (!std::isfinite(r.abs_residual)) r.pass = false;
    return r;
}

namespace {

std::vector<cplx> root_values(const RootForm& root, ThetaCache& cache) {
    std::vector<cplx> out;
    for (const auto& rad : root.radicands) out.push_back(std::sqrt(evaluate_terms(rad, std::ref(cache))));
    return out;
}

}  // namespace

SignResolution resolve_sign(const Identity& d_identity, ThetaCache& cache) {
    if (!d_identity.root) throw CatalogError(d_identity.id + " has no root form");
    const RootForm& root = *d_identity.root;
    const auto roots = root_values(root, cache);
    const cplx direct = cache(ThetaFactor{root.target, args::origin, Scale::Doubled});
    const std::size_t n = roots.size();

    SignResolution best;
    best.direct = direct;
    best.rel_residual = std::numeric_limits<double>::infinity();
    // mask bit i flips root i; mask 0 is the printed principal-branch reading.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        cplx value = 0.0;
        std::vector<int> signs(n);
        for (std::size_t i = 0; i < n; ++i) {
            signs[i] = (mask >> i) & 1u ? -1 : 1;
            value += static_cast<double>(signs[i] * root.printed_signs[i]) * roots[i];
        }
        value *= root.prefactor;
        const double rel =
            std::abs(value - direct) / std::max({std::abs(value), std::abs(direct), residual_floor});
        if (rel < best.rel_residual) {
            best.value = value;
            best.signs = signs;
            best.rel_residual = rel;
        }
        if (rel < sign_match_tol) return best;
    }
    throw NoConsistentSign(d_identity.id + ": no sign assignment matches the direct value (best rel " +
                           std::to_string(best.rel_residual) + ")");
}

SignResolution resolve_sign(const Identity& d_identity, const PeriodMatrix& tau, const PrecisionPolicy& pol) {
    SampleAssignment s;
    s.tau = tau;
    ThetaCache cache(s, pol);
    return resolve_sign(d_identity, cache);
}

SignResolution resolve_sign(const std::string& d_id, const PeriodMatrix& tau, const PrecisionPolicy& pol) {
    const Catalog& catalog = builtin_catalog();
    return resolve_sign(catalog.at(d_id), tau, pol);
}

ResidualReport evaluate_identity(const Identity& idty, ThetaCache& cache, const PrecisionPolicy& pol) {
    const FactorSource source = std::ref(cache);
    ResidualReport r =
        compare_values(idty.id, evaluate_terms(idty.lhs, source), evaluate_terms(idty.rhs, source), pol);
    r.sample_seed = cache.sample().seed;
    if (idty.root) {
        try {
            r.sign = resolve_sign(idty, cache);
        } catch (const NoConsistentSign& e) {
            r.pass = false;
            r.error = e.what();
        }
    }
    return r;
}

ResidualReport evaluate_identity(const Identity& idty, const SampleAssignment& s, const PrecisionPolicy& pol) {
    ThetaCache cache(s, pol);
    return evaluate_identity(idty, cache, pol);
}

std::vector<ResidualReport> verify_catalog(const Catalog& catalog, int n_samples, std::uint64_t seed,
                                           const PrecisionPolicy& pol, const std::vector<std::string>& only,
                                           const SamplingFamily& family, int jobs) {
    if (n_samples < 1) throw std::invalid_argument("verify_catalog: n_samples must be >= 1");
    pol.validate();
    family.validate();

    std::vector<const Identity*> selected;
    if (only.empty()) {
        for (const auto& idty : catalog.identities) selected.push_back(&idty);
    } else {
        for (const auto& id : only) {
            auto g = catalog.group(id);
            if (g.empty()) throw CatalogError("unknown identity id " + id);
            selected.insert(selected.end(), g.begin(), g.end());
        }
    }

    const std::size_t n_id = selected.size();
    std::vector<ResidualReport> reports(n_id * static_cast<std::size_t>(n_samples));

    auto run_sample = [&](int s) {
        const auto sseed = sample_seed(seed, static_cast<std::uint64_t>(s));
        const SampleAssignment sample = draw_sample(sseed, family);
        ThetaCache cache(sample, pol);
        for (std::size_t i = 0; i < n_id; ++i) {
            ResidualReport r;
            try {
                r = evaluate_identity(*selected[i], cache, pol);
            } catch (const Error& e) {
                r.id = selected[i]->id;
                r.pass = false;
                r.error = e.what();
                r.abs_residual = r.rel_residual = std::numeric_limits<double>::quiet_NaN();
            }
            r.sample = s;
            r.sample_seed = sseed;
            reports[i * static_cast<std::size_t>(n_samples) + static_cast<std::size_t>(s)] = std::move(r);
        }
    };

    const int workers = std::max(1, std::min(jobs, n_samples));
    if (workers == 1) {
        for (int s = 0; s < n_samples; ++s) run_sample(s);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int s = w; s < n_samples; s += workers) run_sample(s);
            });
        }
        for (auto& t : pool) t.join();
    }
    return reports;
}

}  // namespace hypertheta
