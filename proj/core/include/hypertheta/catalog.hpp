#pragma once

#include "hypertheta/sampling.hpp"
#include "hypertheta/theta.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hypertheta {

// The evaluated argument is c1 * p1 + c2 * p2.
struct ArgSelector {
    int c1 = 0;
    int c2 = 0;

    EvalPoint apply(const EvalPoint& p1, const EvalPoint& p2) const;
    friend bool operator==(const ArgSelector&, const ArgSelector&) = default;
    friend auto operator<=>(const ArgSelector&, const ArgSelector&) = default;
};

namespace args {
inline constexpr ArgSelector sum{1, 1};
inline constexpr ArgSelector diff{1, -1};
inline constexpr ArgSelector twice_first{2, 0};
inline constexpr ArgSelector twice_second{0, 2};
inline constexpr ArgSelector point{1, 0};
inline constexpr ArgSelector origin{0, 0};
}  // namespace args

struct ThetaFactor {
    Characteristic ch;
    ArgSelector arg;
    Scale scale = Scale::Base;

    friend bool operator==(const ThetaFactor&, const ThetaFactor&) = default;
};

struct IdentityTerm {
    cplx coefficient{1.0, 0.0};
    std::vector<ThetaFactor> factors;
};

enum class DomainNote { TwoPoint, OnePoint, ConstantsOnly };

// A doubled-period constant written as prefactor * sum_i sign_i * sqrt(radicand_i).
struct RootForm {
    Characteristic target;
    double prefactor = 0.5;
    std::vector<int> printed_signs;
    std::vector<std::vector<IdentityTerm>> radicands;
};

struct Identity {
    std::string id;
    std::string family;
    std::string summary;
    DomainNote domain = DomainNote::OnePoint;
    std::vector<IdentityTerm> lhs;
    std::vector<IdentityTerm> rhs;
    // Readings chosen where the printed statement is inconsistent.
    std::vector<std::string> flags;
    std::optional<RootForm> root;
};

struct Catalog {
    int format_version = 1;
    std::vector<Identity> identities;

    const Identity* find(const std::string& id) const;
    const Identity& at(const std::string& id) const;
    // The identity named id, or every component whose id extends it with
    // ".n", "[..]" or a trailing sign (so "2e28" selects 2e28.1 to 2e28.4).
    std::vector<const Identity*> group(const std::string& id) const;
};

Catalog build_catalog();
// Built once on first use; shared by the addition module.
const Catalog& builtin_catalog();

// theta[a c; b d](p1 + p2) * theta[e g; f h](p1 - p2) as a four-term sum of
// doubled-period products at 2 p1 and 2 p2.
Identity general_duplication(int a, int c, int b, int d, int e, int g, int f, int h);

std::array<std::array<int, 4>, 4> riemann_matrix();

std::string domain_name(DomainNote d);
std::string catalog_to_json(const Catalog& catalog);
Catalog catalog_from_json(const std::string& text);
Catalog load_catalog(const std::string& path);
// Hex SHA-256 of the catalog file contents as written by catalog_to_json.
std::string catalog_digest(const Catalog& catalog);

using FactorSource = std::function<cplx(const ThetaFactor&)>;

cplx evaluate_terms(const std::vector<IdentityTerm>& terms, const FactorSource& source);

// Memoized direct theta evaluation for one sample. Values are stored per
// canonical characteristic, argument selector and scale.
class ThetaCache {
public:
    ThetaCache(const SampleAssignment& sample, const PrecisionPolicy& pol);

    cplx operator()(const ThetaFactor& f);
    const SampleAssignment& sample() const { return sample_; }

private:
    SampleAssignment sample_;
    PeriodMatrix doubled_;
    PrecisionPolicy pol_;
    std::map<std::tuple<Characteristic, ArgSelector, Scale>, cplx> values_;
};

struct SignResolution {
    cplx value;
    cplx direct;
    std::vector<int> signs;  // multiplies each printed sign; +1 is the principal branch
    double rel_residual = 0.0;
};

struct ResidualReport {
    std::string id;
    int sample = 0;
    std::uint64_t sample_seed = 0;
    cplx lhs;
    cplx rhs;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    bool pass = false;
    std::string error;
    std::optional<SignResolution> sign;
};

inline constexpr double residual_floor = 1e-30;
inline constexpr double sign_match_tol = 1e-8;

ResidualReport compare_values(const std::string& id, cplx lhs, cplx rhs, const PrecisionPolicy& pol);

ResidualReport evaluate_identity(const Identity& idty, ThetaCache& cache, const PrecisionPolicy& pol);
ResidualReport evaluate_identity(const Identity& idty, const SampleAssignment& s,
                                 const PrecisionPolicy& pol);

// Tries every sign flip of the printed roots (principal branch first) and
// returns the first one matching the directly summed constant.
SignResolution resolve_sign(const Identity& d_identity, const PeriodMatrix& tau,
                            const PrecisionPolicy& pol);
SignResolution resolve_sign(const Identity& d_identity, ThetaCache& cache);
SignResolution resolve_sign(const std::string& d_id, const PeriodMatrix& tau,
                            const PrecisionPolicy& pol);

// Every identity of the catalog (or the subset named in only) is evaluated on
// n_samples draws; reports are ordered by catalog position, then sample.
std::vector<ResidualReport> verify_catalog(const Catalog& catalog, int n_samples, std::uint64_t seed,
                                           const PrecisionPolicy& pol,
                                           const std::vector<std::string>& only = {},
                                           const SamplingFamily& family = {}, int jobs = 1);

}  // namespace hypertheta
