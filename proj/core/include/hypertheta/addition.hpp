#pragma once

#include "hypertheta/catalog.hpp"
#include "hypertheta/sampling.hpp"
#include "hypertheta/theta.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypertheta {

inline constexpr double divisor_threshold = 1e-10;

struct HyperellipticValue {
    Characteristic ch;
    cplx value;
};

// Theta values for the sixteen integer characteristics, indexed by
// integer_index (8a + 4c + 2b + d). Any common scale is allowed.
struct ThetaVector {
    std::array<cplx, 16> values{};

    cplx operator[](const Characteristic& ch) const;
};

// theta[ch] / theta[0 0; 0 0] at one point; entry 0 is exactly 1.
struct FVector {
    std::array<cplx, 16> values{};
    EvalPoint point;
    PeriodMatrix tau;

    cplx operator[](const Characteristic& ch) const;
    ThetaVector as_theta() const;
};

// Doubled-period values keyed by canonical characteristic.
using DoubledTable = std::map<Characteristic, cplx>;

struct ConstantsVector {
    PeriodMatrix tau;
    // The ten even theta constants; odd ones are zero and absent.
    std::map<Characteristic, cplx> theta0;
    // Doubled-period constants summed directly, for every canonical
    // characteristic the addition formulae touch.
    DoubledTable doubled_direct;
    // The sixteen constants recovered from base constants through the
    // square-root relations, with the matched sign choice.
    DoubledTable doubled_resolved;
    std::map<Characteristic, double> discrepancy;
    std::vector<std::string> warnings;

    cplx alpha() const;
    cplx beta() const;
    cplx gamma() const;
    cplx delta() const;
    cplx xi() const;
    cplx zeta() const;
};

struct AdditionFormula {
    std::string id;
    Characteristic ch;
    std::vector<std::string> numerator;    // catalog ids of duplication products
    std::vector<std::string> denominator;
};

// The fifteen formulas, A1 to A15, in order.
const std::vector<AdditionFormula>& addition_formulas();
const AdditionFormula& addition_formula(const Characteristic& ch);

// The fifteen non-trivial integer characteristics in index order.
const std::array<Characteristic, 15>& nontrivial_characteristics();

HyperellipticValue f_eval(const Characteristic& ch, const EvalPoint& z, const PeriodMatrix& tau,
                          const PrecisionPolicy& pol = {});
ThetaVector theta_vector(const EvalPoint& z, const PeriodMatrix& tau, const PrecisionPolicy& pol = {});
FVector f_vector(const EvalPoint& z, const PeriodMatrix& tau, const PrecisionPolicy& pol = {});
ConstantsVector constants_vector(const PeriodMatrix& tau, const PrecisionPolicy& pol = {});

// Canonical characteristics of every doubled value the formulas use:
// sixteen integer ones and twelve with a half-integer upper row.
const std::vector<Characteristic>& doubled_characteristics();

DoubledTable doubled_table_direct(const EvalPoint& z, const PeriodMatrix& tau, const PrecisionPolicy& pol = {});

// Doubled values at 2z solved from the functional expansions, using theta
// values at z (any common scale) and the given doubled constants.
DoubledTable doubled_table_reduced(const ThetaVector& theta, const DoubledTable& constants);

// F[ch](p1 + p2) as a ratio of duplication products built from the doubled
// values at 2 p1 and 2 p2.
cplx add_from_tables(const Characteristic& ch, const DoubledTable& at_first, const DoubledTable& at_second);

cplx add_from_theta(const Characteristic& ch, const ThetaVector& t1, const ThetaVector& t2,
                    const ConstantsVector& consts);

HyperellipticValue add_algebraic(const Characteristic& ch, const FVector& f1, const FVector& f2,
                                 const ConstantsVector& consts);

// Same ratio with the doubled values summed directly at 2 p1 and 2 p2.
HyperellipticValue add_direct(const Characteristic& ch, const EvalPoint& p1, const EvalPoint& p2,
                              const PeriodMatrix& tau, const PrecisionPolicy& pol = {});

struct AdditionRun {
    // Algebraic composition against f_eval at the summed point, id "A<n>".
    std::vector<ResidualReport> law;
    // Reduced mode against direct mode, same ids.
    std::vector<ResidualReport> path;
    int redraws = 0;
    std::vector<std::string> warnings;
};

inline constexpr double addition_law_tol = 1e-8;
inline constexpr double path_tol = 1e-9;

AdditionRun verify_addition(int n_samples, std::uint64_t seed, const PrecisionPolicy& pol = {},
                            const SamplingFamily& family = {}, int max_redraws = 1000);

}  // namespace hypertheta
