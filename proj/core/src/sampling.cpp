#include "hypertheta/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace hypertheta {

void SamplingFamily::validate() const {
    if (!(im_diag_min > 0.0) || !(im_diag_max >= im_diag_min))
        throw std::invalid_argument("sampling: need 0 < im_diag_min <= im_diag_max");
    if (!(det_floor > 0.0) || det_floor >= im_diag_min * im_diag_min)
        throw std::invalid_argument("sampling: det_floor must lie in (0, im_diag_min^2)");
    if (!(re_max >= re_min)) throw std::invalid_argument("sampling: re_max < re_min");
    if (!(point_re >= 0.0) || !(point_im >= 0.0))
        throw std::invalid_argument("sampling: point ranges must be non-negative");
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t run_seed, std::uint64_t index) {
    return mix_seed(run_seed + index);
}

PeriodMatrix draw_period(SampleRng& rng, const SamplingFamily& f) {
    PeriodMatrix tau;
    const double y1 = rng.uniform(f.im_diag_min, f.im_diag_max);
    const double y2 = rng.uniform(f.im_diag_min, f.im_diag_max);
    const double band = std::sqrt(y1 * y2 - f.det_floor);
    const double y12 = rng.uniform(-band, band);
    tau.tau1 = {rng.uniform(f.re_min, f.re_max), y1};
    tau.tau2 = {rng.uniform(f.re_min, f.re_max), y2};
    tau.tau12 = {rng.uniform(f.re_min, f.re_max), y12};
    return tau;
}

EvalPoint draw_point(SampleRng& rng, const SamplingFamily& f) {
    EvalPoint p;
    const double xr = rng.uniform(-f.point_re, f.point_re);
    const double xi = rng.uniform(-f.point_im, f.point_im);
    const double yr = rng.uniform(-f.point_re, f.point_re);
    const double yi = rng.uniform(-f.point_im, f.point_im);
    p.x = {xr, xi};
    p.y = {yr, yi};
    return p;
}

SampleAssignment draw_sample(std::uint64_t seed, const SamplingFamily& family) {
    SampleRng rng(seed);
    SampleAssignment s;
    s.seed = seed;
    s.tau = draw_period(rng, family);
    s.p1 = draw_point(rng, family);
    s.p2 = draw_point(rng, family);
    return s;
}

}  // namespace hypertheta
