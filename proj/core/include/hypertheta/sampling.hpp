#pragma once

#include "hypertheta/theta.hpp"

#include <cstdint>
#include <random>

namespace hypertheta {

// Ranges for random period matrices and evaluation points. Im tau12 is drawn
// uniformly inside the band that keeps det(Im T) >= det_floor, so every draw
// is valid without rejection.
struct SamplingFamily {
    double im_diag_min = 0.8;
    double im_diag_max = 2.0;
    double det_floor = 0.2;
    double re_min = -0.5;
    double re_max = 0.5;
    double point_re = 0.5;
    double point_im = 0.3;

    void validate() const;
};

struct SampleAssignment {
    PeriodMatrix tau;
    EvalPoint p1;
    EvalPoint p2;
    std::uint64_t seed = 0;
};

// splitmix64 finalizer, used to derive independent per-sample seeds.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t sample_seed(std::uint64_t run_seed, std::uint64_t index);

// std::mt19937_64 output is fixed by the standard; doubles are built from the
// top 53 bits so draws are identical on every platform.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 engine_;
};

PeriodMatrix draw_period(SampleRng& rng, const SamplingFamily& family);
EvalPoint draw_point(SampleRng& rng, const SamplingFamily& family);
SampleAssignment draw_sample(std::uint64_t seed, const SamplingFamily& family = {});

}  // namespace hypertheta
