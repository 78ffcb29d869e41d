#ifndef OPDC_SAMPLING_HPP
#define OPDC_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "opdc/families.hpp"
#include "opdc/rational.hpp"
#include "opdc/transforms.hpp"

namespace opdc {

/// Seeded draws of small rationals for the randomized suites. Bounded
/// draws go through the raw engine (not std distributions) so identical
/// seeds give identical streams on every platform.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int bound = 20) : rng_(seed), bound_(bound) {}

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi);

    /// Numerator in [-bound, bound], denominator in [1, bound].
    Rational draw();
    Rational draw_nonzero();
    /// |value| < 1 (classical reflection parameter).
    Rational draw_classical();

    double uniform(double lo, double hi);

    std::mt19937_64& rng() { return rng_; }
    int bound() const { return bound_; }

private:
    std::mt19937_64 rng_;
    int bound_;
};

/// Runs `body` once per trial, redrawing (cap 1000 attempts) whenever it
/// throws one of the admissibility errors (poles, degenerate factors).
/// Anything else, in particular IdentityViolation, propagates.
template <typename Body>
void run_resampled_trials(int trials, Body&& body) {
    for (int t = 0; t < trials; ++t) {
        for (int attempts = 1;; ++attempts) {
            if (attempts > 1000) throw Error("resampling cap (1000 attempts) exceeded");
            try {
                body(t);
                break;
            } catch (const PoleInParameters&) {
            } catch (const ZeroAtTheta&) {
            } catch (const DegenerateRecursion&) {
            } catch (const DegenerateReflection&) {
            } catch (const DivisionByZero&) {
            }
        }
    }
}

BIParameters draw_bi_parameters(RationalSampler& sampler);

/// Random recurrence of the given depth: arbitrary b, nonzero u (u_0 = 0).
ThreeTermRecurrence draw_recurrence(RationalSampler& sampler, int depth);

/// Random reflection list with every |a_k| != 1 (optionally all |a_k| < 1).
std::vector<Rational> draw_reflection_list(RationalSampler& sampler, int n, bool classical);

} // namespace opdc

#endif
