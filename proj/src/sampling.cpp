#include "opdc/sampling.hpp"

namespace opdc {

long RationalSampler::integer(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational RationalSampler::draw() {
    long num = integer(-bound_, bound_);
    long den = integer(1, bound_);
    return Rational(num, den);
}

Rational RationalSampler::draw_nonzero() {
    for (;;) {
        Rational r = draw();
        if (!r.is_zero()) return r;
    }
}

Rational RationalSampler::draw_classical() {
    for (;;) {
        Rational r = draw();
        if (r.abs() < Rational(1)) return r;
    }
}

double RationalSampler::uniform(double lo, double hi) {
    double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

BIParameters draw_bi_parameters(RationalSampler& sampler) {
    return BIParameters{sampler.draw(), sampler.draw(), sampler.draw(), sampler.draw()};
}

ThreeTermRecurrence draw_recurrence(RationalSampler& sampler, int depth) {
    ThreeTermRecurrence rec;
    for (int k = 0; k < depth; ++k) {
        rec.b.push_back(sampler.draw());
        rec.u.push_back(k == 0 ? Rational(0) : sampler.draw_nonzero());
    }
    return rec;
}

std::vector<Rational> draw_reflection_list(RationalSampler& sampler, int n, bool classical) {
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(a.size()) < n) {
        Rational r = classical ? sampler.draw_classical() : sampler.draw();
        if (r.abs() == Rational(1)) continue;
        a.push_back(std::move(r));
    }
    return a;
}

} // namespace opdc
