#pragma once

#include <cmath>

namespace mpverify {

// Neumaier-compensated accumulator.  Deterministic for a fixed add order;
// the sieve layer always merges per-segment partials in ascending segment
// order, so results are bit-identical regardless of worker count.
struct Kahan {
    long double sum = 0.0L;
    long double comp = 0.0L;

    void add(long double v) {
        const long double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    void merge(const Kahan& o) {
        add(o.sum);
        add(o.comp);
    }

    long double value() const { return sum + comp; }
};

}  // namespace mpverify
