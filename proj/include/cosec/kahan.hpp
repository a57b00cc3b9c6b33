#pragma once

namespace cosec {

// Neumaier's variant of Kahan summation.  Tracks the rounding error of every
// addition and folds it back at the end, so long sums with terms of very
// different magnitude (cosecants near the interval endpoints reach ~n/pi)
// keep close to full working precision.
template <typename T = double>
struct KahanAccumulator {
    T sum{0};
    T compensation{0};

    void add(T value) {
        const T t = sum + value;
        if ((sum >= 0 ? sum : -sum) >= (value >= 0 ? value : -value))
            compensation += (sum - t) + value;
        else
            compensation += (value - t) + sum;
        sum = t;
    }

    KahanAccumulator& operator+=(T value) {
        add(value);
        return *this;
    }

    T result() const { return sum + compensation; }
};

}  // namespace cosec
