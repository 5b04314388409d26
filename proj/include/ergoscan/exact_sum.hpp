#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace ergoscan {

// Error-free difference (Knuth two-sum): a - b == hi + lo exactly.
struct DoubleDouble {
    double hi;
    double lo;
};

inline DoubleDouble two_diff(double a, double b) {
    double s = a - b;
    double v = s - a;
    double e = (a - (s - v)) + ((-b) - v);
    return {s, e};
}

// Exact fixed-point accumulator for sums of terms x * 2^-rshift with |x| <= 4
// and rshift <= 512. Bit p of the limb array has weight 2^(p + kMinExp), which
// covers every nonzero bit such a term can have, so accumulation is exact and
// the final value is correctly rounded once. This makes weak*-distance values
// independent of summation order and bit-reproducible, and keeps metric
// properties (symmetry, triangle inequality, monotone refinement) intact at
// the double level.
//
// The running value must stay nonnegative; callers only feed |.| terms (a
// negative lo of an error-free pair is always added right after its hi).
class ExactAcc {
public:
    static constexpr int kLimbs = 28;
    static constexpr int kMinExp = -1664;
    static constexpr int kMaxRshift = 512;

    void reset() { limb_.fill(0); }

    // Accumulate x * 2^-rshift.
    void add(double x, int rshift);

    // Accumulate an error-free pair (hi first keeps the running value >= 0).
    void add(DoubleDouble d, int rshift) {
        add(d.hi, rshift);
        add(d.lo, rshift);
    }

    void add_abs(DoubleDouble d, int rshift) {
        if (d.hi < 0.0 || (d.hi == 0.0 && d.lo < 0.0)) {
            add(-d.hi, rshift);
            add(-d.lo, rshift);
        } else {
            add(d.hi, rshift);
            add(d.lo, rshift);
        }
    }

    bool is_zero() const {
        for (uint64_t l : limb_)
            if (l) return false;
        return true;
    }

    // Round the exact accumulated value to the nearest double (ties to even).
    double round_to_double() const;

    friend bool operator==(const ExactAcc& a, const ExactAcc& b) { return a.limb_ == b.limb_; }

private:
    void add_bits(int pos, uint64_t mant);
    void sub_bits(int pos, uint64_t mant);

    std::array<uint64_t, kLimbs> limb_{};
};

// Neumaier compensated accumulator for sliding Fourier sums. Supports removal
// by adding the negated term; drift is bounded by re-anchoring in the scanner.
struct NeumaierAcc {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace ergoscan
