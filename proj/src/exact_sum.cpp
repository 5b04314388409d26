#include "ergoscan/exact_sum.hpp"

#include <bit>
#include <stdexcept>

namespace ergoscan {

void ExactAcc::add(double x, int rshift) {
    if (x == 0.0) return;
    if (!std::isfinite(x)) throw std::invalid_argument("ExactAcc: non-finite term");
    if (rshift < 0 || rshift > kMaxRshift) throw std::invalid_argument("ExactAcc: rshift out of range");

    int e;
    double m = std::frexp(std::fabs(x), &e); // |x| = m * 2^e, m in [0.5, 1)
    auto mant = static_cast<uint64_t>(std::ldexp(m, 53));
    // mant * 2^(e-53-rshift); lowest bit position in the accumulator:
    int pos = e - 53 - rshift - kMinExp;
    if (pos < 0) throw std::invalid_argument("ExactAcc: term below accumulator range");
    if (pos + 54 > 64 * kLimbs) throw std::invalid_argument("ExactAcc: term above accumulator range");

    if (x > 0.0)
        add_bits(pos, mant);
    else
        sub_bits(pos, mant);
}

void ExactAcc::add_bits(int pos, uint64_t mant) {
    int li = pos >> 6;
    int off = pos & 63;
    unsigned __int128 wide = static_cast<unsigned __int128>(mant) << off;
    auto lo = static_cast<uint64_t>(wide);
    auto hi = static_cast<uint64_t>(wide >> 64);

    uint64_t old = limb_[li];
    limb_[li] = old + lo;
    uint64_t carry = (limb_[li] < old) ? 1u : 0u;
    uint64_t inc = hi + carry; // hi < 2^53, no overflow
    for (int i = li + 1; inc != 0; ++i) {
        if (i >= kLimbs) throw std::logic_error("ExactAcc: carry overflow");
        uint64_t prev = limb_[i];
        limb_[i] = prev + inc;
        inc = (limb_[i] < prev) ? 1u : 0u;
    }
}

void ExactAcc::sub_bits(int pos, uint64_t mant) {
    int li = pos >> 6;
    int off = pos & 63;
    unsigned __int128 wide = static_cast<unsigned __int128>(mant) << off;
    auto lo = static_cast<uint64_t>(wide);
    auto hi = static_cast<uint64_t>(wide >> 64);

    uint64_t old = limb_[li];
    limb_[li] = old - lo;
    uint64_t borrow = (old < lo) ? 1u : 0u;
    uint64_t dec = hi + borrow;
    for (int i = li + 1; dec != 0; ++i) {
        if (i >= kLimbs) throw std::logic_error("ExactAcc: negative value");
        uint64_t prev = limb_[i];
        limb_[i] = prev - dec;
        dec = (prev < dec) ? 1u : 0u;
    }
}

double ExactAcc::round_to_double() const {
    int top = kLimbs - 1;
    while (top >= 0 && limb_[top] == 0) --top;
    if (top < 0) return 0.0;

    int p = 64 * top + (63 - std::countl_zero(limb_[top])); // highest set bit
    // Significand LSB position: 53 bits for normals, clipped at the subnormal
    // grid (weight 2^-1074, i.e. position -1074 - kMinExp).
    constexpr int kSubnormLsb = -1074 - kMinExp;
    int lsb = p - 52;
    if (lsb < kSubnormLsb) lsb = kSubnormLsb; // below this, sig stays empty and guard/sticky decide

    auto bit_at = [&](int q) -> uint64_t {
        if (q < 0 || q >= 64 * kLimbs) return 0;
        return (limb_[q >> 6] >> (q & 63)) & 1u;
    };

    uint64_t sig = 0;
    for (int q = p; q >= lsb; --q) sig = (sig << 1) | bit_at(q);

    uint64_t guard = bit_at(lsb - 1);
    bool sticky = false;
    if (lsb >= 1) {
        int gl = (lsb - 1) >> 6;
        int gb = (lsb - 1) & 63;
        if (gb > 0 && (limb_[gl] & ((uint64_t{1} << gb) - 1)))
            sticky = true;
        for (int i = 0; !sticky && i < gl; ++i)
            if (limb_[i]) sticky = true;
    }

    if (guard && (sticky || (sig & 1u))) ++sig;
    return std::ldexp(static_cast<double>(sig), lsb + kMinExp);
}

} // namespace ergoscan
