#pragma once

#include <cstdint>
#include <string>

namespace opoly {

// All aggregate sums are exact. Triple products of Walsh coefficients reach
// 2^{3n} and are summed over 2^{3n} terms, so 64 bits are not enough past
// n ~ 10; 128 bits cover the whole supported range n <= 16.
using int128 = __int128;

static_assert(sizeof(int128) == 16);

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v)
                                : static_cast<unsigned __int128>(v);
    char buf[48];
    int pos = 48;
    while (mag != 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
        mag /= 10;
    }
    if (neg) buf[--pos] = '-';
    return std::string(buf + pos, buf + 48);
}

} // namespace opoly
