#pragma once

// Integer division and residues rounded the mathematical way for negatives.

namespace bdom::detail {

constexpr long floor_div(long a, long b) {
    const long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr long ceil_div(long a, long b) { return -floor_div(-a, b); }

constexpr long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

}  // namespace bdom::detail
