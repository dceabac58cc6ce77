#pragma once

#include <cstdint>

namespace mtee {

/// Outer Reed-Solomon code parameters over GF(2^m).
/// MDS is enforced: d = n - k + 1.
struct OuterCode {
    int n = 255;
    int k = 144;
    int m = 8;
    std::uint32_t primitive_poly = 0x11d;

    int d() const { return n - k + 1; }

    // throws std::invalid_argument on violated invariants
    void validate() const;
};

}  // namespace mtee
