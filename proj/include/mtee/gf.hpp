#pragma once

#include <cstdint>
#include <vector>

namespace mtee {

/// Table-based arithmetic context for GF(2^m), 2 <= m <= 16.
///
/// Construction verifies that the supplied polynomial is primitive by
/// generating the powers of alpha = x and checking that the multiplicative
/// group has order 2^m - 1 (no early cycle, all nonzero elements hit).
/// Immutable after construction; safe for concurrent use.
class GaloisField {
public:
    GaloisField(int m, std::uint32_t primitive_poly);

    // Conventional primitive polynomial for each supported m (0x11D for m=8).
    static std::uint32_t default_primitive_poly(int m);

    int m() const { return m_; }
    std::uint32_t size() const { return order_ + 1; }
    std::uint32_t order() const { return order_; }  // 2^m - 1
    std::uint32_t poly() const { return poly_; }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return a ^ b; }

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::uint32_t>(log_[a]) + log_[b]];
    }

    std::uint16_t inv(std::uint16_t a) const;                  // throws on 0
    std::uint16_t div(std::uint16_t a, std::uint16_t b) const; // throws on b=0
    std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;

    // alpha^e for any integer e (reduced mod 2^m - 1)
    std::uint16_t alpha_pow(std::int64_t e) const;

    // discrete log base alpha; throws on 0
    int log(std::uint16_t a) const;

private:
    int m_ = 0;
    std::uint32_t poly_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint16_t> exp_;  // doubled so mul needs no reduction
    std::vector<std::uint16_t> log_;
};

}  // namespace mtee
