#include "mtee/gf.hpp"

#include <stdexcept>
#include <string>

namespace mtee {

std::uint32_t GaloisField::default_primitive_poly(int m) {
    // conventional choices (x^8+x^4+x^3+x^2+1 = 0x11D for m=8)
    static constexpr std::uint32_t kPolys[17] = {
        0,      0,      0x7,    0xb,    0x13,   0x25,   0x43,    0x89,
        0x11d,  0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4443,  0x8003,
        0x1100b};
    if (m < 2 || m > 16) throw std::invalid_argument("GF(2^m): m must be in [2, 16]");
    return kPolys[m];
}

GaloisField::GaloisField(int m, std::uint32_t primitive_poly)
    : m_(m), poly_(primitive_poly) {
    if (m < 2 || m > 16) throw std::invalid_argument("GF(2^m): m must be in [2, 16]");
    const std::uint32_t q = 1u << m;
    if (poly_ < q || poly_ >= 2 * q)
        throw std::invalid_argument("primitive polynomial must have degree exactly m");
    order_ = q - 1;

    exp_.assign(2 * order_, 0);
    log_.assign(q, 0);
    std::vector<bool> seen(q, false);

    // powers of alpha = x mod poly; primitivity <=> the walk visits every
    // nonzero element exactly once and returns to 1 only after 2^m-1 steps
    std::uint32_t val = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        if (seen[val])
            throw std::invalid_argument("polynomial is not primitive over GF(2)");
        seen[val] = true;
        exp_[i] = static_cast<std::uint16_t>(val);
        exp_[i + order_] = exp_[i];
        log_[val] = static_cast<std::uint16_t>(i);
        val <<= 1;
        if (val & q) val ^= poly_;
    }
    if (val != 1)
        throw std::invalid_argument("polynomial is not primitive over GF(2)");
}

std::uint16_t GaloisField::inv(std::uint16_t a) const {
    if (a == 0) throw std::domain_error("GF inverse of zero");
    return exp_[order_ - log_[a]];
}

std::uint16_t GaloisField::div(std::uint16_t a, std::uint16_t b) const {
    if (b == 0) throw std::domain_error("GF division by zero");
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>(log_[a]) + order_ - log_[b]];
}

std::uint16_t GaloisField::pow(std::uint16_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % order_)) % order_;
    return exp_[le];
}

std::uint16_t GaloisField::alpha_pow(std::int64_t e) const {
    std::int64_t r = e % static_cast<std::int64_t>(order_);
    if (r < 0) r += order_;
    return exp_[static_cast<std::uint32_t>(r)];
}

int GaloisField::log(std::uint16_t a) const {
    if (a == 0) throw std::domain_error("GF log of zero");
    return log_[a];
}

}  // namespace mtee
