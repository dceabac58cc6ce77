#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mtee/code.hpp"
#include "mtee/gf.hpp"

namespace mtee {

/// Received-word symbol: a field element of GF(2^m) or the erasure marker.
/// The marker is distinct from every field element (m <= 16).
inline constexpr std::uint32_t kErasure = 0xffffffffu;

using SymbolWord = std::vector<std::uint32_t>;

struct RsDecodeResult {
    std::vector<std::uint16_t> codeword;
    int errors_corrected = 0;  // corrections outside the erasure set
    int erasures = 0;
};

/// Systematic Reed-Solomon encoder and bounded-minimum-distance
/// errors-and-erasures decoder.
///
/// Decoding guarantee: if the input differs from a codeword c by eps symbol
/// errors and tau erasures with 2*eps + tau <= d-1, decode_ee returns exactly
/// c. It never returns a codeword farther than floor((d-1-tau)/2) from the
/// unerased positions of the input; anything else is reported as failure
/// (std::nullopt), which is a normal return, not an error.
class RsCodec {
public:
    explicit RsCodec(const OuterCode& code);

    const OuterCode& code() const { return code_; }
    const GaloisField& field() const { return gf_; }

    // info symbols appear in the last k positions of the codeword
    std::vector<std::uint16_t> encode(const std::vector<std::uint16_t>& info) const;

    std::optional<RsDecodeResult> decode_ee(const SymbolWord& word) const;

    bool is_codeword(const std::vector<std::uint16_t>& w) const;

private:
    std::vector<std::uint16_t> syndromes(const std::vector<std::uint16_t>& w) const;

    OuterCode code_;
    GaloisField gf_;
    std::vector<std::uint16_t> gen_;  // generator polynomial, roots alpha^1..alpha^(n-k)
};

}  // namespace mtee
