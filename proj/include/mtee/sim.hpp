#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mtee/channel.hpp"
#include "mtee/dcf.hpp"
#include "mtee/rs.hpp"
#include "mtee/thresholds.hpp"

namespace mtee {

/// SplitMix64: the full generator (state += golden gamma, output finalized).
/// Chosen for exact reproducibility: the sequence is pinned by this struct,
/// not by any library implementation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform on (0, 1], 53-bit resolution
    double uniform01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // uniform integer in [0, n), rejection sampled (no modulo bias)
    std::uint64_t bounded(std::uint64_t n);

private:
    std::uint64_t state_;
};

// Stream derivation rule (normative for reproducibility): the RNG stream of
// word w under master seed s is SplitMix64 seeded with
//   mix(mix(s ^ 0x6d7465652d6c6162) ^ mix(w)),
// mix being the SplitMix64 finalizer. Streams depend only on (seed, w), so
// any partitioning of words into chunks reproduces identical draws.
SplitMix64 word_stream(std::uint64_t seed, std::uint64_t word_index);

struct SymbolDraw {
    bool is_error = false;
    double reliability = 0.0;  // v >= 0, nats/bit
};

/// Draws (correctness, reliability) pairs whose tails reproduce the
/// exponential class approximations:
///   Pr(error, v >= t) = exp(-(e0 + s t) n)            for t >= 0,
///   Pr(correct, v <= t) = exp(-(e0 - s t) n) - exp(-e0 n)  for t in [0, e0/s].
/// One uniform per symbol: U <= exp(-e0 n) maps to an error with
/// v = -ln(U)/(s n) - e0/s, anything else to a correct symbol with
/// v = (e0 + ln(U)/n)/s in (0, e0/s].
class SuperChannelSampler {
public:
    explicit SuperChannelSampler(const InnerChannelModel& model);  // requires e0 > 0

    SymbolDraw sample(SplitMix64& rng) const;

    double p_error() const { return p_error_; }

private:
    double p_error_;    // exp(-e0 n)
    double inv_sn_;     // 1/(s n)
    double e0_over_s_;
    double inv_n_;
    double inv_s_;
};

// One multi-trial decoding attempt: erase below each T_k in turn, judge each
// trial with the decoder-capability predicate, succeed if any trial does.
// trial_ok (optional, size z) receives the per-trial outcomes.
// Checks the nesting invariant: tau_k non-decreasing, eps_k non-increasing.
bool mtee_decode_word(std::span<const SymbolDraw> draws, const ThresholdSet& ts,
                      const DecoderModel& model, std::vector<char>* trial_ok = nullptr);

struct SimReport {
    std::uint64_t num_words = 0;
    std::uint64_t num_failures = 0;
    double pe_hat = 0.0;
    double ci_low = 0.0;   // Wilson 95%
    double ci_high = 0.0;
    std::vector<std::uint64_t> trial_successes;  // words trial k decoded, k = 1..z
    std::uint64_t seed = 0;

    // config echo
    OuterCode code;
    InnerChannelModel model;
    std::string decoder_desc;
    ThresholdSet thresholds;
};

// Wilson 95% score interval for failures/n.
std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t n);

// Monte Carlo estimate of the residual codeword error probability.
// chunks is a pure work partition executed concurrently; per-word RNG
// streams make the result bit-identical for a fixed seed regardless of
// chunk count, execution order or parallelism degree.
SimReport estimate_pe(const OuterCode& code, const InnerChannelModel& model,
                      const DecoderModel& decoder, const ThresholdSet& ts,
                      std::uint64_t num_words, std::uint64_t seed, int chunks);

struct OracleDiscrepancy {
    std::uint64_t trial = 0;
    int eps = 0;
    int tau = 0;
    std::string what;
};

struct OracleReport {
    std::uint64_t trials = 0;
    std::uint64_t guaranteed_region_trials = 0;
    std::vector<OracleDiscrepancy> discrepancies;
};

// Cross-validates the BMD capability predicate against the real codec:
// random (eps, tau) uniform on the simplex eps + tau <= n, random corruption
// of a random codeword, then decode. Inside 2 eps + tau <= d-1 the decoder
// must return the transmitted codeword; outside, any returned codeword must
// be within bounded distance of the unerased input. inject_fault corrupts
// the decoder output before judging (harness self-test hook).
OracleReport validate_oracle(const RsCodec& codec, std::uint64_t trials,
                             std::uint64_t seed, bool inject_fault = false);

}  // namespace mtee
