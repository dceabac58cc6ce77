#pragma once

#include <optional>

#include "mtee/code.hpp"

namespace mtee {

/// Closed-form residual codeword error probability, log domain.
struct PePrediction {
    double log_pe = 0.0;          // = -2 e0 delta factor n_inner
    double exponent_factor = 0.0; // (b^z - 1)/(2 b^z - lambda); z/(2z+1) at lambda=2
    double lambda = 2.0;
    long long delta = 0;
    long long z = 1;
    double e0 = 0.0;
    int n_inner = 0;
};

// Residual codeword error probability of z-trial decoding with optimal
// thresholds, a tradeoff-factor-lambda decoder and delta correctable
// erasures. For lambda = 2 the caller supplies delta = d-1.
PePrediction pe_mtee(double e0, int n_inner, double lambda, long long delta, long long z);

// ln(p_l^(delta/lambda)) evaluated through the optimal thresholds minus
// pe_mtee's log_pe; vanishes identically (and is independent of s).
double pe_self_consistency(double e0, double s, int n_inner, double lambda,
                           long long delta, long long z);

// Smallest number of BMD trials whose residual error probability is at or
// below that of the optimal tangent decoder with z_gs trials, i.e. smallest
// z with (d-1) z/(2z+1) >= delta* factor(lambda*, z_gs). Channel-independent.
// nullopt when no finite z suffices ((d-1)/2 does not reach the target).
std::optional<long long> min_bmd_trials(const OuterCode& code, long long z_gs);

}  // namespace mtee
