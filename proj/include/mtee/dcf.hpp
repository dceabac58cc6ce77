#pragma once

#include <optional>
#include <utility>

#include "mtee/code.hpp"

namespace mtee {

/// Constant-tradeoff decoder obtained as a tangent to the Guruswami-Sudan
/// radius curve at tau = kappa. Imitable by the GS decoder by discarding
/// results outside the tangent region.
struct TangentDecoder {
    int kappa = 0;
    double lambda = 2.0;          // constant error/erasure tradeoff factor
    long long delta = 0;          // maximal number of correctable erasures
    double radius_at_kappa = 0.0; // eps_gs(kappa)

    double radius(double tau) const {
        return radius_at_kappa - (tau - static_cast<double>(kappa)) / lambda;
    }
};

// BMD failure threshold: (n - k + 1 - tau) / 2, for integer 0 <= tau <= d-1.
double eps_bmd(const OuterCode& code, long long tau);

// GS (multiplicity -> infinity) failure threshold:
// n - tau - sqrt((k-1)(n-tau)), for real 0 <= tau < n.
double eps_gs(const OuterCode& code, double tau);

// Tradeoff factor of the GS decoder at erasure count tau; strictly
// increasing, defined for 0 <= tau < n - (k-1)/4.
double lambda_gs(const OuterCode& code, double tau);

TangentDecoder make_tangent(const OuterCode& code, int kappa);

struct DecoderModel {
    enum class Kind { kBmd, kGsInfinity, kTangent };

    Kind kind = Kind::kBmd;
    OuterCode code;
    std::optional<TangentDecoder> tangent;  // engaged iff kind == kTangent

    static DecoderModel bmd(const OuterCode& code);
    static DecoderModel gs(const OuterCode& code);
    static DecoderModel tangent_at(const OuterCode& code, int kappa);

    // failure-threshold radius extended to the whole simplex (may be <= 0)
    double radius(double tau) const;
};

// Success predicate: strict eps < radius(tau). Valid on the whole simplex
// eps >= 0, tau >= 0, eps + tau <= n.
bool succeeds(const DecoderModel& model, long long eps, long long tau);

// Grid search over kappa in {0, ..., d-1} minimizing
// -delta_{GS,kappa} * (beta^z - 1)/(2 beta^z - lambda), beta = 1/(lambda-1).
// Ties break to the smallest kappa. Channel-independent by construction.
std::pair<int, TangentDecoder> optimal_kappa(const OuterCode& code, long long z);

}  // namespace mtee
