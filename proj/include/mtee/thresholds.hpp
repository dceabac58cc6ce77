#pragma once

#include <optional>
#include <vector>

namespace mtee {

struct SymbolClassProbs;  // channel.hpp

/// Ordered threshold set T_1 <= ... <= T_z, in nats/bit (the units of the
/// reliability values it is compared against).
struct ThresholdSet {
    double lambda = 2.0;
    long long z = 1;
    std::vector<double> t;  // size z, non-decreasing, within [0, e0/s]
};

// Dimensionless location factor F_k(lambda, z) with T_k = (e0/s) * F_k.
//
// For 1 < lambda < 2:  F_k = (2 b^(k-1) - lambda) / (2 b^z - lambda),
// b = 1/(lambda-1), evaluated via (lambda-1)^z to stay overflow-free.
// For lambda = 2 (within 1e-9) the 0/0 is resolved by the closed form
// (2k-1)/(2z+1); the general form is continuous into it.
double threshold_factor(double lambda, long long z, long long k);

// Exponent factor (b^z - 1) / (2 b^z - lambda) of the residual-error
// approximation; z/(2z+1) at lambda = 2. Increases to 1/2 as z -> infinity.
double exponent_factor(double lambda, long long z);

// Optimal threshold set for an outer decoder with tradeoff factor lambda,
// 1 < lambda <= 2, and z decoding trials: T_k = (e0/s) * F_k(lambda, z).
ThresholdSet optimal_thresholds(double lambda, long long z, double e0, double s);

/// Residuals (LHS - RHS) of the optimality recurrences. r2 only when z >= 2,
/// chain entries only when z >= 3.
struct ResidualTriple {
    double r1 = 0.0;
    std::optional<double> r2;
    std::vector<double> chain;

    double max_abs() const;
};

// r1:    (e0 + s T_z)/lambda - (e0 - s T_1)
// r2:    (lambda+1) T_1 - (lambda-1) T_2
// chain: (lambda T_{k+1} - T_k)/(lambda-1) - T_{k+2},  k = 1..z-2
ResidualTriple recurrence_residuals(const ThresholdSet& ts, double e0, double s);

// Log-domain residuals of the optimality conditions on the symbol-class
// probabilities:
// r1:    (1/lambda) ln p_l - ln p_c
// r2:    ln p_c - (1 - 1/lambda) [ (1/(lambda-1)) ln p_under_1 + ln p_bar_1 ]
// chain: consecutive differences of (1/(lambda-1)) ln p_under_k + ln p_bar_k
ResidualTriple theorem1_residuals(const SymbolClassProbs& probs, double lambda);

}  // namespace mtee
