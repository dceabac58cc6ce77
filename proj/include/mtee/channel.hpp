#pragma once

#include <optional>
#include <vector>

#include "mtee/thresholds.hpp"

namespace mtee {

struct GallagerResult {
    double e0 = 0.0;       // nats per channel bit, clamped at 0
    double rho_star = 0.0; // maximizing parameter in [0, 1]
};

// Random-coding exponent for ML decoding on the BSC at rate rate_bits
// (bits per channel use): max over rho in [0,1] of
//   rho ln2 - (1+rho) ln(p^(1/(1+rho)) + (1-p)^(1/(1+rho))) - rho rate_bits ln2.
// The objective is concave in rho; golden-section search to ~1e-12.
GallagerResult gallager_e0(double p, double rate_bits);

double bsc_capacity_nats(double p);

// Default tilt parameter: rho*/(1+rho*), clamped into [1e-6, 1/2].
double default_s(double rho_star);

/// BSC + inner code + inner ML decoder collapsed into one "super channel"
/// description: exponent e0 and tilt s pair with the per-symbol reliability
/// values the simulator draws.
struct InnerChannelModel {
    double p = 0.02;
    double rate_inner = 0.5;  // bits per channel use
    int n_inner = 16;         // inner block length in bits
    double e0 = 0.0;          // nats/bit
    double rho_star = 0.0;
    double s = 0.5;           // nats^-1, in (0, 1/2]

    static InnerChannelModel from_bsc(double p, double rate_bits, int n_inner,
                                      std::optional<double> s_override = std::nullopt);
};

/// Per-symbol class probabilities for a threshold set, carried as natural
/// logs (the linear values underflow for realistic exponents).
///
/// log_pbar[k-1] / log_punder[k-1] hold the correct/erroneous "erased by
/// T_{k+1} but not by T_k" classes, k = 1..z-1; both empty for z = 1.
struct SymbolClassProbs {
    double log_pc = 0.0;  // always erased
    double log_pl = 0.0;  // erroneous, never erased
    std::vector<double> log_pbar;
    std::vector<double> log_punder;

    double pc() const;
    double pl() const;
    double pbar(std::size_t k) const;    // k = 1..z-1
    double punder(std::size_t k) const;  // k = 1..z-1

    // complement 1 - pc - pl - sum(pbar + punder); may dominate, may even be
    // negative for configurations where the exponential forms are loose
    double pr() const;
};

// The exponential approximations evaluated exactly as stated:
//   ln p_c = -(e0 - s T_1) n,     ln p_l = -(e0 + s T_z) n,
//   ln pbar_k = -(e0 - s T_{k+1}) n,  ln punder_k = -(e0 + s T_k) n.
SymbolClassProbs lemma1_probs(const InnerChannelModel& model, const ThresholdSet& ts);

}  // namespace mtee
