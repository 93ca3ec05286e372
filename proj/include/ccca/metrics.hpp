#pragma once

#include <cstddef>
#include <vector>

#include "ccca/signal.hpp"

namespace ccca {

// Channel matching across the separation permutation/scale ambiguity.
struct ChannelAssignment {
    std::vector<std::size_t> permutation;  // estimate channel matched to source i
    std::vector<double> gains;             // least-squares scale mapping the estimate onto s_i
};

// Permutation maximizing the summed |correlation| between matched channels,
// ties broken toward the lexicographically smallest permutation;
// gain_i = <s_i, y_pi(i)> / <y_pi(i), y_pi(i)>.
ChannelAssignment match_sources(const SignalMatrix& estimates, const SignalMatrix& sources);

// per-channel 10*log10(|s|^2 / |s - g*y|^2), capped at 300 dB
std::vector<double> snr_db(const SignalMatrix& estimates, const SignalMatrix& sources,
                           const ChannelAssignment& assignment);

// Interference-to-signal ratio of a gain matrix: rows are permuted so the
// dominant entries sit on the diagonal and normalized by them, then
// ISR = sum of squared off-diagonal entries / sum of squared diagonal
// entries. Zero exactly for a scaled permutation.
double isr(const SquareMatrix& gain);

}  // namespace ccca
