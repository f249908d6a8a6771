#pragma once

#include <vector>

#include "freqop/state.hpp"

namespace freqop {

/// Largest N whose (N+1)-entry table sector_table will materialize by default.
inline constexpr long long kDefaultTableGuard = 100'000'000;

/// One component of the product state in the permutation-symmetric
/// eigenbasis: k counts the particles in |+>, lambda is the corresponding
/// measurement eigenvalue, and the amplitude is carried as log-magnitude
/// plus phase so tables stay finite for N up to 1e9.
struct SectorEntry {
    long long k;
    double lambda;    // 2k/N - 1
    double log_prob;  // ln of the Born weight |<k|Psi>|^2
    double phase;     // arg <k|Psi>, in (-pi, pi]
};

struct Moments {
    double mean;        // 2p - 1
    double variance;    // 4pq/N
    double delta_norm;  // sqrt(variance); residual norm of (M_x - mean) applied to the state
};

/// Measurement eigenvalue attached to sector index k.
double sector_eigenvalue(long long n, long long k);

/// ln of the Born weight C(N,k) p^k q^(N-k). Finite for every 0 <= k <= N
/// (degenerate p uses the 0*ln(0) = 0 convention) and accurate for N up
/// to 1e9: the binomial term is evaluated through the Stirling - De Moivre
/// split (stirlerr plus deviance) rather than a difference of large
/// log-gammas, which keeps the absolute error near machine precision.
double log_weight(const StateSpec& spec, long long k);

/// arg <k|Psi> = k arg(c_plus) + (N-k) arg(c_minus), wrapped to (-pi, pi].
double sector_phase(const StateSpec& spec, long long k);

/// Full table for k = 0..N. Throws GuardError when N exceeds the guard;
/// callers with larger N should use log_weight pointwise.
std::vector<SectorEntry> sector_table(const StateSpec& spec,
                                      long long table_guard = kDefaultTableGuard);

/// Mean and variance of the measurement outcome on the given state.
/// The variance is the closed form 4pq/N; whenever N is within the table
/// guard it is cross-checked against the weighted sector sum
/// sum_k w_k (lambda_k - mean)^2, and a disagreement beyond 1e-10 throws
/// std::logic_error.
Moments moments(const StateSpec& spec, long long table_guard = kDefaultTableGuard);

}  // namespace freqop
