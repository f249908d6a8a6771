#pragma once

#include <complex>
#include <vector>

#include "freqop/state.hpp"

namespace freqop {

/// Largest particle count the dense representation accepts by default
/// (2^14 = 16384 amplitudes).
inline constexpr long long kDefaultDenseGuard = 14;

/// Brute-force state vector over all 2^N product basis states.
/// Bit r of the index is set iff particle r is in |+>.
struct DenseState {
    long long n = 0;
    std::vector<std::complex<double>> amplitudes;
};

/// Dense product state: amplitude c_plus^popcount(b) * c_minus^(N - popcount(b)).
DenseState dense_state(const StateSpec& spec, long long dense_guard = kDefaultDenseGuard);

/// Applies the mean-sigma_x operator, which is diagonal in this basis:
/// each amplitude is scaled by (2 popcount(b) - N) / N. The result is not
/// normalized in general.
DenseState apply_mx(const DenseState& state);

/// Uniform superposition of all basis states with popcount k; a unit
/// eigenvector with eigenvalue 2k/N - 1.
DenseState dense_k_state(long long n, long long k, long long dense_guard = kDefaultDenseGuard);

/// Ground-truth check of the sector machinery against the dense vector:
/// compares <k|Psi> computed densely with the log-weight/phase pair for
/// every k, and the dense residual norm of (M_x - mean) with the closed
/// form. Returns the largest absolute deviation found.
double verify_decomposition(const StateSpec& spec, long long dense_guard = kDefaultDenseGuard);

}  // namespace freqop
