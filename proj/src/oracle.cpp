#include "freqop/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "freqop/errors.hpp"
#include "freqop/sector.hpp"

namespace freqop {

namespace {

void check_dense_guard(long long n, long long dense_guard, const char* where) {
    if (n > dense_guard) {
        throw GuardError(std::string(where) + ": N = " + std::to_string(n) +
                         " exceeds the dense guard " + std::to_string(dense_guard));
    }
}

// Exact for the small n the dense guard admits.
long long binomial_coefficient(long long n, long long k) {
    long long c = 1;
    for (long long i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

}  // namespace

DenseState dense_state(const StateSpec& spec, long long dense_guard) {
    check_dense_guard(spec.n, dense_guard, "dense_state");
    const std::size_t dim = std::size_t{1} << spec.n;
    // Powers of the two amplitudes, filled once.
    std::vector<std::complex<double>> plus_pow(spec.n + 1), minus_pow(spec.n + 1);
    plus_pow[0] = minus_pow[0] = 1.0;
    for (long long i = 1; i <= spec.n; ++i) {
        plus_pow[i] = plus_pow[i - 1] * spec.c_plus;
        minus_pow[i] = minus_pow[i - 1] * spec.c_minus;
    }
    DenseState state{spec.n, std::vector<std::complex<double>>(dim)};
    for (std::size_t b = 0; b < dim; ++b) {
        const int ones = std::popcount(b);
        state.amplitudes[b] = plus_pow[ones] * minus_pow[spec.n - ones];
    }
    return state;
}

DenseState apply_mx(const DenseState& state) {
    DenseState out{state.n, std::vector<std::complex<double>>(state.amplitudes.size())};
    for (std::size_t b = 0; b < state.amplitudes.size(); ++b) {
        out.amplitudes[b] = state.amplitudes[b] * sector_eigenvalue(state.n, std::popcount(b));
    }
    return out;
}

DenseState dense_k_state(long long n, long long k, long long dense_guard) {
    check_dense_guard(n, dense_guard, "dense_k_state");
    if (n < 1 || k < 0 || k > n) {
        throw std::invalid_argument("dense_k_state: need 0 <= k <= n and n >= 1");
    }
    const std::size_t dim = std::size_t{1} << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial_coefficient(n, k)));
    DenseState state{n, std::vector<std::complex<double>>(dim)};
    for (std::size_t b = 0; b < dim; ++b) {
        if (std::popcount(b) == k) state.amplitudes[b] = amp;
    }
    return state;
}

double verify_decomposition(const StateSpec& spec, long long dense_guard) {
    const DenseState psi = dense_state(spec, dense_guard);
    const long long n = spec.n;

    // <k|Psi> densely: the symmetric state spreads 1/sqrt(C(n,k)) over all
    // popcount-k basis states, so the inner product is the amplitude sum
    // over the group divided by sqrt(C(n,k)).
    std::vector<std::complex<double>> group_sum(n + 1, 0.0);
    for (std::size_t b = 0; b < psi.amplitudes.size(); ++b) {
        group_sum[std::popcount(b)] += psi.amplitudes[b];
    }

    double max_dev = 0.0;
    for (long long k = 0; k <= n; ++k) {
        const std::complex<double> dense_ip =
            group_sum[k] / std::sqrt(static_cast<double>(binomial_coefficient(n, k)));
        const std::complex<double> sector_ip =
            std::polar(std::exp(0.5 * log_weight(spec, k)), sector_phase(spec, k));
        max_dev = std::max(max_dev, std::abs(dense_ip - sector_ip));
    }

    // Residual norm of (M_x - mean) on the dense vector against the closed form.
    const Moments m = moments(spec);
    const DenseState mx_psi = apply_mx(psi);
    double residual2 = 0.0;
    for (std::size_t b = 0; b < psi.amplitudes.size(); ++b) {
        residual2 += std::norm(mx_psi.amplitudes[b] - m.mean * psi.amplitudes[b]);
    }
    max_dev = std::max(max_dev, std::fabs(std::sqrt(residual2) - m.delta_norm));
    return max_dev;
}

}  // namespace freqop
