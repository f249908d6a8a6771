#include "freqop/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "freqop/analysis.hpp"
#include "freqop/errors.hpp"
#include "freqop/sector.hpp"

namespace freqop {

namespace {

// SplitMix64 finalizer over (seed, shot). Every shot gets its own engine
// seeded from this value, so the batch is reproducible and identical no
// matter how shots are scheduled across workers.
std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t shot) {
    std::uint64_t z = seed + (shot + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

void check_shots(long long shots) {
    if (shots < 1) {
        throw std::invalid_argument("sampling: shots must be >= 1");
    }
}

}  // namespace

SampleBatch sample_per_particle(const StateSpec& spec, long long shots, std::uint64_t seed,
                                long long work_budget) {
    check_shots(shots);
    if (shots > work_budget / spec.n) {
        throw GuardError("sample_per_particle: N * shots exceeds the work budget of " +
                         std::to_string(work_budget) + " Bernoulli draws");
    }
    SampleBatch batch{seed, shots, {}, spec};
    batch.k_counts.reserve(static_cast<std::size_t>(shots));
    for (long long shot = 0; shot < shots; ++shot) {
        if (spec.p == 0.0) {
            batch.k_counts.push_back(0);
            continue;
        }
        if (spec.q == 0.0) {
            batch.k_counts.push_back(spec.n);
            continue;
        }
        std::mt19937_64 gen(shot_seed(seed, static_cast<std::uint64_t>(shot)));
        long long k = 0;
        for (long long r = 0; r < spec.n; ++r) {
            if (uniform01(gen) < spec.p) ++k;
        }
        batch.k_counts.push_back(k);
    }
    return batch;
}

SampleBatch sample_sector(const StateSpec& spec, long long shots, std::uint64_t seed) {
    check_shots(shots);
    SampleBatch batch{seed, shots, {}, spec};
    batch.k_counts.reserve(static_cast<std::size_t>(shots));
    for (long long shot = 0; shot < shots; ++shot) {
        if (spec.p == 0.0) {
            batch.k_counts.push_back(0);
            continue;
        }
        if (spec.q == 0.0) {
            batch.k_counts.push_back(spec.n);
            continue;
        }
        std::mt19937_64 gen(shot_seed(seed, static_cast<std::uint64_t>(shot)));
        std::binomial_distribution<long long> binomial(spec.n, spec.p);
        batch.k_counts.push_back(binomial(gen));
    }
    return batch;
}

double empirical_fplus(const SampleBatch& batch) {
    if (batch.shots < 1 || batch.k_counts.empty()) {
        throw std::invalid_argument("empirical_fplus: empty batch");
    }
    long double total = 0.0L;
    for (long long k : batch.k_counts) total += static_cast<long double>(k);
    const long double draws = static_cast<long double>(batch.spec_snapshot.n) *
                              static_cast<long double>(batch.shots);
    return static_cast<double>(total / draws);
}

double concentration_report(const SampleBatch& batch, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("concentration_report: epsilon must be > 0");
    }
    if (batch.shots < 1 || batch.k_counts.empty()) {
        throw std::invalid_argument("concentration_report: empty batch");
    }
    // |lambda_k - mean| <= 2 eps is, in exact arithmetic, the index band
    // N(p - eps) <= k <= N(p + eps). Reuse the extended-precision window so
    // boundary indices land on the same side as in window_mass.
    long long lo, hi;
    try {
        const TruncationWindow window = truncation_window(batch.spec_snapshot, epsilon);
        lo = window.a_minus;
        hi = window.a_plus;
    } catch (const EmptyWindowError&) {
        return 0.0;
    }
    long long inside = 0;
    for (long long k : batch.k_counts) {
        if (k >= lo && k <= hi) ++inside;
    }
    return static_cast<double>(inside) / static_cast<double>(batch.shots);
}

}  // namespace freqop
