#pragma once

#include <cstdint>
#include <vector>

#include "freqop/state.hpp"

namespace freqop {

/// Cap on N * shots for the per-particle sampler.
inline constexpr long long kDefaultWorkBudget = 1'000'000'000;

/// Outcomes of repeated measurements on fresh copies of the state.
/// k_counts[s] is the number of +1 results in shot s.
struct SampleBatch {
    std::uint64_t seed = 0;
    long long shots = 0;
    std::vector<long long> k_counts;
    StateSpec spec_snapshot;
};

/// Measures sigma_x on each of the N particles, shot by shot: N
/// independent Bernoulli(p) draws per shot. Each shot uses its own
/// random stream derived from (seed, shot index), so results are
/// reproducible and independent of any parallel scheduling.
/// Throws GuardError when N * shots exceeds the work budget.
SampleBatch sample_per_particle(const StateSpec& spec, long long shots, std::uint64_t seed,
                                long long work_budget = kDefaultWorkBudget);

/// Draws k directly from the sector Born distribution (binomial in k),
/// with per-shot cost independent of N. Same per-shot stream derivation
/// as sample_per_particle.
SampleBatch sample_sector(const StateSpec& spec, long long shots, std::uint64_t seed);

/// Empirical frequency of the +1 outcome: sum(k_counts) / (N * shots).
double empirical_fplus(const SampleBatch& batch);

/// Fraction of shots whose outcome lambda_k lies within 2*eps of the
/// state mean 2p - 1.
double concentration_report(const SampleBatch& batch, double epsilon);

}  // namespace freqop
