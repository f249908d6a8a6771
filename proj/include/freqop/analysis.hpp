#pragma once

#include <utility>
#include <vector>

#include "freqop/sector.hpp"

namespace freqop {

/// Rounding convention for truncation windows: a_minus rounds up,
/// a_plus rounds down, both endpoints inclusive. Inner rounding keeps
/// every retained eigenvalue inside [mean - 2 eps, mean + 2 eps].
enum class WindowRounding { FloorCeilInclusive };

struct TruncationWindow {
    double epsilon;
    long long a_minus;
    long long a_plus;
    WindowRounding rounding = WindowRounding::FloorCeilInclusive;
};

/// Power-law fit of value against n on log-log axes.
struct ScalingFit {
    double exponent;
    double log_prefactor;
    double r_squared;
    std::vector<long long> n_grid;
};

struct OverlapResult {
    long long k_star;  // argmax of |<k|Psi>|; ties resolved toward smaller k
    double overlap;    // |<k_star|Psi>|
};

/// Largest overlap of the product state with any normalized eigenstate of
/// the mean-sigma_x operator. The projection onto each degenerate
/// eigenspace is proportional to the symmetric state |k>, so the maximum
/// over eigenstates equals the maximum over k.
OverlapResult max_eigenstate_overlap(const StateSpec& spec);

/// Distance from the state to the phase-aligned symmetric eigenstate |k>:
/// sqrt(2 - 2 |<k|Psi>|). The phase of the eigenstate is chosen to
/// minimize the distance.
double delta_psi_norm(const StateSpec& spec, long long k);

/// Index window [a_minus, a_plus] covering k within eps*N of p*N.
/// Throws EmptyWindowError when no integer index survives.
TruncationWindow truncation_window(const StateSpec& spec, double epsilon);

/// Probability mass carried by the window, by compensated summation of
/// exponentiated log-weights. Clamped to [0, 1].
double window_mass(const StateSpec& spec, const TruncationWindow& window);

enum class Normalize { Off, On };

/// Distance between the state and its truncation to the window.
/// Off: the truncated sum is kept as is, distance sqrt(1 - mass).
/// On (default): the truncated sum is rescaled to unit norm, distance
///      sqrt(2 - 2 sqrt(mass)).
double truncation_distance(const StateSpec& spec, double epsilon,
                           Normalize normalize = Normalize::On);

/// Eigenvalues at the window edges, (lambda_{a_minus}, lambda_{a_plus}).
/// Every eigenvalue retained by the truncation lies inside, and the pair
/// lies inside [mean - 2 eps, mean + 2 eps].
std::pair<double, double> outcome_bounds(const StateSpec& spec, double epsilon);

/// Full width at half maximum of the Born weights, counted in k:
/// the number of indices with weight >= half the peak weight.
long long peak_fwhm(const StateSpec& spec);

/// Unweighted least squares of ln(value) against ln(n). Requires at least
/// four samples with distinct n >= 1 and positive values.
ScalingFit fit_scaling(const std::vector<std::pair<long long, double>>& samples);

}  // namespace freqop
