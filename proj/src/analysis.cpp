#include "freqop/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "freqop/compensated.hpp"
#include "freqop/errors.hpp"

namespace freqop {

namespace {

// The Born weights are log-concave in k, so the argmax sits at
// floor((N+1)p) up to a possible tie with its lower neighbor. A small
// scan window around that point is exact; the margin absorbs the rounding
// of (N+1)*p.
constexpr long long kFullScanLimit = 4096;
constexpr long long kModeMargin = 4;

}  // namespace

OverlapResult max_eigenstate_overlap(const StateSpec& spec) {
    long long lo = 0;
    long long hi = spec.n;
    if (spec.n > kFullScanLimit && spec.p > 0.0 && spec.q > 0.0) {
        const long long mode =
            static_cast<long long>(std::floor(static_cast<double>(spec.n + 1) * spec.p));
        lo = std::clamp(mode - kModeMargin, 0LL, spec.n);
        hi = std::clamp(mode + kModeMargin, 0LL, spec.n);
    }
    long long k_star = lo;
    double best = log_weight(spec, lo);
    for (long long k = lo + 1; k <= hi; ++k) {
        const double lw = log_weight(spec, k);
        if (lw > best) {  // strict: ties keep the smaller k
            best = lw;
            k_star = k;
        }
    }
    return {k_star, std::exp(0.5 * best)};
}

double delta_psi_norm(const StateSpec& spec, long long k) {
    const double overlap = std::exp(0.5 * log_weight(spec, k));
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap));
}

TruncationWindow truncation_window(const StateSpec& spec, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("truncation_window: epsilon must be > 0");
    }
    // Extended precision for the index boundaries so that inner rounding
    // stays sound even when N(p +/- eps) lands next to an integer.
    const long double nl = static_cast<long double>(spec.n);
    const long double pl = static_cast<long double>(spec.p);
    const long double el = static_cast<long double>(epsilon);
    const long double lo = nl * (pl - el);
    const long double hi = nl * (pl + el);
    const long long a_minus = std::max(0LL, static_cast<long long>(std::ceil(lo)));
    const long long a_plus = std::min(spec.n, static_cast<long long>(std::floor(hi)));
    if (a_minus > a_plus) {
        throw EmptyWindowError("truncation_window: no integer index in [" +
                               std::to_string(static_cast<double>(lo)) + ", " +
                               std::to_string(static_cast<double>(hi)) + "]");
    }
    return {epsilon, a_minus, a_plus, WindowRounding::FloorCeilInclusive};
}

double window_mass(const StateSpec& spec, const TruncationWindow& window) {
    if (window.a_minus < 0 || window.a_plus > spec.n || window.a_minus > window.a_plus) {
        throw std::invalid_argument("window_mass: window does not fit the sector range");
    }
    NeumaierSum sum;
    for (long long k = window.a_minus; k <= window.a_plus; ++k) {
        sum.add(std::exp(log_weight(spec, k)));
    }
    return std::min(1.0, sum.value());
}

double truncation_distance(const StateSpec& spec, double epsilon, Normalize normalize) {
    const double mass = window_mass(spec, truncation_window(spec, epsilon));
    if (normalize == Normalize::Off) {
        return std::sqrt(std::max(0.0, 1.0 - mass));
    }
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(mass)));
}

std::pair<double, double> outcome_bounds(const StateSpec& spec, double epsilon) {
    const TruncationWindow window = truncation_window(spec, epsilon);
    return {sector_eigenvalue(spec.n, window.a_minus),
            sector_eigenvalue(spec.n, window.a_plus)};
}

long long peak_fwhm(const StateSpec& spec) {
    const OverlapResult peak = max_eigenstate_overlap(spec);
    const double threshold = log_weight(spec, peak.k_star) - std::numbers::ln2;
    // Log-concavity makes the half-max set contiguous; walk out from the peak.
    long long left = peak.k_star;
    while (left > 0 && log_weight(spec, left - 1) >= threshold) --left;
    long long right = peak.k_star;
    while (right < spec.n && log_weight(spec, right + 1) >= threshold) ++right;
    return right - left + 1;
}

ScalingFit fit_scaling(const std::vector<std::pair<long long, double>>& samples) {
    if (samples.size() < 4) {
        throw std::invalid_argument("fit_scaling: need at least 4 samples, got " +
                                    std::to_string(samples.size()));
    }
    std::vector<std::pair<long long, double>> pts = samples;
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].first < 1) {
            throw std::invalid_argument("fit_scaling: n must be >= 1");
        }
        if (!(pts[i].second > 0.0)) {
            throw std::invalid_argument("fit_scaling: values must be positive to fit in log space");
        }
        if (i > 0 && pts[i].first == pts[i - 1].first) {
            throw std::invalid_argument("fit_scaling: duplicate n = " +
                                        std::to_string(pts[i].first));
        }
    }

    const std::size_t m = pts.size();
    std::vector<double> xs(m), ys(m);
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        xs[i] = std::log(static_cast<double>(pts[i].first));
        ys[i] = std::log(pts[i].second);
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= static_cast<double>(m);
    y_mean /= static_cast<double>(m);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    const double slope = sxy / sxx;
    const double intercept = y_mean - slope * x_mean;

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        ss_res += r * r;
        ss_tot += (ys[i] - y_mean) * (ys[i] - y_mean);
    }
    const double r2 = (ss_tot > 0.0) ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;

    ScalingFit fit;
    fit.exponent = slope;
    fit.log_prefactor = intercept;
    fit.r_squared = r2;
    fit.n_grid.reserve(m);
    for (const auto& [n, value] : pts) fit.n_grid.push_back(n);
    return fit;
}

}  // namespace freqop
