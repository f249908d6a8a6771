#include "freqop/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace freqop {

namespace {
constexpr double kNormSlack = 1e-9;  // inputs further from unit norm are rejected
}

StateSpec make_state(long long n, std::complex<double> c_plus, std::complex<double> c_minus) {
    if (n < 1) {
        throw std::invalid_argument("make_state: particle count must be >= 1, got " +
                                    std::to_string(n));
    }
    const double norm2 = std::norm(c_plus) + std::norm(c_minus);
    if (norm2 == 0.0) {
        throw std::invalid_argument("make_state: both amplitudes are zero");
    }
    if (!(std::fabs(norm2 - 1.0) < kNormSlack)) {
        throw std::invalid_argument("make_state: |c_plus|^2 + |c_minus|^2 deviates from 1 by " +
                                    std::to_string(norm2 - 1.0));
    }
    const double scale = 1.0 / std::sqrt(norm2);
    StateSpec spec;
    spec.n = n;
    spec.c_plus = c_plus * scale;
    spec.c_minus = c_minus * scale;
    // The clamp only trims sub-ulp overshoot from the renormalization;
    // n*log(p) at the distribution endpoints must never go positive.
    spec.p = std::min(std::norm(spec.c_plus), 1.0);
    spec.q = std::min(std::norm(spec.c_minus), 1.0);
    return spec;
}

StateSpec make_state(long long n, double p) {
    if (n < 1) {
        throw std::invalid_argument("make_state: particle count must be >= 1, got " +
                                    std::to_string(n));
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("make_state: p must lie in [0, 1], got " + std::to_string(p));
    }
    StateSpec spec;
    spec.n = n;
    spec.p = p;
    spec.q = 1.0 - p;
    spec.c_plus = std::sqrt(p);
    spec.c_minus = std::sqrt(spec.q);
    return spec;
}

}  // namespace freqop
