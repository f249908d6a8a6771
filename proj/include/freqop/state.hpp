#pragma once

#include <complex>

namespace freqop {

/// Parameters of the N-particle product state: every particle carries the
/// same single-particle amplitudes (c_plus, c_minus) on the sigma_x
/// eigenbasis. Construct through make_state, which validates and
/// renormalizes; p and q are the squared magnitudes of the renormalized
/// amplitudes, kept separately so that ln(q) stays accurate when p is
/// close to 1.
struct StateSpec {
    long long n = 1;
    std::complex<double> c_plus{1.0, 0.0};
    std::complex<double> c_minus{0.0, 0.0};
    double p = 1.0;  // |c_plus|^2
    double q = 0.0;  // |c_minus|^2
};

/// Validates and renormalizes. Rejects n < 1, amplitudes that are both
/// zero, and norms off from 1 by 1e-9 or more (smaller deviations are
/// renormalized away).
StateSpec make_state(long long n, std::complex<double> c_plus, std::complex<double> c_minus);

/// Real-amplitude shorthand: c_plus = sqrt(p), c_minus = sqrt(1-p).
StateSpec make_state(long long n, double p);

}  // namespace freqop
