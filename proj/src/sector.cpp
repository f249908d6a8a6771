#include "freqop/sector.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "freqop/compensated.hpp"
#include "freqop/errors.hpp"

namespace freqop {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// stirlerr(n) = ln n! - ln( sqrt(2 pi n) (n/e)^n ).
// Exact-to-double values for n = 1..15; the asymptotic series takes over
// above that, with term counts chosen so the truncation error stays below
// 1e-16 on each range.
constexpr double kStirlerrSmall[16] = {
    0.0,
    8.106146679532725822e-02,
    4.134069595540929409e-02,
    2.767792568499833915e-02,
    2.079067210376509311e-02,
    1.664469118982119216e-02,
    1.387612882307074800e-02,
    1.189670994589177010e-02,
    1.041126526197209650e-02,
    9.255462182712732918e-03,
    8.330563433362871256e-03,
    7.573675487951840795e-03,
    6.942840107209529866e-03,
    6.408994188004207068e-03,
    5.951370112758847736e-03,
    5.554733551962801371e-03,
};

double stirlerr(double n) {
    if (n <= 15.0) {
        return kStirlerrSmall[static_cast<int>(n)];
    }
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    const double nn = n * n;
    if (n > 500.0) return (s0 - s1 / nn) / n;
    if (n > 80.0) return (s0 - (s1 - s2 / nn) / nn) / n;
    if (n > 35.0) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
    return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// Binomial deviance x*ln(x/m) + m - x, evaluated by series when x is close
// to m to avoid the catastrophic cancellation of the direct form.
double bd0(double x, double m) {
    if (std::fabs(x - m) < 0.1 * (x + m)) {
        const double v = (x - m) / (x + m);
        const double v2 = v * v;
        double s = (x - m) * v;
        double ej = 2.0 * x * v;
        for (int j = 1;; ++j) {
            ej *= v2;
            const double s1 = s + ej / (2 * j + 1);
            if (s1 == s) return s1;
            s = s1;
        }
    }
    return x * std::log(x / m) + m - x;
}

void check_k_range(const StateSpec& spec, long long k, const char* where) {
    if (k < 0 || k > spec.n) {
        throw std::invalid_argument(std::string(where) + ": k = " + std::to_string(k) +
                                    " outside [0, " + std::to_string(spec.n) + "]");
    }
}

}  // namespace

double sector_eigenvalue(long long n, long long k) {
    return 2.0 * static_cast<double>(k) / static_cast<double>(n) - 1.0;
}

double log_weight(const StateSpec& spec, long long k) {
    check_k_range(spec, k, "log_weight");
    const long long n = spec.n;
    const double p = spec.p;
    const double q = spec.q;
    if (p == 0.0) return (k == 0) ? 0.0 : kNegInf;
    if (q == 0.0) return (k == n) ? 0.0 : kNegInf;
    const double nd = static_cast<double>(n);
    if (k == 0) return nd * std::log(q);
    if (k == n) return nd * std::log(p);
    const double kd = static_cast<double>(k);
    const double nmk = static_cast<double>(n - k);
    // Bracketing keeps the expression bit-for-bit symmetric under the
    // simultaneous swap (p,q) -> (q,p), k -> n-k.
    const double lc = stirlerr(nd) - (stirlerr(kd) + stirlerr(nmk)) -
                      (bd0(kd, nd * p) + bd0(nmk, nd * q));
    return lc - 0.5 * std::log(2.0 * std::numbers::pi * ((kd * nmk) / nd));
}

double sector_phase(const StateSpec& spec, long long k) {
    check_k_range(spec, k, "sector_phase");
    const double raw = static_cast<double>(k) * std::arg(spec.c_plus) +
                       static_cast<double>(spec.n - k) * std::arg(spec.c_minus);
    double wrapped = std::remainder(raw, 2.0 * std::numbers::pi);
    if (wrapped <= -std::numbers::pi) wrapped += 2.0 * std::numbers::pi;
    return wrapped;
}

std::vector<SectorEntry> sector_table(const StateSpec& spec, long long table_guard) {
    if (spec.n > table_guard) {
        throw GuardError("sector_table: N = " + std::to_string(spec.n) +
                         " exceeds the table guard " + std::to_string(table_guard) +
                         "; use log_weight pointwise instead");
    }
    std::vector<SectorEntry> table;
    table.reserve(static_cast<std::size_t>(spec.n + 1));
    for (long long k = 0; k <= spec.n; ++k) {
        table.push_back({k, sector_eigenvalue(spec.n, k), log_weight(spec, k),
                         sector_phase(spec, k)});
    }
    return table;
}

Moments moments(const StateSpec& spec, long long table_guard) {
    Moments m;
    m.mean = 2.0 * spec.p - 1.0;
    m.variance = 4.0 * spec.p * spec.q / static_cast<double>(spec.n);
    m.delta_norm = std::sqrt(m.variance);
    if (spec.n <= table_guard) {
        // Cross-check against the sector-sum route.
        NeumaierSum sum;
        for (long long k = 0; k <= spec.n; ++k) {
            const double d = sector_eigenvalue(spec.n, k) - m.mean;
            sum.add(std::exp(log_weight(spec, k)) * d * d);
        }
        if (std::fabs(sum.value() - m.variance) > 1e-10) {
            throw std::logic_error("moments: closed-form and sector-sum variances disagree by " +
                                   std::to_string(sum.value() - m.variance));
        }
    }
    return m;
}

}  // namespace freqop
