#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "freqop/errors.hpp"
#include "freqop/sector.hpp"
#include "freqop/state.hpp"

using namespace freqop;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Independent route for small N: the weight recursion
// w(0) = q^N, w(k+1) = w(k) * (N-k)/(k+1) * p/q, in extended precision.
std::vector<double> recursion_weights(long long n, double p) {
    const long double pl = p, ql = 1.0L - static_cast<long double>(p);
    std::vector<long double> w(n + 1);
    w[0] = std::pow(ql, static_cast<long double>(n));
    for (long long k = 0; k + 1 <= n; ++k) {
        w[k + 1] = w[k] * static_cast<long double>(n - k) / static_cast<long double>(k + 1) *
                   (pl / ql);
    }
    return {w.begin(), w.end()};
}

}  // namespace

TEST_CASE("make_state validates and renormalizes") {
    SUBCASE("single particle, pure plus") {
        const StateSpec s = make_state(1, {1.0, 0.0}, {0.0, 0.0});
        CHECK(s.p == 1.0);
        CHECK(s.q == 0.0);
    }
    SUBCASE("balanced superposition") {
        const StateSpec s = make_state(4, {kInvSqrt2, 0.0}, {kInvSqrt2, 0.0});
        CHECK(s.p == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(s.p + s.q == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("complex amplitudes keep their phases") {
        const StateSpec s = make_state(4, {0.8, 0.0}, {0.0, 0.6});
        CHECK(s.p == doctest::Approx(0.64).epsilon(1e-14));
        CHECK(std::arg(s.c_minus) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
        CHECK(std::fabs(std::norm(s.c_plus) + std::norm(s.c_minus) - 1.0) < 1e-12);
    }
    SUBCASE("p shorthand") {
        const StateSpec s = make_state(7, 0.3);
        CHECK(s.p == 0.3);
        CHECK(s.q == 0.7);
        CHECK(s.c_plus.real() == doctest::Approx(std::sqrt(0.3)));
    }
    SUBCASE("mild denormalization is absorbed") {
        const StateSpec s = make_state(2, {1.0 + 4e-10, 0.0}, {0.0, 0.0});
        CHECK(s.p == 1.0);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(make_state(0, {1.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_state(-3, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(make_state(2, {0.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_state(2, {0.8, 0.0}, {0.599999, 0.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_state(2, 1.5), std::invalid_argument);
        CHECK_THROWS_AS(make_state(2, -0.1), std::invalid_argument);
    }
}

TEST_CASE("log_weight matches direct small-N evaluation") {
    const StateSpec s = make_state(4, 0.5);
    // C(4,2)/2^4 = 6/16
    CHECK(log_weight(s, 2) == doctest::Approx(std::log(6.0 / 16.0)).epsilon(1e-14));
    CHECK(std::exp(log_weight(s, 0)) == doctest::Approx(1.0 / 16.0).epsilon(1e-13));
    CHECK(std::exp(log_weight(s, 1)) == doctest::Approx(4.0 / 16.0).epsilon(1e-13));
}

TEST_CASE("log_weight handles degenerate states") {
    const StateSpec s = make_state(7, 1.0);
    CHECK(log_weight(s, 7) == 0.0);
    CHECK(log_weight(s, 3) == -std::numeric_limits<double>::infinity());
    const StateSpec z = make_state(7, 0.0);
    CHECK(log_weight(z, 0) == 0.0);
    CHECK(log_weight(z, 1) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("log_weight rejects k outside the sector") {
    const StateSpec s = make_state(5, 0.5);
    CHECK_THROWS_AS(log_weight(s, -1), std::invalid_argument);
    CHECK_THROWS_AS(log_weight(s, 6), std::invalid_argument);
}

TEST_CASE("log_weight at N = 1e6 agrees with high-precision reference") {
    const StateSpec s = make_state(1000000, 0.5);
    // ln C(1e6, 5e5) - 1e6 ln 2, evaluated with 40-digit arithmetic.
    CHECK(log_weight(s, 500000) == doctest::Approx(-7.1335468816268644844).epsilon(1e-13));
    // Peak value against the Gaussian-limit form (2 pi N p q)^(-1/2), 0.1%.
    const double stirling = 1.0 / std::sqrt(2.0 * std::numbers::pi * 1e6 * 0.25);
    CHECK(std::exp(log_weight(s, 500000)) ==
          doctest::Approx(stirling).epsilon(1e-3));
}

TEST_CASE("log_weight stays finite and accurate at N = 1e9") {
    const long long n = 1000000000;
    const StateSpec s = make_state(n, 0.5);
    // Endpoint weights are astronomically small but finite in log space.
    CHECK(std::isfinite(log_weight(s, 0)));
    CHECK(log_weight(s, 0) == doctest::Approx(n * std::log(0.5)).epsilon(1e-14));
    // Peak weight against the Gaussian-limit form.
    const double peak = std::exp(log_weight(s, n / 2));
    const double stirling = 1.0 / std::sqrt(2.0 * std::numbers::pi * 1e9 * 0.25);
    CHECK(peak == doctest::Approx(stirling).epsilon(1e-3));
    // A window of +-20 standard deviations carries all the mass.
    const long long half_width = 20 * 15812;  // 20 * sqrt(N p q), rounded up
    long double mass = 0.0L;
    for (long long k = n / 2 - half_width; k <= n / 2 + half_width; ++k) {
        mass += static_cast<long double>(std::exp(log_weight(s, k)));
    }
    CHECK(std::fabs(static_cast<double>(mass) - 1.0) < 1e-9);
}

TEST_CASE("weights sum to one across N and p") {
    for (long long n : {1LL, 2LL, 3LL, 10LL, 100LL, 1000LL, 10000LL, 1000000LL}) {
        for (int tenths = 0; tenths <= 10; ++tenths) {
            const StateSpec s = make_state(n, tenths / 10.0);
            long double sum = 0.0L;
            for (long long k = 0; k <= n; ++k) {
                sum += static_cast<long double>(std::exp(log_weight(s, k)));
            }
            CHECK(std::fabs(static_cast<double>(sum) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("weights match the extended-precision recursion") {
    std::mt19937_64 gen(20240811);
    std::uniform_real_distribution<double> unif(0.02, 0.98);
    for (long long n : {5LL, 37LL, 200LL, 1777LL}) {
        const double p = unif(gen);
        const StateSpec s = make_state(n, p);
        const std::vector<double> ref = recursion_weights(n, p);
        for (long long k = 0; k <= n; ++k) {
            const double w = std::exp(log_weight(s, k));
            CHECK(w == doctest::Approx(ref[k]).epsilon(1e-11));
        }
    }
}

TEST_CASE("swapping the amplitudes mirrors the weights exactly") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (long long n : {1LL, 5LL, 17LL, 100LL, 1001LL, 123456LL}) {
        std::complex<double> a{unif(gen), unif(gen)}, b{unif(gen), unif(gen)};
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        a /= norm;
        b /= norm;
        const StateSpec s = make_state(n, a, b);
        const StateSpec swapped = make_state(n, b, a);
        for (long long k = 0; k <= std::min(n, 40LL); ++k) {
            CHECK(log_weight(s, k) == log_weight(swapped, n - k));  // bit-exact
        }
        CHECK(log_weight(s, n / 2) == log_weight(swapped, n - n / 2));
    }
}

TEST_CASE("sector eigenvalues stay affine in k") {
    const StateSpec s = make_state(12, 0.3);
    CHECK(sector_eigenvalue(12, 0) == -1.0);
    CHECK(sector_eigenvalue(12, 12) == 1.0);
    CHECK(sector_eigenvalue(12, 6) == 0.0);
    const auto table = sector_table(s);
    for (const auto& e : table) {
        CHECK(e.lambda == sector_eigenvalue(12, e.k));
        CHECK(e.lambda >= -1.0);
        CHECK(e.lambda <= 1.0);
    }
}

TEST_CASE("sector_table reproduces the single-particle Born rule") {
    const StateSpec s = make_state(1, {0.8, 0.0}, {0.0, 0.6});
    const auto table = sector_table(s);
    REQUIRE(table.size() == 2);
    CHECK(table[0].lambda == -1.0);
    CHECK(table[1].lambda == 1.0);
    CHECK(std::exp(table[0].log_prob) == doctest::Approx(0.36).epsilon(1e-13));
    CHECK(std::exp(table[1].log_prob) == doctest::Approx(0.64).epsilon(1e-13));
}

TEST_CASE("sector_table: two balanced particles") {
    const StateSpec s = make_state(2, kInvSqrt2, kInvSqrt2);
    const auto table = sector_table(s);
    REQUIRE(table.size() == 3);
    CHECK(std::exp(table[0].log_prob) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(std::exp(table[1].log_prob) == doctest::Approx(0.50).epsilon(1e-13));
    CHECK(std::exp(table[2].log_prob) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(table[0].lambda == -1.0);
    CHECK(table[1].lambda == 0.0);
    CHECK(table[2].lambda == 1.0);
}

TEST_CASE("sector_table normalization and guard") {
    const StateSpec s = make_state(5000, 0.37);
    const auto table = sector_table(s);
    long double sum = 0.0L;
    for (const auto& e : table) sum += static_cast<long double>(std::exp(e.log_prob));
    CHECK(std::fabs(static_cast<double>(sum) - 1.0) < 1e-10);
    CHECK_THROWS_AS(sector_table(s, 1000), GuardError);
}

TEST_CASE("sector phases follow the amplitude arguments") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::complex<double> a{unif(gen), unif(gen)}, b{unif(gen), unif(gen)};
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        const StateSpec s = make_state(11, a / norm, b / norm);
        for (long long k = 0; k <= 11; ++k) {
            const std::complex<double> direct =
                std::pow(s.c_plus, static_cast<double>(k)) *
                std::pow(s.c_minus, static_cast<double>(11 - k));
            const double phase = sector_phase(s, k);
            CHECK(phase > -std::numbers::pi);
            CHECK(phase <= std::numbers::pi);
            // Compare directions on the unit circle to dodge branch cuts.
            const std::complex<double> u = std::polar(1.0, phase);
            const std::complex<double> v = direct / std::abs(direct);
            CHECK(std::abs(u - v) < 1e-12);
        }
    }
}

TEST_CASE("moments: exact eigenstate has zero spread") {
    for (long long n : {1LL, 8LL, 100000LL}) {
        const Moments m = moments(make_state(n, 1.0));
        CHECK(m.mean == 1.0);
        CHECK(m.variance == 0.0);
        CHECK(m.delta_norm == 0.0);
    }
}

TEST_CASE("moments: balanced four-particle state") {
    const Moments m = moments(make_state(4, 0.5));
    CHECK(m.mean == 0.0);
    CHECK(m.variance == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(m.delta_norm == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("moments: closed form equals the sector sum independently") {
    std::mt19937_64 gen(123);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long long n : {4LL, 100LL, 12345LL}) {
        const double p = unif(gen);
        const StateSpec s = make_state(n, p);
        const Moments m = moments(s);
        CHECK(m.mean >= -1.0);
        CHECK(m.mean <= 1.0);
        CHECK(m.delta_norm * m.delta_norm == doctest::Approx(m.variance).epsilon(1e-14));
        // Recompute the sum route here, independent of the one inside moments().
        long double sum = 0.0L;
        for (long long k = 0; k <= n; ++k) {
            const long double d = sector_eigenvalue(n, k) - m.mean;
            sum += static_cast<long double>(std::exp(log_weight(s, k))) * d * d;
        }
        CHECK(std::fabs(static_cast<double>(sum) - m.variance) < 1e-10);
    }
}

TEST_CASE("moments delta_norm falls as the inverse square root of N") {
    // delta^2 = 4pq/N exactly, so the fitted exponent of delta^2 must be -1.
    std::vector<std::pair<long long, double>> pts;
    for (long long n : {100LL, 1000LL, 10000LL, 100000LL, 1000000LL}) {
        const Moments m = moments(make_state(n, 0.5), /*table_guard=*/1);
        pts.emplace_back(n, m.delta_norm * m.delta_norm);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, v] : pts) {
        const double x = std::log(static_cast<double>(n)), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double npts = static_cast<double>(pts.size());
    const double slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
    CHECK(slope == doctest::Approx(-1.0).epsilon(0.01));
}
