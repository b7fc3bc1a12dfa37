#include <doctest.h>

#include <cmath>
#include <random>

#include "lipspace/haar.hpp"

using namespace lipspace;

namespace {

PeriodicSignal random_signal(std::mt19937_64& rng, std::size_t N) {
    std::normal_distribution<double> g;
    std::vector<cplx> s(N);
    for (auto& z : s) z = cplx(g(rng), g(rng));
    return make_signal(std::move(s));
}

// psi_{j,m} sampled as cell averages: +2^{j/2} on the left half of its support, -2^{j/2} on the right.
PeriodicSignal haar_mother(std::size_t N, int j, std::size_t m) {
    std::vector<cplx> s(N, 0.0);
    const std::size_t width = N >> j;
    for (std::size_t x = 0; x < width; ++x) s[m * width + x] = std::sqrt(std::ldexp(1.0, j)) * (x < width / 2 ? 1.0 : -1.0);
    return make_signal(std::move(s));
}

}  // namespace

TEST_CASE("analysis and synthesis invert each other") {
    std::mt19937_64 rng(1);
    for (std::size_t N : {8u, 16u, 64u, 1024u}) {
        auto f = random_signal(rng, N);
        auto g = haar_synthesize(haar_analyze(f));
        REQUIRE(g.size() == N);
        for (std::size_t n = 0; n < N; ++n) CHECK(std::abs(g.samples[n] - f.samples[n]) <= 1e-12);
    }
}

TEST_CASE("Parseval") {
    std::mt19937_64 rng(2);
    auto f = random_signal(rng, 256);
    auto c = haar_analyze(f);
    double energy = std::norm(c.mean);
    for (const auto& lv : c.levels)
        for (const auto& z : lv) energy += std::norm(z);
    double avg = 0.0;
    for (const auto& z : f.samples) avg += std::norm(z);
    avg /= 256.0;
    CHECK(energy == doctest::Approx(avg).epsilon(1e-12));
}

TEST_CASE("elementary coefficients") {
    auto c = haar_analyze(make_signal(std::vector<cplx>(32, cplx(1.5, 2.0))));
    CHECK(std::abs(c.mean - cplx(1.5, 2.0)) <= 1e-12);
    for (const auto& lv : c.levels)
        for (const auto& z : lv) CHECK(std::abs(z) <= 1e-12);

    auto h = haar_analyze(haar_mother(64, 0, 0));
    CHECK(std::abs(h.mean) <= 1e-12);
    CHECK(h.lambda(0, 0).real() == doctest::Approx(1.0));
    auto k = haar_analyze(haar_mother(64, 3, 5));
    CHECK(k.levels[3][5].real() == doctest::Approx(1.0));
    CHECK(k.lambda(3, 5).real() == doctest::Approx(std::sqrt(8.0)));
    for (int j = 0; j < k.J(); ++j)
        for (std::size_t m = 0; m < k.levels[j].size(); ++m)
            if (j != 3 || m != 5) CHECK(std::abs(k.levels[j][m]) <= 1e-12);
    CHECK_THROWS(haar_analyze(make_signal(std::vector<cplx>(12, 1.0))));
}

TEST_CASE("Triebel-Lizorkin sequence norm at s = 0, p = 2 is the detail energy") {
    std::mt19937_64 rng(3);
    auto c = haar_analyze(random_signal(rng, 128));
    double e = 0.0;
    for (const auto& lv : c.levels)
        for (const auto& z : lv) e += std::norm(z);
    CHECK(f_sequence_norm(c, 0.0, 2.0) == doctest::Approx(std::sqrt(e)).epsilon(1e-12));
    CHECK_THROWS(f_sequence_norm(c, 0.0, 1.0));
}

TEST_CASE("Lipschitz sequence norm") {
    auto zero = haar_analyze(make_signal(std::vector<cplx>(64, 0.0)));
    CHECK(lip_sequence_norm(zero, 0.25, 1.0, 2.0, 2.0).value == 0.0);

    // one coefficient at level 0: the square function is |lambda|^2 on all of [0,1) from k = 0 on
    auto c = haar_analyze(haar_mother(64, 0, 0));
    const double a = 0.25, b = 1.0, q = 2.0;
    auto r = lip_sequence_norm(c, a, b, 2.0, q);
    CHECK(r.value == doctest::Approx(M_PI / std::sqrt(6.0)).epsilon(1e-10));
    CHECK(r.equivalenceValid);
    CHECK(recompute_value(r) == doctest::Approx(r.value).epsilon(1e-12));

    CHECK_FALSE(lip_sequence_norm(c, 0.8, b, 2.0, q).equivalenceValid);
    CHECK_FALSE(haar_regime(0.5, 2.0));
    CHECK(haar_regime(0.3, 3.0));
    CHECK_FALSE(haar_regime(0.4, 3.0));
    CHECK_THROWS(lip_sequence_norm(c, a, 0.5, 2.0, 2.0));
    CHECK_THROWS(lip_sequence_norm(c, 0.0, b, 2.0, 2.0));
}

TEST_CASE("unweighted Lipschitz terms grow with the level") {
    std::mt19937_64 rng(4);
    auto c = haar_analyze(random_signal(rng, 256));
    auto r = lip_sequence_norm(c, 0.25, 0.0, 2.0, INFINITY);
    for (std::size_t k = 1; k < r.perScale.size(); ++k) CHECK(r.perScale[k] >= r.perScale[k - 1]);
    CHECK(r.value == doctest::Approx(r.perScale.back()));
}

TEST_CASE("Besov sequence norm of a single coefficient") {
    auto c = haar_analyze(haar_mother(64, 3, 2));
    const double s = 0.5, xi = -0.5, p = 2.0;
    const double want = std::pow(2.0, 3 * (s - 1.0 / p)) * std::pow(4.0, xi) * std::sqrt(8.0);
    CHECK(b_sequence_norm(c, s, xi, p, 2.0) == doctest::Approx(want).epsilon(1e-12));
    CHECK(b_sequence_norm(c, s, xi, p, INFINITY) == doctest::Approx(want).epsilon(1e-12));
}
