#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lipspace/closed_forms.hpp"

using namespace lipspace;

namespace {

GMSequence power_log(std::size_t n, double g, double d) {
    std::vector<double> a(n);
    for (std::size_t k = 1; k <= n; ++k) a[k - 1] = std::pow(double(k), -g) * std::pow(1.0 + std::log(double(k)), -d);
    return make_gm_sequence(std::move(a));
}

LacunarySpec random_spec(std::mt19937_64& rng, int J) {
    std::uniform_real_distribution<double> u(-1, 1);
    LacunarySpec s;
    for (int j = 3; j <= J; ++j) s.coeffs.push_back(cplx(u(rng), u(rng)));
    return s;
}

double log1(double n) { return 1.0 + std::log(n); }

}  // namespace

TEST_CASE("general monotonicity") {
    std::vector<double> harmonic(64);
    for (std::size_t n = 1; n <= 64; ++n) harmonic[n - 1] = 1.0 / double(n);
    auto h = is_general_monotone(harmonic);
    CHECK(h.isGM);
    CHECK(h.C == doctest::Approx(0.5).epsilon(1e-12));

    std::vector<double> alternating(64);
    for (std::size_t n = 1; n <= 64; ++n) alternating[n - 1] = (1.0 + (n % 2 ? -1.0 : 1.0)) / double(n);
    CHECK_FALSE(is_general_monotone(alternating).isGM);

    auto c = is_general_monotone(std::vector<double>(32, 2.0));
    CHECK(c.isGM);
    CHECK(c.C == 0.0);
    CHECK_THROWS(is_general_monotone({1.0, -1.0}));
}

TEST_CASE("lacunary Besov") {
    LacunarySpec one;
    one.coeffs = {1.0};
    CHECK(lacunary_besov_norm(one, 1.0, 0.0, 2.0).value == doctest::Approx(8.0));
    LacunarySpec zeros;
    zeros.coeffs.assign(6, 0.0);
    CHECK(lacunary_besov_norm(zeros, 1.0, 0.0, 2.0).value == 0.0);

    LacunarySpec pw;
    const double s = 0.75, b = 0.5, q = 3.0;
    for (int j = 3; j <= 12; ++j) pw.coeffs.push_back(std::pow(2.0, -j * s));
    double direct = 0.0;
    for (int j = 3; j <= 12; ++j) direct += std::pow(1.0 + j, b * q);
    CHECK(std::pow(lacunary_besov_norm(pw, s, b, q).value, q) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("lacunary Lipschitz") {
    LacunarySpec one;
    one.coeffs.assign(8, 0.0);
    one.coeffs[0] = 1.0;
    double direct = 0.0;
    for (int k = 3; k <= one.J(); ++k) direct += std::pow(1.0 + k, -2.0);
    CHECK(lacunary_lipschitz_norm(one, 1.0, 1.0, 2.0, one.J()).value == doctest::Approx(8.0 * std::sqrt(direct)).epsilon(1e-12));
    // full outer sum: the inner sum is frozen beyond J
    CHECK(lacunary_lipschitz_norm(one, 1.0, 1.0, 2.0).value ==
          doctest::Approx(8.0 * std::sqrt(hurwitz_zeta(2.0, 4.0))).epsilon(1e-12));
    LacunarySpec zeros;
    zeros.coeffs.assign(6, 0.0);
    CHECK(lacunary_lipschitz_norm(zeros, 1.0, 1.0, 2.0).value == 0.0);
    CHECK_THROWS(lacunary_lipschitz_norm(one, 1.0, 0.5, 2.0));
}

TEST_CASE("homogeneity and monotonicity of closed forms") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto s = random_spec(rng, 10);
        auto scaled = s;
        for (auto& a : scaled.coeffs) a *= cplx(0.0, -2.5);
        CHECK(lacunary_besov_norm(scaled, 0.5, 1.0, 2.0).value == doctest::Approx(2.5 * lacunary_besov_norm(s, 0.5, 1.0, 2.0).value).epsilon(1e-12));
        CHECK(lacunary_lipschitz_norm(scaled, 0.5, 1.0, 2.0).value ==
              doctest::Approx(2.5 * lacunary_lipschitz_norm(s, 0.5, 1.0, 2.0).value).epsilon(1e-12));
        auto longer = s;
        longer.coeffs.push_back(0.3);
        CHECK(lacunary_besov_norm(longer, 0.5, 1.0, 2.0).value >= lacunary_besov_norm(s, 0.5, 1.0, 2.0).value);
        CHECK(lacunary_lipschitz_norm(longer, 0.5, 1.0, 2.0).value >= lacunary_lipschitz_norm(s, 0.5, 1.0, 2.0).value);
    }
    auto g = power_log(200, 1.2, 0.5);
    auto g3 = g;
    for (auto& a : g3.a) a *= 3.0;
    CHECK(gm_lp_norm(g3, 3.0).value == doctest::Approx(3.0 * gm_lp_norm(g, 3.0).value).epsilon(1e-12));
    CHECK(gm_lipschitz_norm(g3, 0.5, 1.0, 2.0, 2.0).value == doctest::Approx(3.0 * gm_lipschitz_norm(g, 0.5, 1.0, 2.0, 2.0).value).epsilon(1e-12));
    CHECK(gm_lorentz_zygmund_norm(g3, 4.0, 2.0, 0.5).value == doctest::Approx(3.0 * gm_lorentz_zygmund_norm(g, 4.0, 2.0, 0.5).value).epsilon(1e-12));
}

TEST_CASE("q = inf is the limit of large q") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0, 1);
    LacunarySpec s;
    for (int j = 3; j < 67; ++j) s.coeffs.push_back(std::pow(2.0, -j) * u(rng));
    double sup = lacunary_besov_norm(s, 1.0, 0.0, INFINITY).value;
    CHECK(lacunary_besov_norm(s, 1.0, 0.0, 32.0).value == doctest::Approx(sup).epsilon(0.05));
    CHECK(lacunary_besov_norm(s, 1.0, 0.0, 32.0).value >= sup);
}

TEST_CASE("GM Lebesgue norm") {
    CHECK(gm_lp_norm(make_gm_sequence({1.0}), 2.0).value == doctest::Approx(1.0));
    auto h = power_log(100000, 1.0, 0.0);
    CHECK(gm_lp_norm(h, 2.0).value == doctest::Approx(M_PI / std::sqrt(6.0)).epsilon(1e-5));
    CHECK_THROWS(gm_lp_norm(h, 1.0));
}

TEST_CASE("GM Besov") {
    auto one = make_gm_sequence({1.0});
    CHECK(gm_besov_norm(one, 0.5, 1.0, 2.0, 2.0).value == doctest::Approx(1.0));
    CHECK(gm_besov_norm(make_gm_sequence(std::vector<double>(10, 0.0)), 0.5, 1.0, 2.0, 2.0).value == 0.0);
    // a_n = n^{-s-1+1/p} (1+log n)^{-beta}: the terms reduce to (1+log n)^{(b-beta) q} / n
    const double s = 0.5, p = 2.0, q = 2.0, b = 0.0, beta = 1.0;
    auto a = power_log(4096, s + 1.0 - 1.0 / p, beta);
    auto r = gm_besov_norm(a, s, b, p, q);
    for (std::size_t k = 0; k < r.perScale.size(); k += 97) {
        double n = double(k + 1);
        CHECK(std::pow(r.perScale[k], q) == doctest::Approx(std::pow(log1(n), (b - beta) * q) / n).epsilon(1e-10));
    }
}

TEST_CASE("GM Lipschitz nested sum") {
    const double b = 1.0, q = 2.0;
    auto one = make_gm_sequence(std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    auto r = gm_lipschitz_norm(one, 0.5, b, 2.0, q);
    for (std::size_t k = 0; k < r.perScale.size(); ++k) {
        double n = double(k + 1);
        CHECK(std::pow(r.perScale[k], q) == doctest::Approx(std::pow(log1(n), -b * q) / n).epsilon(1e-12));
    }
    // the completed outer tail against brute-force summation over a long stretch plus the same tail further out
    double brute = 0.0;
    for (double n = 9.0; n <= 2e6; n += 1.0) brute += std::pow(log1(n), -b * q) / n;
    auto far = std::pow(log1(2e6 + 0.5), 1.0 - b * q) / (b * q - 1.0);
    CHECK(r.tailPower == doctest::Approx(brute + far).epsilon(1e-4));
    CHECK(gm_lipschitz_norm(make_gm_sequence(std::vector<double>(8, 0.0)), 0.5, b, 2.0, q).value == 0.0);
    CHECK_THROWS(gm_lipschitz_norm(one, 0.5, 0.5, 2.0, 2.0));
}

TEST_CASE("GM grand norm matches the Lipschitz form under the exponent identity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.5, 2.5);
    for (int t = 0; t < 5; ++t) {
        auto g = power_log(300, u(rng), u(rng) - 1.0);
        const double p = 3.0, r = 6.0, alpha = 1.0 / p - 1.0 / r;
        auto lip = gm_lipschitz_norm(g, alpha, 1.0, p, 2.0);
        auto grand = gm_grand_norm(g, r, 2.0, 1.0, p);
        CHECK(grand.value == doctest::Approx(lip.value).epsilon(1e-12));
    }
}

TEST_CASE("GM Lorentz-Zygmund") {
    CHECK(gm_lorentz_zygmund_norm(make_gm_sequence({1.0}), 4.0, 2.0, 0.5).value == doctest::Approx(1.0));
    // b = 0, q = r: identical exponents to the Lebesgue form
    auto g = power_log(500, 0.9, 0.0);
    CHECK(gm_lorentz_zygmund_norm(g, 3.0, 3.0, 0.0).value == doctest::Approx(gm_lp_norm(g, 3.0).value).epsilon(1e-12));
}

TEST_CASE("GM modulus") {
    auto one = make_gm_sequence({1.0});
    for (std::size_t n : {1u, 4u, 16u}) CHECK(gm_modulus(one, 0.5, n, 2.0) == doctest::Approx(std::pow(double(n), -0.5)));
    CHECK(gm_modulus(make_gm_sequence(std::vector<double>(5, 0.0)), 0.5, 3, 2.0) == 0.0);
}

TEST_CASE("realization") {
    LacunarySpec empty;
    auto z = realize_signal(empty, 64);
    for (const auto& v : z.samples) CHECK(v == cplx(0.0));
    auto c = realize_signal(make_gm_sequence({0.0, 0.0, 1.0}), 64);
    for (std::size_t n = 0; n < 64; ++n) CHECK(std::abs(c.samples[n] - std::cos(3.0 * 2.0 * M_PI * double(n) / 64.0)) < 1e-12);
    std::mt19937_64 rng(8);
    auto s = random_spec(rng, 9);
    auto f = realize_signal(s, 1024);
    double coef = 0.0;
    for (int j = 3; j <= s.J(); ++j) coef += std::norm(s.a(j));
    double samp = 0.0;
    for (const auto& v : f.samples) samp += std::norm(v);
    CHECK(samp / 1024.0 == doctest::Approx(coef).epsilon(1e-12));
    CHECK_THROWS(realize_signal(s, 256));
}

TEST_CASE("coefficient files") {
    std::istringstream gm("# sequence\n1,1.0\n2,0.5\n4,0.25\n");
    auto g = read_gm_csv(gm);
    REQUIRE(g.a.size() == 4);
    CHECK(g.a[2] == 0.0);
    std::istringstream lac("3,1,0\n5,0,2\n");
    auto l = read_lacunary_csv(lac);
    CHECK(l.J() == 5);
    CHECK(l.a(5) == cplx(0.0, 2.0));
    std::istringstream bad("1,x\n");
    CHECK_THROWS_AS(read_gm_csv(bad), ParseError);
    std::istringstream neg("1,-1\n");
    CHECK_THROWS_AS(read_gm_csv(neg), ParseError);
}
