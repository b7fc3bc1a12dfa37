#include <doctest.h>

#include <cmath>
#include <random>

#include "lipspace/closed_forms.hpp"
#include "lipspace/dyadic.hpp"

using namespace lipspace;

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * M_PI);

PeriodicSignal exponential(std::size_t N, long k, cplx c = 1.0) {
    std::vector<cplx> s(N);
    for (std::size_t n = 0; n < N; ++n) s[n] = c * std::polar(1.0, 2.0 * M_PI * static_cast<double>(k * static_cast<long>(n)) / static_cast<double>(N));
    return make_signal(std::move(s));
}

PeriodicSignal random_band(std::mt19937_64& rng, std::size_t N, int K) {
    std::normal_distribution<double> g;
    std::vector<cplx> c(N);
    for (int k = -K; k <= K; ++k) c[k >= 0 ? k : N + k] = cplx(g(rng), g(rng));
    return make_signal(fft_inverse(c));
}

PeriodicSignal zero(std::size_t N) { return make_signal(std::vector<cplx>(N)); }

// sum_{k >= a} (1+k)^{-2}
double tail_sq(int a) { return hurwitz_zeta(2.0, a + 1.0); }

}  // namespace

TEST_CASE("partitions") {
    auto sharp = make_partition(16, PartitionKind::Sharp);
    CHECK(sharp.J == 3);
    for (std::size_t i = 0; i < 16; ++i) {
        double s = 0.0;
        for (const auto& w : sharp.weights) s += w[i];
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        long k = std::labs(bin_frequency(i, 16));
        if (k <= 1) CHECK(sharp.weights[0][i] == 1.0);
        for (int j = 1; j <= sharp.J; ++j)
            if (k > (1L << (j - 1)) && k <= (1L << j)) CHECK(sharp.weights[j][i] == 1.0);
    }
    auto smooth = make_partition(64, PartitionKind::SmoothBump);
    for (std::size_t i = 0; i < 64; ++i) {
        double s = 0.0;
        for (const auto& w : smooth.weights) s += w[i];
        CHECK(std::abs(s - 1.0) <= 1e-12);
        long k = std::labs(bin_frequency(i, 64));
        if (k > 2) CHECK(smooth.weights[0][i] == 0.0);
        for (int j = 1; j < smooth.J; ++j)
            if (smooth.weights[j][i] != 0.0) CHECK((k >= (1L << (j - 1)) && k <= (1L << (j + 1))));
    }
    CHECK_THROWS(make_partition(12, PartitionKind::Sharp));
}

TEST_CASE("blocks of single exponentials") {
    auto part = make_partition(64, PartitionKind::Sharp);
    auto f = exponential(64, 5);
    auto blocks = lp_blocks(f, part);
    for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
        double n = l2_norm_plain(blocks[j].samples);
        if (j == 3) {
            for (std::size_t i = 0; i < 64; ++i) CHECK(std::abs(blocks[j].samples[i] - f.samples[i]) < 1e-12);
        } else {
            CHECK(n < 1e-12);
        }
    }
    auto one = lp_blocks(make_signal(std::vector<cplx>(64, 1.0)), part);
    for (std::size_t i = 0; i < 64; ++i) CHECK(std::abs(one[0].samples[i] - 1.0) < 1e-12);
    for (const auto& b : lp_blocks(zero(64), part)) CHECK(l2_norm_plain(b.samples) == 0.0);
}

TEST_CASE("reconstruction and Parseval") {
    std::mt19937_64 rng(1);
    for (int m = 4; m <= 14; m += 2) {
        std::size_t N = std::size_t{1} << m;
        auto f = random_band(rng, N, static_cast<int>(N / 2 - 1));
        for (auto kind : {PartitionKind::Sharp, PartitionKind::SmoothBump}) {
            auto blocks = lp_blocks(f, make_partition(N, kind));
            std::vector<cplx> sum(N);
            for (const auto& b : blocks)
                for (std::size_t i = 0; i < N; ++i) sum[i] += b.samples[i];
            for (std::size_t i = 0; i < N; ++i) sum[i] -= f.samples[i];
            CHECK(l2_norm_plain(sum) <= 1e-10 * l2_norm_plain(f.samples));
            if (kind == PartitionKind::Sharp) {
                double e = 0.0;
                for (const auto& b : blocks) e += std::pow(lp_norm(b.samples, 2.0), 2);
                CHECK(std::sqrt(e) == doctest::Approx(lp_norm(f.samples, 2.0)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("discrete Lp norms") {
    CHECK(lp_norm(std::vector<cplx>(32, 1.0), 2.0) == doctest::Approx(kSqrt2Pi).epsilon(1e-14));
    std::vector<cplx> c(64);
    for (std::size_t n = 0; n < 64; ++n) c[n] = std::cos(2.0 * M_PI * static_cast<double>(n) / 64.0);
    CHECK(lp_norm(c, INFINITY) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lp_norm(c, 2.0) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("Besov norm via blocks") {
    auto part = make_partition(64, PartitionKind::Sharp);
    auto r = besov_norm_fourier(exponential(64, 5), part, SpaceParams::besov(1, 2, 2, 0));
    CHECK(r.value == doctest::Approx(8.0 * kSqrt2Pi).epsilon(1e-12));
    CHECK(r.perScale.size() == static_cast<std::size_t>(part.J + 1));
    CHECK(besov_norm_fourier(zero(64), part, SpaceParams::besov(1, 2, 2, 0)).value == 0.0);

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 5; ++t) {
        LacunarySpec spec;
        for (int j = 3; j <= 9; ++j) spec.coeffs.push_back(cplx(u(rng), u(rng)));
        auto f = realize_signal(spec, 2048);
        for (double s : {0.5, 1.0}) {
            auto fourier = besov_norm_fourier(f, make_partition(2048, PartitionKind::Sharp), SpaceParams::besov(ExtRational(static_cast<std::int64_t>(2 * s), 2), 2, 2, 1));
            auto closed = lacunary_besov_norm(spec, s, 1.0, 2.0);
            // lacunary block j sits in the Sharp annulus j, each of L_2 mass sqrt(2 pi)
            CHECK(fourier.value == doctest::Approx(kSqrt2Pi * closed.value).epsilon(1e-10));
        }
    }
}

TEST_CASE("truncated square function") {
    auto part = make_partition(64, PartitionKind::Sharp);
    auto sp = SpaceParams::lipschitz(1, 2, 2, 1);
    auto r = lipschitz_norm_truncated_square(exponential(64, 5), part, sp);
    for (int k = 0; k < 3; ++k) CHECK(r.perScale[k] <= 1e-12);
    for (std::size_t k = 3; k < r.perScale.size(); ++k)
        CHECK(r.perScale[k] == doctest::Approx(8.0 * kSqrt2Pi / (1.0 + static_cast<double>(k))).epsilon(1e-12));
    // scale sum over all k >= 3, the block-stable tail included
    CHECK(r.value == doctest::Approx(8.0 * kSqrt2Pi * std::sqrt(tail_sq(3))).epsilon(1e-10));
    CHECK(recompute_value(r) == doctest::Approx(r.value).epsilon(1e-12));
    CHECK(lipschitz_norm_truncated_square(zero(64), part, sp).value == 0.0);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 5; ++t) {
        LacunarySpec spec;
        for (int j = 3; j <= 10; ++j) spec.coeffs.push_back(cplx(u(rng), u(rng)));
        auto f = realize_signal(spec, 4096);
        auto fourier = lipschitz_norm_truncated_square(f, make_partition(4096, PartitionKind::Sharp), sp);
        auto closed = lacunary_lipschitz_norm(spec, 1.0, 1.0, 2.0);
        CHECK(fourier.value == doctest::Approx(kSqrt2Pi * closed.value).epsilon(1e-9));
    }
}

TEST_CASE("truncated square function is monotone in k and homogeneous") {
    std::mt19937_64 rng(6);
    auto part = make_partition(1024, PartitionKind::SmoothBump);
    for (int t = 0; t < 5; ++t) {
        auto f = random_band(rng, 1024, 200);
        auto sp = SpaceParams::lipschitz(ExtRational(1, 2), 3, 2, 1);
        auto r = lipschitz_norm_truncated_square(f, part, sp);
        auto unweighted = [&](std::size_t k) { return r.perScale[k] * (1.0 + r.firstScale + static_cast<double>(k)); };
        for (std::size_t k = 1; k < r.perScale.size(); ++k) CHECK(unweighted(k) >= unweighted(k - 1) * (1.0 - 1e-12));
        PeriodicSignal g = f;
        const cplx c(-2.0, 1.5);
        for (auto& z : g.samples) z *= c;
        CHECK(lipschitz_norm_truncated_square(g, part, sp).value == doctest::Approx(std::abs(c) * r.value).epsilon(1e-12));
        CHECK(besov_norm_fourier(g, part, SpaceParams::besov(1, 2, 2, 0)).value ==
              doctest::Approx(std::abs(c) * besov_norm_fourier(f, part, SpaceParams::besov(1, 2, 2, 0)).value).epsilon(1e-12));
    }
}

TEST_CASE("unified family") {
    std::mt19937_64 rng(8);
    auto part = make_partition(512, PartitionKind::Sharp);
    for (int t = 0; t < 10; ++t) {
        auto f = random_band(rng, 512, 100);
        auto a = unified_scale_norm(f, part, 0.5, 0.5, 1.0, 2.0, 2.0);
        auto b = lipschitz_norm_truncated_square(f, part, SpaceParams::lipschitz(ExtRational(1, 2), 2, 2, 1));
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
        auto z = unified_scale_norm(f, part, 0.0, 0.0, 0.0, 2.0, INFINITY);
        CHECK(z.value == doctest::Approx(lp_norm(f.samples, 2.0)).epsilon(1e-10));
    }
    CHECK(unified_scale_norm(zero(64), make_partition(64, PartitionKind::Sharp), 1, 1, 1, 2, 2).value == 0.0);
    CHECK_THROWS(unified_scale_norm(zero(64), make_partition(64, PartitionKind::Sharp), 1, 0.5, 1, 2, 2));
}

TEST_CASE("Sobolev norm") {
    std::mt19937_64 rng(10);
    auto f = random_band(rng, 256, 50);
    CHECK(sobolev_norm(f, 0.0, 3.0).value == doctest::Approx(lp_norm(f.samples, 3.0)).epsilon(1e-12));
    CHECK(sobolev_norm(exponential(256, 1), 1.0, 2.0).value == doctest::Approx(std::sqrt(2.0) * kSqrt2Pi).epsilon(1e-12));
    CHECK(sobolev_norm(zero(64), 1.0, 2.0).value == 0.0);
    CHECK_THROWS(sobolev_norm(f, 1.0, 1.0));
}

TEST_CASE("Fourier means") {
    auto r = fourier_means_lip_norm(exponential(64, 5), 1.0, 1.0, 2.0, 2.0);
    for (std::size_t k = 0; k < r.perScale.size(); ++k) {
        int scale = r.firstScale + static_cast<int>(k);
        double want = scale >= 3 ? 5.0 * kSqrt2Pi / (1.0 + scale) : 0.0;
        CHECK(r.perScale[k] == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(r.value == doctest::Approx(kSqrt2Pi + 5.0 * kSqrt2Pi * std::sqrt(tail_sq(3))).epsilon(1e-10));
    CHECK(fourier_means_lip_norm(zero(64), 1.0, 1.0, 2.0, 2.0).value == 0.0);
}

TEST_CASE("Lipschitz and Besov agree up to a flat factor at p = q = 2") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1, 1);
    auto part = make_partition(4096, PartitionKind::Sharp);
    double lo = INFINITY, hi = 0.0;
    for (int t = 0; t < 30; ++t) {
        LacunarySpec spec;
        for (int j = 3; j <= 10; ++j) spec.coeffs.push_back(std::exp(u(rng)) * std::polar(1.0, M_PI * u(rng)));
        auto f = realize_signal(spec, 4096);
        double lip = lipschitz_norm_truncated_square(f, part, SpaceParams::lipschitz(1, 2, 2, 1)).value;
        double bes = besov_norm_fourier(f, part, SpaceParams::besov(1, 2, 2, ExtRational(-1, 2))).value;
        lo = std::min(lo, lip / bes);
        hi = std::max(hi, lip / bes);
    }
    CHECK(hi / lo <= 4.0);
}
