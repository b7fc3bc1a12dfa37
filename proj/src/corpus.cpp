#include <cmath>
#include <random>
#include <stdexcept>

#include "lipspace/suites.hpp"

namespace lipspace {

PeriodicSignal BandLimited::realize(std::size_t N) const {
    const int k = K();
    if (!is_power_of_two(N) || static_cast<std::size_t>(2 * k) >= N) throw std::invalid_argument("N too small for the band");
    std::vector<cplx> c(N);
    for (int m = -k; m <= k; ++m) c[m >= 0 ? m : N + m] = coeffs[m + k];
    return make_signal(fft_inverse(c), "band-limited");
}

LacunarySpec truncate(const LacunarySpec& spec, int J) {
    LacunarySpec out = spec;
    if (J < spec.J()) out.coeffs.resize(static_cast<std::size_t>(std::max(J - 2, 0)));
    return out;
}

Corpus make_corpus(std::uint64_t seed) {
    Corpus c;
    c.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double decays[] = {0.0, 0.5, 1.0};

    for (int s = 0; s < 30; ++s) {
        LacunarySpec spec;
        spec.decay = decays[rng() % 3];
        for (int j = 3; j <= 12; ++j) {
            double mag = std::exp(2.0 * unit(rng) - 1.0);
            double phase = 2.0 * M_PI * unit(rng);
            spec.coeffs.push_back(std::polar(mag, phase));
        }
        c.lacunary.push_back(std::move(spec));
    }

    const double families[10][2] = {{1.2, 0.0}, {1.5, 0.0}, {2.0, 0.0}, {2.5, 0.0}, {1.2, 1.0},
                                    {1.5, 1.0}, {2.0, 1.0}, {1.5, -1.0}, {3.0, 0.0}, {1.8, 0.5}};
    for (const auto& f : families) {
        std::vector<double> a(2047);
        for (std::size_t n = 1; n <= a.size(); ++n) {
            double x = static_cast<double>(n);
            a[n - 1] = std::pow(x, -f[0]) * std::pow(1.0 + std::log(x), -f[1]);
        }
        c.gm.push_back(make_gm_sequence(std::move(a)));
    }

    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < 5; ++s) {
        BandLimited bl;
        bl.coeffs.resize(33);
        for (auto& z : bl.coeffs) z = cplx(gauss(rng), gauss(rng));
        c.bandLimited.push_back(std::move(bl));
    }
    return c;
}

}  // namespace lipspace
