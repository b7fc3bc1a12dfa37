#include "lipspace/haar.hpp"

#include "lipspace/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipspace {

cplx HaarCoeffs::lambda(int j, std::size_t m) const { return std::sqrt(std::ldexp(1.0, j)) * levels.at(j).at(m); }

HaarCoeffs haar_analyze(const PeriodicSignal& f) {
    const std::size_t n = f.size();
    const int J = log2_exact(n);
    std::vector<cplx> a(n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) a[i] = f.samples[i] * s;
    HaarCoeffs c;
    c.levels.resize(J);
    const double r = M_SQRT1_2;
    for (int j = J - 1; j >= 0; --j) {
        const std::size_t len = std::size_t{1} << j;
        std::vector<cplx> next(len), detail(len);
        for (std::size_t m = 0; m < len; ++m) {
            next[m] = (a[2 * m] + a[2 * m + 1]) * r;
            detail[m] = (a[2 * m] - a[2 * m + 1]) * r;
        }
        c.levels[j] = std::move(detail);
        a = std::move(next);
    }
    c.mean = a.empty() ? cplx(0.0) : a[0];
    return c;
}

PeriodicSignal haar_synthesize(const HaarCoeffs& c) {
    std::vector<cplx> a{c.mean};
    const double r = M_SQRT1_2;
    for (int j = 0; j < c.J(); ++j) {
        const std::size_t len = std::size_t{1} << j;
        if (c.levels[j].size() != len) throw std::invalid_argument("malformed Haar level");
        std::vector<cplx> next(2 * len);
        for (std::size_t m = 0; m < len; ++m) {
            next[2 * m] = (a[m] + c.levels[j][m]) * r;
            next[2 * m + 1] = (a[m] - c.levels[j][m]) * r;
        }
        a = std::move(next);
    }
    const double s = std::sqrt(static_cast<double>(a.size()));
    for (auto& v : a) v *= s;
    return make_signal(std::move(a), "haar");
}

namespace {

// Pointwise sum_{j<=k} w_j |lambda_{j,m(x)}|^2 on the finest cells, for each k.
template <typename Visit>
void square_function_levels(const HaarCoeffs& c, double s, double base, Visit visit) {
    const std::size_t n = std::size_t{1} << c.J();
    std::vector<double> acc(n, base);
    for (int j = 0; j < c.J(); ++j) {
        const std::size_t width = n >> j;
        const double w = std::pow(2.0, 2.0 * s * j);
        for (std::size_t m = 0; m < c.levels[j].size(); ++m) {
            double add = w * std::norm(c.lambda(j, m));
            for (std::size_t x = m * width; x < (m + 1) * width; ++x) acc[x] += add;
        }
        visit(j, acc);
    }
}

double cell_lp(const std::vector<double>& squares, double p) {
    double m = 0.0;
    for (double v : squares) m = std::max(m, v);
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double v : squares) s += std::pow(v / m, p / 2.0);
    return std::sqrt(m) * std::pow(s / static_cast<double>(squares.size()), 1.0 / p);
}

}  // namespace

double f_sequence_norm(const HaarCoeffs& c, double s, double p) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("requires 1 < p < inf");
    double out = 0.0;
    square_function_levels(c, s, 0.0, [&](int j, const std::vector<double>& acc) {
        if (j == c.J() - 1) out = cell_lp(acc, p);
    });
    return out;
}

bool haar_regime(double alpha, double p) { return alpha < std::min(1.0 / p, 0.5); }

NormReport lip_sequence_norm(const HaarCoeffs& c, double alpha, double b, double p, double q) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("requires 1 < p < inf");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (std::isinf(q) ? b < 0.0 : !(b > 1.0 / q)) throw std::invalid_argument("trivial Lipschitz parameters");
    NormReport r;
    r.method = "haar-lipschitz";
    r.N = std::size_t{1} << c.J();
    r.J = c.J();
    r.partition = "haar";
    r.q = q;
    r.equivalenceValid = haar_regime(alpha, p);
    double last = 0.0;
    square_function_levels(c, alpha, std::norm(c.mean), [&](int k, const std::vector<double>& acc) {
        last = cell_lp(acc, p);
        r.perScale.push_back(std::pow(1.0 + k, -b) * last);
    });
    // Levels k >= J carry no detail: the square function stays at its last value.
    if (!std::isinf(q) && last > 0.0) r.tailPower = std::pow(last, q) * hurwitz_zeta(b * q, c.J() + 1.0);
    finalize(r);
    return r;
}

double b_sequence_norm(const HaarCoeffs& c, double s, double xi, double p, double q) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("requires 1 < p < inf");
    std::vector<double> terms;
    for (int j = 0; j < c.J(); ++j) {
        double sum = 0.0;
        for (std::size_t m = 0; m < c.levels[j].size(); ++m) sum += std::pow(std::abs(c.lambda(j, m)), p);
        terms.push_back(std::pow(2.0, j * (s - 1.0 / p)) * std::pow(1.0 + j, xi) * std::pow(sum, 1.0 / p));
    }
    return aggregate(terms, q);
}

}  // namespace lipspace
