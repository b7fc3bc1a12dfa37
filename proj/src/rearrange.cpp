#include "lipspace/rearrange.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lipspace {

RearrangedProfile rearrangement(const PeriodicSignal& f) {
    RearrangedProfile prof;
    const std::size_t n = f.size();
    prof.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) prof.values[i] = std::abs(f.samples[i]);
    std::sort(prof.values.begin(), prof.values.end(), std::greater<double>());
    prof.breakpoints.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) prof.breakpoints[k] = static_cast<double>(k) / static_cast<double>(n);
    prof.totalMeasure = 2.0 * M_PI;
    return prof;
}

RearrangedProfile make_profile(std::vector<double> breakpoints, std::vector<double> values) {
    if (breakpoints.size() != values.size() + 1 || breakpoints.empty() || breakpoints.front() != 0.0)
        throw std::invalid_argument("profile needs breakpoints 0 = t_0 < ... < t_K and K values");
    for (std::size_t k = 1; k < breakpoints.size(); ++k)
        if (!(breakpoints[k] > breakpoints[k - 1])) throw std::invalid_argument("breakpoints must increase");
    if (breakpoints.back() > 1.0 + 1e-15) throw std::invalid_argument("profile must live on (0,1]");
    for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k] > values[k - 1] || values[k] < 0.0) throw std::invalid_argument("values must be nonincreasing");
    return RearrangedProfile{std::move(breakpoints), std::move(values), 1.0};
}

double profile_lp_norm(const RearrangedProfile& prof, double p) {
    if (prof.values.empty()) return 0.0;
    if (std::isinf(p)) return prof.values.front();
    double s = 0.0;
    for (std::size_t k = 0; k < prof.values.size(); ++k)
        s += std::pow(prof.values[k], p) * (prof.breakpoints[k + 1] - prof.breakpoints[k]);
    return std::pow(s, 1.0 / p);
}

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

// Integral over t in (lo, hi] of g(t) dt/t, written in s = -log t.
double log_integral(const std::function<double(double)>& g_of_s, double lo, double hi, const QuadratureOptions& opt) {
    double s_hi = lo > 0.0 ? -std::log(lo) : std::numeric_limits<double>::infinity();
    double s_lo = -std::log(hi);
    if (!(s_hi > s_lo)) return 0.0;
    return GK::integrate(g_of_s, s_lo, s_hi, opt.maxDepth, opt.tolerance);
}

}  // namespace

double lorentz_zygmund_norm(const RearrangedProfile& prof, double r, double q, double b,
                            const QuadratureOptions& opt) {
    if (!(r >= 1.0) || std::isinf(r)) throw std::invalid_argument("requires 1 <= r < inf");
    if (!(q > 0.0)) throw std::invalid_argument("requires q > 0");
    const auto& t = prof.breakpoints;
    const auto& v = prof.values;
    if (std::isinf(q)) {
        auto g = [&](double x) { return std::pow(x, 1.0 / r) * std::pow(1.0 - std::log(x), b); };
        const double tstar = std::exp(1.0 - b * r);
        double best = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0.0) continue;
            double m = g(t[k + 1]);
            if (t[k] > 0.0) m = std::max(m, g(t[k]));
            if (tstar > t[k] && tstar < t[k + 1]) m = std::max(m, g(tstar));
            best = std::max(best, m * v[k]);
        }
        return best;
    }
    double total = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0.0) continue;
        auto w = [&](double s) { return std::exp(-s * q / r) * std::pow(1.0 + s, b * q); };
        total += std::pow(v[k], q) * log_integral(w, t[k], t[k + 1], opt);
    }
    return std::pow(total, 1.0 / q);
}

double grand_norm(const RearrangedProfile& prof, double r, double q, double c, double p,
                  const QuadratureOptions& opt) {
    if (!(r > 1.0) || std::isinf(r)) throw std::invalid_argument("requires 1 < r < inf");
    if (!(p > 0.0) || std::isinf(p)) throw std::invalid_argument("requires 0 < p < inf");
    if (!(q > 0.0)) throw std::invalid_argument("requires q > 0");
    if (!std::isinf(q) && !(c < -1.0 / q)) throw std::invalid_argument("trivial grand space: needs c < -1/q");
    const auto& t = prof.breakpoints;
    const auto& v = prof.values;
    const std::size_t K = v.size();
    const double e = p / r;
    // tail[k] = int_{t_{k+1}}^{1} u^{p/r-1} f*(u)^p du, exact for the step profile
    std::vector<double> tail(K + 1, 0.0);
    for (std::size_t k = K; k-- > 0;) {
        double seg = std::pow(v[k], p) * (std::pow(t[k + 1], e) - std::pow(t[k], e)) / e;
        tail[k] = tail[k + 1] + seg;
    }
    std::vector<double> beyond(K, 0.0);
    for (std::size_t k = 0; k < K; ++k) beyond[k] = tail[k + 1];
    // Mass on (t_K, 1] when the profile ends before 1 is zero.
    auto inner = [&](std::size_t k, double x) {
        double val = beyond[k] + std::pow(v[k], p) * (std::pow(t[k + 1], e) - std::pow(x, e)) / e;
        return std::max(val, 0.0);
    };
    if (std::isinf(q)) {
        double best = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            double lo = t[k] > 0.0 ? t[k] : t[k + 1] * 1e-12;
            for (int i = 0; i <= 8; ++i) {
                double x = lo * std::pow(t[k + 1] / lo, i / 8.0);
                best = std::max(best, std::pow(1.0 - std::log(x), c) * std::pow(inner(k, x), 1.0 / p));
            }
        }
        return best;
    }
    double total = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        if (tail[k] == 0.0) continue;
        auto w = [&, k](double s) {
            return std::pow(1.0 + s, c * q) * std::pow(inner(k, std::exp(-s)), q / p);
        };
        total += log_integral(w, t[k], t[k + 1], opt);
    }
    return std::pow(total, 1.0 / q);
}

std::string profile_csv(const RearrangedProfile& prof) {
    std::ostringstream os;
    os.precision(17);
    os << "t,value\n";
    for (std::size_t k = 0; k < prof.values.size(); ++k) os << prof.breakpoints[k + 1] << "," << prof.values[k] << "\n";
    return os.str();
}

}  // namespace lipspace
