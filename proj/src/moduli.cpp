#include "lipspace/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lipspace/closed_forms.hpp"
#include "lipspace/parallel.hpp"

namespace lipspace {

int binomial_terms(double alpha, double tol, int cap) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    double rounded = std::round(alpha);
    if (std::abs(alpha - rounded) < 1e-14) return static_cast<int>(rounded);
    // Past j > alpha the signed terms share one sign and sum to zero overall,
    // so the tail equals the magnitude of the signed partial sum.
    double c = 1.0, partial = 1.0;
    for (int j = 1; j <= cap; ++j) {
        c *= -(alpha - j + 1) / j;
        partial += c;
        if (j > alpha && std::abs(partial) <= tol) return j;
    }
    return cap;
}

namespace {

// Multiplier of Delta^alpha_h on e^{ikx}.
cplx difference_symbol(double alpha, double h, double k, const DifferenceOptions& opt, int terms) {
    if (opt.mode == DifferenceMode::Symbol) {
        // 1 - e^{-ix} = 2 sin(x/2) e^{i(pi/2 - x/2)}, principal argument in (-pi, pi]
        const double x = h * k;
        const double s = 2.0 * std::sin(0.5 * x);
        if (s == 0.0) return 0.0;
        double arg = std::remainder((s > 0.0 ? 0.5 : -0.5) * M_PI - 0.5 * x, 2.0 * M_PI);
        if (arg <= -M_PI) arg += 2.0 * M_PI;
        return std::polar(std::pow(std::abs(s), alpha), alpha * (x + arg));
    }
    cplx s = 0.0;
    double c = 1.0;
    for (int j = 0; j <= terms; ++j) {
        s += c * std::polar(1.0, (alpha - j) * h * k);
        c *= -(alpha - j) / (j + 1);
    }
    return s;
}

class DifferenceNorms {
public:
    DifferenceNorms(const PeriodicSignal& f, double alpha, double p, const DifferenceOptions& opt)
        : coeffs_(fft_forward(f.samples)), alpha_(alpha), p_(p), opt_(opt) {
        if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
        terms_ = opt.mode == DifferenceMode::Series ? binomial_terms(alpha, opt.tailTolerance, opt.maxTerms) : 0;
    }

    std::vector<cplx> apply(double h) const {
        const std::size_t n = coeffs_.size();
        std::vector<cplx> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs_[i] == cplx(0.0)) continue;
            double k = static_cast<double>(bin_frequency(i, n));
            c[i] = coeffs_[i] * difference_symbol(alpha_, h, k, opt_, terms_);
        }
        return fft_inverse(c);
    }

    double norm(double h) const { return lp_norm(apply(h), p_); }

private:
    std::vector<cplx> coeffs_;
    double alpha_, p_;
    DifferenceOptions opt_;
    int terms_ = 0;
};

std::vector<double> step_grid(double t, int H) {
    std::vector<double> hs{t};
    for (int i = 1; i <= H; ++i) hs.push_back(t * std::pow(2.0, -0.5 * i));
    return hs;
}

}  // namespace

PeriodicSignal fractional_difference(const PeriodicSignal& f, double alpha, double h, const DifferenceOptions& opt) {
    DifferenceNorms d(f, alpha, 2.0, opt);
    return PeriodicSignal{d.apply(h), f.label};
}

double modulus(const PeriodicSignal& f, double alpha, double t, double p, const ModulusOptions& opt) {
    if (t <= 0.0) throw std::invalid_argument("t must be positive");
    DifferenceNorms d(f, alpha, p, opt.difference);
    std::vector<double> hs = step_grid(t, opt.H), vals(hs.size());
    parallel_for(hs.size(), [&](std::size_t i) { vals[i] = d.norm(hs[i]); });
    return *std::max_element(vals.begin(), vals.end());
}

ModulusCurve modulus_curve(const PeriodicSignal& f, double alpha, double p, int M, const ModulusOptions& opt) {
    if (M < 0) throw std::invalid_argument("M must be nonnegative");
    DifferenceNorms d(f, alpha, p, opt.difference);
    // Step sizes pi 2^{-m/2} are shared between neighbouring t_n.
    const int count = 2 * M + opt.H + 1;
    std::vector<double> norms(count);
    parallel_for(count, [&](std::size_t m) { norms[m] = d.norm(M_PI * std::pow(2.0, -0.5 * m)); });
    ModulusCurve c;
    c.alpha = alpha;
    c.p = p;
    for (int n = 0; n <= M; ++n) {
        c.tGrid.push_back(M_PI * std::ldexp(1.0, -n));
        c.values.push_back(*std::max_element(norms.begin() + 2 * n, norms.begin() + 2 * n + opt.H + 1));
    }
    return c;
}

int default_scales(std::size_t N) { return log2_exact(N) + 4; }

double fractional_derivative_norm(const PeriodicSignal& f, double alpha, double p) {
    std::vector<cplx> c = fft_forward(f.samples);
    for (std::size_t i = 0; i < c.size(); ++i) {
        double k = static_cast<double>(bin_frequency(i, c.size()));
        c[i] = k == 0.0 ? cplx(0.0) : c[i] * std::pow(cplx(0.0, k), alpha);
    }
    return lp_norm(fft_inverse(c), p);
}

namespace {

NormReport modulus_route(const PeriodicSignal& f, double order, double s, double logw, double p, double q, int M,
                         const ModulusOptions& opt, const std::string& method) {
    if (M < 0) M = default_scales(f.size());
    ModulusCurve c = modulus_curve(f, order, p, M, opt);
    NormReport r;
    r.method = method;
    r.N = f.size();
    r.J = M;
    r.partition = "dyadic-t";
    r.q = q;
    r.offset = lp_norm(f.samples, p);
    const double measure = std::isinf(q) ? 1.0 : std::pow(std::log(2.0), 1.0 / q);
    for (int n = 0; n <= M; ++n) {
        double t = c.tGrid[n];
        if (t > 1.0) continue;
        if (r.perScale.empty()) r.firstScale = n;
        r.perScale.push_back(measure * std::pow(t, -s) * std::pow(1.0 - std::log(t), logw) * c.values[n]);
    }
    // Below t_M the signal is a trigonometric polynomial: omega(t) ~ t^order ||D^order f||_p.
    if (!std::isinf(q)) {
        const double D = fractional_derivative_norm(f, order, p);
        if (s == order) {
            if (-logw * q <= 1.0) {
                r.tailPower = D > 0.0 ? kInf : 0.0;
            } else {
                const double shift = (1.0 - std::log(M_PI)) / std::log(2.0);
                r.tailPower = std::pow(measure * D, q) * std::pow(std::log(2.0), logw * q) *
                              hurwitz_zeta(-logw * q, M + 1.0 + shift);
            }
        } else {
            double sum = 0.0;
            for (int n = M + 1; n <= M + 4000; ++n) {
                double t = M_PI * std::ldexp(1.0, -n);
                double term = std::pow(measure * std::pow(t, order - s) * std::pow(1.0 - std::log(t), logw) * D, q);
                sum += term;
                if (term <= 1e-18 * sum) break;
            }
            r.tailPower = sum;
        }
        r.note = "scale sum completed below t_M";
    }
    finalize(r);
    return r;
}

}  // namespace

NormReport lipschitz_norm_modulus(const PeriodicSignal& f, const SpaceParams& sp, int M, const ModulusOptions& opt) {
    if (sp.kind != SpaceKind::Lipschitz) throw std::invalid_argument("Lipschitz parameters required");
    if (!validate(sp).empty()) throw std::invalid_argument("invalid Lipschitz parameters: " + to_string(sp));
    const double a = sp.smooth.to_double();
    return modulus_route(f, a, a, -sp.logExp.to_double(), sp.p.to_double(), sp.q.to_double(), M, opt,
                         "lipschitz-modulus");
}

NormReport besov_norm_modulus(const PeriodicSignal& f, const SpaceParams& sp, double order, int M,
                              const ModulusOptions& opt) {
    if (sp.kind != SpaceKind::Besov) throw std::invalid_argument("Besov parameters required");
    const double s = sp.smooth.to_double();
    if (!(s > 0.0 && s < order)) throw std::invalid_argument("requires 0 < s < modulus order");
    return modulus_route(f, order, s, sp.logExp.to_double(), sp.p.to_double(), sp.q.to_double(), M, opt,
                         "besov-modulus");
}

double k_functional_estimate(const PeriodicSignal& f, double alpha, double t, double p, const ModulusOptions& opt) {
    return std::pow(t, alpha) * lp_norm(f.samples, p) + modulus(f, alpha, t, p, opt);
}

MarchaudReport marchaud_check(const PeriodicSignal& f, double alpha, double delta, double p, int M,
                              const ModulusOptions& opt) {
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    ModulusCurve lo = modulus_curve(f, alpha, p, M, opt);
    ModulusCurve hi = modulus_curve(f, alpha + delta, p, M, opt);
    MarchaudReport rep;
    // Beyond t = pi the modulus is constant.
    double integral = hi.values[0] * std::pow(M_PI, -alpha) / alpha;
    for (int n = 0; n <= M; ++n) {
        double t = lo.tGrid[n];
        integral += hi.values[n] * std::pow(t, -alpha) * std::log(2.0);
        double lhs = std::pow(t, -alpha) * lo.values[n];
        rep.rows.push_back({t, lhs, integral});
        double ratio = integral > 0.0 ? lhs / integral : 0.0;
        rep.maxRatio = std::max(rep.maxRatio, ratio);
    }
    return rep;
}

std::string curve_csv(const ModulusCurve& c) {
    std::ostringstream os;
    os.precision(17);
    os << "t,omega\n";
    for (std::size_t i = 0; i < c.tGrid.size(); ++i) os << c.tGrid[i] << "," << c.values[i] << "\n";
    return os.str();
}

}  // namespace lipspace
