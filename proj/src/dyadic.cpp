#include "lipspace/dyadic.hpp"

#include <cmath>
#include <stdexcept>

#include "lipspace/closed_forms.hpp"
#include "lipspace/parallel.hpp"

namespace lipspace {

std::string to_string(PartitionKind k) { return k == PartitionKind::Sharp ? "sharp" : "smooth"; }

PartitionKind parse_partition(const std::string& s) {
    if (s == "sharp" || s == "Sharp") return PartitionKind::Sharp;
    if (s == "smooth" || s == "SmoothBump" || s == "bump") return PartitionKind::SmoothBump;
    throw ParseError("unknown partition '" + s + "'");
}

double bump_profile(double t) {
    double a = std::abs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    double s = a - 1.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

DyadicPartition make_partition(std::size_t N, PartitionKind kind) {
    if (!is_power_of_two(N) || N < 4) throw std::invalid_argument("partition size must be a power of two >= 4");
    DyadicPartition part;
    part.N = N;
    part.J = log2_exact(N) - 1;
    part.kind = kind;
    part.weights.assign(part.J + 1, std::vector<double>(N, 0.0));
    for (std::size_t i = 0; i < N; ++i) {
        double k = std::abs(static_cast<double>(bin_frequency(i, N)));
        for (int j = 0; j <= part.J; ++j) {
            double w;
            if (kind == PartitionKind::Sharp) {
                double hi = std::ldexp(1.0, j), lo = j == 0 ? -1.0 : std::ldexp(1.0, j - 1);
                w = (k > lo && k <= hi) ? 1.0 : 0.0;
            } else if (j == 0) {
                w = bump_profile(k);
            } else {
                w = bump_profile(k / std::ldexp(1.0, j)) - bump_profile(k / std::ldexp(1.0, j - 1));
            }
            part.weights[j][i] = w;
        }
    }
    return part;
}

DyadicBlocks lp_blocks(const PeriodicSignal& f, const DyadicPartition& part) {
    if (f.size() != part.N) throw std::invalid_argument("signal and partition sizes differ");
    const std::vector<cplx> c = fft_forward(f.samples);
    DyadicBlocks blocks(part.J + 1);
    parallel_for(blocks.size(), [&](std::size_t j) {
        std::vector<cplx> cj(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) cj[i] = c[i] * part.weights[j][i];
        blocks[j] = PeriodicSignal{fft_inverse(cj), f.label + "#" + std::to_string(j)};
    });
    return blocks;
}

namespace {

NormReport base_report(const std::string& method, const PeriodicSignal& f, const DyadicPartition& part, double q) {
    NormReport r;
    r.method = method;
    r.N = f.size();
    r.J = part.J;
    r.partition = to_string(part.kind);
    r.q = q;
    return r;
}

void require_open_p(double p) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("requires 1 < p < inf");
}

// L_p norm of (sum_{j<=k} 2^{2 j beta} |u_j|^2)^{1/2} for k = 0..J.
std::vector<double> truncated_square_terms(const DyadicBlocks& blocks, double beta, double p) {
    const std::size_t n = blocks.empty() ? 0 : blocks[0].size();
    std::vector<double> acc(n, 0.0), out(blocks.size());
    std::vector<cplx> root(n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const double w = std::pow(2.0, 2.0 * beta * static_cast<double>(k));
        for (std::size_t i = 0; i < n; ++i) {
            acc[i] += w * std::norm(blocks[k].samples[i]);
            root[i] = std::sqrt(acc[i]);
        }
        out[k] = lp_norm(root, p);
    }
    return out;
}

// sum_{k > J} (2^{k g} (1+k)^{-b} last)^q for a band exhausted at scale J, g <= 0.
double scale_tail(double last, int J, double g, double b, double q) {
    if (last == 0.0) return 0.0;
    if (g == 0.0) return b * q > 1.0 ? std::pow(last, q) * hurwitz_zeta(b * q, J + 2.0) : kInf;
    double sum = 0.0;
    for (int k = J + 1; k <= J + 4000; ++k) {
        double term = std::pow(std::pow(2.0, k * g) * std::pow(1.0 + k, -b) * last, q);
        sum += term;
        if (term <= 1e-18 * sum) break;
    }
    return sum;
}

}  // namespace

NormReport besov_norm_fourier(const PeriodicSignal& f, const DyadicPartition& part, const SpaceParams& sp) {
    if (sp.kind != SpaceKind::Besov) throw std::invalid_argument("Besov parameters required");
    if (sp.p < ExtRational(1)) throw std::invalid_argument("requires p >= 1");
    const double s = sp.smooth.to_double(), b = sp.logExp.to_double(), p = sp.p.to_double();
    NormReport r = base_report("besov-fourier", f, part, sp.q.to_double());
    DyadicBlocks blocks = lp_blocks(f, part);
    r.perScale.resize(blocks.size());
    parallel_for(blocks.size(), [&](std::size_t j) {
        double jj = static_cast<double>(j);
        r.perScale[j] = std::pow(2.0, jj * s) * std::pow(1.0 + jj, b) * lp_norm(blocks[j].samples, p);
    });
    finalize(r);
    return r;
}

NormReport unified_scale_norm(const PeriodicSignal& f, const DyadicPartition& part, double alpha, double beta,
                              double b, double p, double q) {
    if (beta < alpha) throw std::invalid_argument("requires beta >= alpha");
    require_open_p(p);
    NormReport r = base_report("unified-scale", f, part, q);
    DyadicBlocks blocks = lp_blocks(f, part);
    std::vector<double> t = truncated_square_terms(blocks, beta, p);
    r.perScale.resize(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        double kk = static_cast<double>(k);
        r.perScale[k] = std::pow(2.0, kk * (alpha - beta)) * std::pow(1.0 + kk, -b) * t[k];
    }
    if (!t.empty() && !std::isinf(q)) r.tailPower = scale_tail(t.back(), part.J, alpha - beta, b, q);
    finalize(r);
    return r;
}

NormReport lipschitz_norm_truncated_square(const PeriodicSignal& f, const DyadicPartition& part,
                                           const SpaceParams& sp) {
    if (sp.kind != SpaceKind::Lipschitz) throw std::invalid_argument("Lipschitz parameters required");
    const double a = sp.smooth.to_double();
    NormReport r = unified_scale_norm(f, part, a, a, sp.logExp.to_double(), sp.p.to_double(), sp.q.to_double());
    r.method = "lipschitz-fourier";
    return r;
}

NormReport sobolev_norm(const PeriodicSignal& f, double alpha, double p) {
    require_open_p(p);
    std::vector<cplx> c = fft_forward(f.samples);
    for (std::size_t i = 0; i < c.size(); ++i) {
        double k = static_cast<double>(bin_frequency(i, c.size()));
        c[i] *= std::pow(1.0 + k * k, alpha / 2.0);
    }
    NormReport r;
    r.method = "sobolev";
    r.N = f.size();
    r.q = kInf;
    r.perScale = {lp_norm(fft_inverse(c), p)};
    finalize(r);
    return r;
}

NormReport fourier_means_lip_norm(const PeriodicSignal& f, double alpha, double b, double p, double q) {
    require_open_p(p);
    const std::size_t n = f.size();
    const int J = log2_exact(n) - 1;
    const std::vector<cplx> c = fft_forward(f.samples);
    NormReport r;
    r.method = "fourier-means";
    r.N = n;
    r.J = J;
    r.partition = "partial-sums";
    r.q = q;
    r.offset = lp_norm(f.samples, p);
    r.perScale.resize(J + 1);
    parallel_for(J + 1, [&](std::size_t k) {
        const double cut = std::ldexp(1.0, static_cast<int>(k));
        std::vector<cplx> ck(n);
        for (std::size_t i = 0; i < n; ++i) {
            double fr = std::abs(static_cast<double>(bin_frequency(i, n)));
            if (fr <= cut && fr > 0.0) ck[i] = c[i] * std::pow(fr, alpha);
        }
        r.perScale[k] = std::pow(1.0 + static_cast<double>(k), -b) * lp_norm(fft_inverse(ck), p);
    });
    if (!std::isinf(q)) r.tailPower = scale_tail(r.perScale[J] * std::pow(1.0 + J, b), J, 0.0, b, q);
    finalize(r);
    return r;
}

}  // namespace lipspace
