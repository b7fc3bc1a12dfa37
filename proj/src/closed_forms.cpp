#include "lipspace/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lipspace {

cplx LacunarySpec::a(int j) const {
    if (j < 3 || j > J()) return 0.0;
    return coeffs[j - 3] * std::exp2(-decay * j);
}

double LacunarySpec::log2_weighted(int j, double s) const {
    double m = std::abs(coeffs.at(j - 3));
    if (m == 0.0) return -kInf;
    return std::log2(m) + (s - decay) * j;
}

GMTest is_general_monotone(const std::vector<double>& a) {
    for (double v : a)
        if (v < 0.0) throw std::invalid_argument("GM test requires nonnegative entries");
    GMTest t;
    const std::size_t L = a.size();
    // n is 1-based; the block sum needs a_{2n}.
    for (std::size_t n = 1; 2 * n <= L; ++n) {
        double var = 0.0;
        for (std::size_t k = n; k <= 2 * n - 1; ++k) var += std::abs(a[k - 1] - a[k]);
        double an = a[n - 1];
        if (an == 0.0) {
            if (var > 0.0) {
                t.isGM = false;
                t.C = kInf;
                return t;
            }
            continue;
        }
        t.C = std::max(t.C, var / an);
    }
    return t;
}

GMSequence make_gm_sequence(std::vector<double> a, GMFlavor flavor) {
    GMSequence s;
    GMTest t = is_general_monotone(a);
    s.a = std::move(a);
    s.flavor = flavor;
    s.isGM = t.isGM;
    s.gmConstant = t.C;
    return s;
}

namespace {

NormReport coefficient_report(const std::string& method, double q, std::size_t truncation) {
    NormReport r;
    r.method = method;
    r.q = q;
    r.truncation = truncation;
    r.partition = "coefficients";
    return r;
}

}  // namespace

NormReport lacunary_besov_norm(const LacunarySpec& spec, double s, double b, double q) {
    NormReport r = coefficient_report("lacunary-besov", q, spec.coeffs.size());
    r.firstScale = 3;
    r.J = spec.J();
    for (int j = 3; j <= spec.J(); ++j) r.perScale.push_back(std::exp2(spec.log2_weighted(j, s)) * std::pow(1.0 + j, b));
    finalize(r);
    return r;
}

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0) || a < 1.0) throw std::invalid_argument("hurwitz_zeta requires s > 1, a >= 1");
    const int K = 12;
    double sum = 0.0;
    for (int m = 0; m < K; ++m) sum += std::pow(a + m, -s);
    double x = a + K;
    sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s) + s * std::pow(x, -s - 1.0) / 12.0 -
           s * (s + 1.0) * (s + 2.0) * std::pow(x, -s - 3.0) / 720.0 +
           s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(x, -s - 5.0) / 30240.0;
    return sum;
}

NormReport lacunary_lipschitz_norm(const LacunarySpec& spec, double alpha, double b, double q, long kmax) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (std::isinf(q) ? b < 0.0 : !(b > 1.0 / q)) throw std::invalid_argument("trivial Lipschitz parameters");
    NormReport r = coefficient_report("lacunary-lipschitz", q, spec.coeffs.size());
    r.firstScale = 3;
    const long J = spec.J();
    const long last = kmax < 0 ? J : kmax;
    r.J = static_cast<int>(last);
    // S_k = sum_{j<=k} 2^{2 j alpha} |a_j|^2, accumulated relative to a running scale.
    double logscale = -kInf, acc = 0.0;
    for (long k = 3; k <= last; ++k) {
        if (k <= J) {
            double l = spec.log2_weighted(static_cast<int>(k), alpha);
            if (std::isfinite(l)) {
                double l2 = 2.0 * l;
                if (l2 > logscale) {
                    acc = acc * std::exp2(logscale - l2) + 1.0;
                    logscale = l2;
                } else {
                    acc += std::exp2(l2 - logscale);
                }
            }
        }
        double root = acc > 0.0 ? std::exp2(0.5 * (logscale + std::log2(acc))) : 0.0;
        r.perScale.push_back(std::pow(1.0 + k, -b) * root);
    }
    if (kmax < 0 && !std::isinf(q) && acc > 0.0) {
        double root = std::exp2(0.5 * (logscale + std::log2(acc)));
        r.tailPower = std::pow(root, q) * hurwitz_zeta(b * q, static_cast<double>(J) + 2.0);
        r.note = "outer sum completed beyond J";
    }
    finalize(r);
    return r;
}

namespace {

void check_gm(const GMSequence& seq, NormReport& r) {
    if (!seq.isGM) {
        r.warning = true;
        r.note = "sequence is not general monotone";
    }
}

double log1(double n) { return 1.0 + std::log(n); }

// Terms ((1+log n)^{-b q} (sum_{k<=n} k^e a_k^p)^{q/p} / n)^{1/q}.
NormReport nested_gm(const std::string& method, const GMSequence& seq, double e, double b, double p, double q) {
    NormReport r = coefficient_report(method, q, seq.a.size());
    r.firstScale = 1;
    check_gm(seq, r);
    double inner = 0.0;
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    for (std::size_t i = 0; i < seq.a.size(); ++i) {
        double n = static_cast<double>(i + 1);
        inner += std::pow(n, e) * std::pow(seq.a[i], p);
        r.perScale.push_back(std::pow(log1(n), -b) * std::pow(inner, 1.0 / p) * std::pow(n, -inv_q));
    }
    // Outer sum beyond the last coefficient, inner sum frozen: midpoint rule for sum_{n>N} (1+log n)^{-bq}/n.
    if (!std::isinf(q) && inner > 0.0) {
        const double bq = b * q;
        const double n0 = static_cast<double>(seq.a.size()) + 0.5;
        r.tailPower = bq > 1.0 ? std::pow(inner, q / p) * std::pow(log1(n0), 1.0 - bq) / (bq - 1.0) : kInf;
        r.note = "outer sum completed beyond N";
    }
    finalize(r);
    return r;
}

// Terms n^{e} (1+log n)^{b} a_n aggregated in l_q.
NormReport simple_gm(const std::string& method, const GMSequence& seq, double e, double b, double q) {
    NormReport r = coefficient_report(method, q, seq.a.size());
    r.firstScale = 1;
    check_gm(seq, r);
    for (std::size_t i = 0; i < seq.a.size(); ++i) {
        double n = static_cast<double>(i + 1);
        r.perScale.push_back(std::pow(n, e) * std::pow(log1(n), b) * seq.a[i]);
    }
    finalize(r);
    return r;
}

void require_open(double p, const char* name) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument(std::string("requires 1 < ") + name + " < inf");
}

}  // namespace

NormReport gm_lp_norm(const GMSequence& seq, double p) {
    require_open(p, "p");
    return simple_gm("gm-lp", seq, 1.0 - 2.0 / p, 0.0, p);
}

NormReport gm_besov_norm(const GMSequence& seq, double s, double b, double p, double q) {
    require_open(p, "p");
    double e = s + 1.0 - 1.0 / p - (std::isinf(q) ? 0.0 : 1.0 / q);
    return simple_gm("gm-besov", seq, e, b, q);
}

NormReport gm_lipschitz_norm(const GMSequence& seq, double alpha, double b, double p, double q) {
    require_open(p, "p");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (std::isinf(q) ? b < 0.0 : !(b > 1.0 / q)) throw std::invalid_argument("trivial Lipschitz parameters");
    return nested_gm("gm-lipschitz", seq, alpha * p + p - 2.0, b, p, q);
}

double gm_modulus(const GMSequence& seq, double alpha, std::size_t n, double p) {
    require_open(p, "p");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    double head = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < seq.a.size(); ++i) {
        double k = static_cast<double>(i + 1);
        double ap = std::pow(seq.a[i], p);
        if (i + 1 <= n)
            head += std::pow(k, alpha * p + p - 2.0) * ap;
        else
            tail += std::pow(k, p - 2.0) * ap;
    }
    return std::pow(static_cast<double>(n), -alpha) * std::pow(head, 1.0 / p) + std::pow(tail, 1.0 / p);
}

NormReport gm_lorentz_zygmund_norm(const GMSequence& seq, double r, double q, double b) {
    require_open(r, "r");
    if (!(q > 0.0) || std::isinf(q)) throw std::invalid_argument("requires 0 < q < inf");
    return simple_gm("gm-lorentz-zygmund", seq, 1.0 - 1.0 / r - 1.0 / q, b, q);
}

NormReport gm_grand_norm(const GMSequence& seq, double r, double q, double b, double p) {
    require_open(r, "r");
    return nested_gm("gm-grand", seq, p - p / r - 1.0, b, p, q);
}

PeriodicSignal realize_signal(const LacunarySpec& spec, std::size_t N) {
    if (!is_power_of_two(N) || N < 8) throw std::invalid_argument("N must be 2^m with m >= 3");
    std::vector<cplx> c(N);
    for (int j = 3; j <= spec.J(); ++j) {
        double fr = std::ldexp(1.0, j) - 2.0;
        if (fr >= static_cast<double>(N) / 2.0) throw std::invalid_argument("frequency overflow");
        c[static_cast<std::size_t>(fr)] += spec.a(j);
    }
    return make_signal(fft_inverse(c), "lacunary");
}

PeriodicSignal realize_signal(const GMSequence& seq, std::size_t N) {
    if (!is_power_of_two(N) || N < 8) throw std::invalid_argument("N must be 2^m with m >= 3");
    if (seq.a.size() >= N / 2) throw std::invalid_argument("frequency overflow");
    std::vector<cplx> c(N);
    for (std::size_t i = 0; i < seq.a.size(); ++i) {
        std::size_t n = i + 1;
        if (seq.flavor == GMFlavor::Cosine) {
            c[n] += seq.a[i] / 2.0;
            c[N - n] += seq.a[i] / 2.0;
        } else {
            c[n] += seq.a[i] / cplx(0.0, 2.0);
            c[N - n] -= seq.a[i] / cplx(0.0, 2.0);
        }
    }
    return make_signal(fft_inverse(c), seq.flavor == GMFlavor::Cosine ? "gm-cosine" : "gm-sine");
}

namespace {

std::vector<std::vector<std::string>> read_rows(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double to_num(const std::string& s) {
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw ParseError("malformed number '" + s + "'");
    }
}

}  // namespace

GMSequence read_gm_csv(std::istream& in, GMFlavor flavor) {
    std::map<long, double> vals;
    for (const auto& row : read_rows(in)) {
        if (row.size() != 2) throw ParseError("expected index,value");
        long idx = static_cast<long>(to_num(row[0]));
        if (idx < 1) throw ParseError("GM indices start at 1");
        vals[idx] = to_num(row[1]);
    }
    std::vector<double> a(vals.empty() ? 0 : vals.rbegin()->first, 0.0);
    for (const auto& [k, v] : vals) a[k - 1] = v;
    for (double v : a)
        if (v < 0.0) throw ParseError("GM coefficients must be nonnegative");
    return make_gm_sequence(std::move(a), flavor);
}

LacunarySpec read_lacunary_csv(std::istream& in) {
    std::map<long, cplx> vals;
    for (const auto& row : read_rows(in)) {
        if (row.size() < 2 || row.size() > 3) throw ParseError("expected j,re,im");
        long j = static_cast<long>(to_num(row[0]));
        if (j < 3) throw ParseError("lacunary indices start at 3");
        vals[j] = cplx(to_num(row[1]), row.size() == 3 ? to_num(row[2]) : 0.0);
    }
    LacunarySpec spec;
    if (vals.empty()) return spec;
    spec.coeffs.assign(vals.rbegin()->first - 2, 0.0);
    for (const auto& [j, v] : vals) spec.coeffs[j - 3] = v;
    return spec;
}

}  // namespace lipspace
