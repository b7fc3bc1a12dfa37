#include "lipspace/signal.hpp"

#include <fftw3.h>

#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lipspace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    if (!is_power_of_two(n)) throw std::invalid_argument("length is not a power of two");
    int m = 0;
    while ((std::size_t{1} << m) < n) ++m;
    return m;
}

PeriodicSignal make_signal(std::vector<cplx> samples, std::string label) {
    if (!is_power_of_two(samples.size()) || samples.size() < 8)
        throw std::invalid_argument("signal length must be 2^m with m >= 3, got " + std::to_string(samples.size()));
    return PeriodicSignal{std::move(samples), std::move(label)};
}

PeriodicSignal read_signal_csv(std::istream& in, const std::string& label) {
    std::vector<cplx> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::stringstream ss(line);
        std::string re_s, im_s;
        std::getline(ss, re_s, ',');
        bool has_im = static_cast<bool>(std::getline(ss, im_s, ','));
        try {
            std::size_t used = 0;
            double re = std::stod(re_s, &used);
            double im = 0.0;
            if (has_im) im = std::stod(im_s);
            out.emplace_back(re, im);
        } catch (const std::exception&) {
            throw ParseError("malformed sample on line " + std::to_string(lineno));
        }
    }
    try {
        return make_signal(std::move(out), label);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

PeriodicSignal load_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_signal_csv(in, path);
}

namespace {

std::mutex g_plan_mu;
std::map<std::pair<std::size_t, int>, fftw_plan> g_plans;

fftw_plan plan_for(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(g_plan_mu);
    auto key = std::make_pair(n, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    fftw_complex* a = fftw_alloc_complex(n);
    fftw_complex* b = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), a, b, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(a);
    fftw_free(b);
    g_plans.emplace(key, p);
    return p;
}

std::vector<cplx> run(const std::vector<cplx>& in, int sign) {
    std::vector<cplx> x(in), y(in.size());
    if (in.empty()) return y;
    fftw_execute_dft(plan_for(in.size(), sign), reinterpret_cast<fftw_complex*>(x.data()),
                     reinterpret_cast<fftw_complex*>(y.data()));
    return y;
}

}  // namespace

std::vector<cplx> fft_forward(const std::vector<cplx>& samples) {
    std::vector<cplx> c = run(samples, FFTW_FORWARD);
    const double s = 1.0 / static_cast<double>(samples.size());
    for (auto& v : c) v *= s;
    return c;
}

std::vector<cplx> fft_inverse(const std::vector<cplx>& coeffs) { return run(coeffs, FFTW_BACKWARD); }

long bin_frequency(std::size_t i, std::size_t n) {
    return i <= n / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n);
}

double lp_norm(const std::vector<cplx>& g, double p) {
    if (p < 1.0) throw std::invalid_argument("p must be >= 1");
    if (g.empty()) return 0.0;
    double m = 0.0;
    for (const auto& v : g) m = std::max(m, std::abs(v));
    if (std::isinf(p) || m == 0.0) return m;
    double s = 0.0;
    for (const auto& v : g) s += std::pow(std::abs(v) / m, p);
    return m * std::pow(s * 2.0 * M_PI / static_cast<double>(g.size()), 1.0 / p);
}

double lp_norm(const PeriodicSignal& g, const ExtRational& p) { return lp_norm(g.samples, p.to_double()); }

double l2_norm_plain(const std::vector<cplx>& g) {
    double s = 0.0;
    for (const auto& v : g) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace lipspace
