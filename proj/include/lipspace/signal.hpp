#pragma once

#include <complex>
#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "lipspace/params.hpp"

namespace lipspace {

using cplx = std::complex<double>;

// Uniform samples on x_n = 2*pi*n/N, N = 2^m with m >= 3.
struct PeriodicSignal {
    std::vector<cplx> samples;
    std::string label;

    std::size_t size() const { return samples.size(); }
};

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);

PeriodicSignal make_signal(std::vector<cplx> samples, std::string label = {});

// CSV: one sample per line, "re" or "re,im"; lines starting with '#' are skipped.
PeriodicSignal read_signal_csv(std::istream& in, const std::string& label = {});
PeriodicSignal load_signal_csv(const std::string& path);

// Coefficients c_k = (1/N) sum_n f(x_n) e^{-ikx_n}, stored in FFT bin order.
std::vector<cplx> fft_forward(const std::vector<cplx>& samples);
std::vector<cplx> fft_inverse(const std::vector<cplx>& coeffs);

// Signed frequency of FFT bin i; the Nyquist bin maps to +N/2.
long bin_frequency(std::size_t i, std::size_t n);

// Rectangle rule ((2*pi/N) sum |g|^p)^{1/p}; max |g| at p = inf.
double lp_norm(const std::vector<cplx>& g, double p);
double lp_norm(const PeriodicSignal& g, const ExtRational& p);

double l2_norm_plain(const std::vector<cplx>& g);

}  // namespace lipspace
