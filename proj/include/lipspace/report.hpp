#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace lipspace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// value = offset + (sum_k perScale[k]^q + tailPower)^{1/q}, or offset + max at q = inf.
struct NormReport {
    double value = 0.0;
    std::string method;
    std::vector<double> perScale;
    int firstScale = 0;
    double q = 2.0;
    double offset = 0.0;
    double tailPower = 0.0;
    std::size_t N = 0;
    int J = 0;
    std::string partition;
    std::size_t truncation = 0;
    double lastTerm = 0.0;
    bool equivalenceValid = true;
    bool warning = false;
    std::string note;
};

// l_q aggregate of nonnegative terms; sup at q = inf. Scaled to avoid overflow.
double aggregate(const std::vector<double>& terms, double q, double tailPower = 0.0);

double recompute_value(const NormReport& r);

void finalize(NormReport& r);

}  // namespace lipspace
