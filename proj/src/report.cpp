#include "lipspace/report.hpp"

#include <algorithm>
#include <cmath>

namespace lipspace {

double aggregate(const std::vector<double>& terms, double q, double tailPower) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, std::abs(t));
    if (std::isinf(q)) return m;
    if (m == 0.0) return std::pow(tailPower, 1.0 / q);
    double s = 0.0;
    for (double t : terms) s += std::pow(std::abs(t) / m, q);
    s += tailPower / std::pow(m, q);
    return m * std::pow(s, 1.0 / q);
}

double recompute_value(const NormReport& r) { return r.offset + aggregate(r.perScale, r.q, r.tailPower); }

void finalize(NormReport& r) {
    r.value = recompute_value(r);
    r.lastTerm = r.perScale.empty() ? 0.0 : r.perScale.back();
}

}  // namespace lipspace
