#pragma once

#include <vector>

#include "lipspace/report.hpp"
#include "lipspace/signal.hpp"

namespace lipspace {

// Orthonormal periodic Haar coefficients on [0,1); samples are cell averages.
struct HaarCoeffs {
    cplx mean = 0.0;
    std::vector<std::vector<cplx>> levels;  // levels[j][m], j = 0..J-1

    int J() const { return static_cast<int>(levels.size()); }
    // Sequence-space coefficient 2^{j/2} <f, psi_{j,m}>.
    cplx lambda(int j, std::size_t m) const;
};

HaarCoeffs haar_analyze(const PeriodicSignal& f);
PeriodicSignal haar_synthesize(const HaarCoeffs& c);

double f_sequence_norm(const HaarCoeffs& c, double s, double p);

NormReport lip_sequence_norm(const HaarCoeffs& c, double alpha, double b, double p, double q);

double b_sequence_norm(const HaarCoeffs& c, double s, double xi, double p, double q);

bool haar_regime(double alpha, double p);

}  // namespace lipspace
