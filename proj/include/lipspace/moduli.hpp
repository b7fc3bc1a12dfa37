#pragma once

#include <vector>

#include "lipspace/params.hpp"
#include "lipspace/report.hpp"
#include "lipspace/signal.hpp"

namespace lipspace {

enum class DifferenceMode { Symbol, Series };

struct DifferenceOptions {
    DifferenceMode mode = DifferenceMode::Symbol;
    double tailTolerance = 1e-10;
    int maxTerms = 10000;
};

struct ModulusOptions {
    int H = 16;
    DifferenceOptions difference;
};

struct ModulusCurve {
    std::vector<double> tGrid;
    std::vector<double> values;
    double alpha = 1.0;
    double p = 2.0;
};

// Number of binomial terms needed so that the tail sum of |C(alpha, j)| stays below tol (capped).
int binomial_terms(double alpha, double tol, int cap);

PeriodicSignal fractional_difference(const PeriodicSignal& f, double alpha, double h,
                                     const DifferenceOptions& opt = {});

double modulus(const PeriodicSignal& f, double alpha, double t, double p, const ModulusOptions& opt = {});

// t_n = pi 2^{-n}, n = 0..M
ModulusCurve modulus_curve(const PeriodicSignal& f, double alpha, double p, int M, const ModulusOptions& opt = {});

// Scales reach t_M = pi 2^{-M} well below the grid spacing.
int default_scales(std::size_t N);

// ||D^alpha f||_p with multiplier (ik)^alpha, the limit of omega_alpha(f,t)_p / t^alpha.
double fractional_derivative_norm(const PeriodicSignal& f, double alpha, double p);

NormReport lipschitz_norm_modulus(const PeriodicSignal& f, const SpaceParams& sp, int M = -1,
                                  const ModulusOptions& opt = {});

NormReport besov_norm_modulus(const PeriodicSignal& f, const SpaceParams& sp, double order, int M = -1,
                              const ModulusOptions& opt = {});

double k_functional_estimate(const PeriodicSignal& f, double alpha, double t, double p,
                             const ModulusOptions& opt = {});

struct MarchaudRow {
    double t;
    double lhs;
    double rhs;
};

struct MarchaudReport {
    std::vector<MarchaudRow> rows;
    double maxRatio = 0.0;
};

MarchaudReport marchaud_check(const PeriodicSignal& f, double alpha, double delta, double p, int M,
                              const ModulusOptions& opt = {});

std::string curve_csv(const ModulusCurve& c);

}  // namespace lipspace
