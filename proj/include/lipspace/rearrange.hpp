#pragma once

#include <string>
#include <vector>

#include "lipspace/signal.hpp"

namespace lipspace {

// Step function f* on (0,1]: value v_k on (t_{k-1}, t_k], breakpoints[0] = 0.
struct RearrangedProfile {
    std::vector<double> breakpoints;
    std::vector<double> values;
    double totalMeasure = 1.0;  // measure of the original domain, absorbed by the normalization
};

RearrangedProfile rearrangement(const PeriodicSignal& f);
RearrangedProfile make_profile(std::vector<double> breakpoints, std::vector<double> values);

// Norm on the unit-measure interval.
double profile_lp_norm(const RearrangedProfile& prof, double p);

struct QuadratureOptions {
    double tolerance = 1e-8;
    unsigned maxDepth = 15;
};

// (int_0^1 (t^{1/r} (1+|log t|)^b f*(t))^q dt/t)^{1/q}
double lorentz_zygmund_norm(const RearrangedProfile& prof, double r, double q, double b,
                            const QuadratureOptions& opt = {});

// Space L^{(R)}_{r,q,c,p}: (int_0^1 (1-log t)^{c q} (int_t^1 (u^{1/r} f*(u))^p du/u)^{q/p} dt/t)^{1/q}.
// Ordered as in the Lipschitz embedding target: r power index, q outer, c outer log, p inner.
double grand_norm(const RearrangedProfile& prof, double r, double q, double c, double p,
                  const QuadratureOptions& opt = {});

std::string profile_csv(const RearrangedProfile& prof);

}  // namespace lipspace
