#pragma once

#include <istream>
#include <vector>

#include "lipspace/report.hpp"
#include "lipspace/signal.hpp"

namespace lipspace {

// f(x) = sum_{j=3}^J a_j e^{i(2^j-2)x} with a_j = coeffs[j-3] * 2^{-decay*j}.
struct LacunarySpec {
    std::vector<cplx> coeffs;
    double decay = 0.0;

    int J() const { return static_cast<int>(coeffs.size()) + 2; }
    cplx a(int j) const;
    // log2 |2^{s j} a_j|, -inf for a zero coefficient
    double log2_weighted(int j, double s) const;
};

enum class GMFlavor { Cosine, Sine };

struct GMSequence {
    std::vector<double> a;  // a[0] = a_1
    double gmConstant = 0.0;
    GMFlavor flavor = GMFlavor::Cosine;
    bool isGM = true;
};

struct GMTest {
    bool isGM = true;
    double C = 0.0;
};

GMTest is_general_monotone(const std::vector<double>& a);

GMSequence make_gm_sequence(std::vector<double> a, GMFlavor flavor = GMFlavor::Cosine);

NormReport lacunary_besov_norm(const LacunarySpec& spec, double s, double b, double q);

// kmax < 0 keeps the full outer sum over k, adding the exact tail beyond J.
NormReport lacunary_lipschitz_norm(const LacunarySpec& spec, double alpha, double b, double q, long kmax = -1);

// sum_{m >= a} m^{-s}, s > 1, a >= 1
double hurwitz_zeta(double s, double a);

NormReport gm_lp_norm(const GMSequence& seq, double p);
NormReport gm_besov_norm(const GMSequence& seq, double s, double b, double p, double q);
NormReport gm_lipschitz_norm(const GMSequence& seq, double alpha, double b, double p, double q);
double gm_modulus(const GMSequence& seq, double alpha, std::size_t n, double p);
NormReport gm_lorentz_zygmund_norm(const GMSequence& seq, double r, double q, double b);
// Coefficient form of the grand norm of L^{(R)}_{r,q,-b,p}.
NormReport gm_grand_norm(const GMSequence& seq, double r, double q, double b, double p);

PeriodicSignal realize_signal(const LacunarySpec& spec, std::size_t N);
PeriodicSignal realize_signal(const GMSequence& seq, std::size_t N);

// "index,value" lines
GMSequence read_gm_csv(std::istream& in, GMFlavor flavor = GMFlavor::Cosine);
// "j,re,im" lines
LacunarySpec read_lacunary_csv(std::istream& in);

}  // namespace lipspace
