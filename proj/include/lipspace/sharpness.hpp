#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lipspace/closed_forms.hpp"
#include "lipspace/params.hpp"

namespace lipspace {

// n^a (1+log n)^c (1+log(1+log n))^e, up to a positive constant; `zero` marks the null term.
struct PowerLogTerm {
    ExtRational a, c, e;
    bool zero = false;

    PowerLogTerm() = default;
    PowerLogTerm(ExtRational a_, ExtRational c_ = 0, ExtRational e_ = 0) : a(a_), c(c_), e(e_) {}

    static PowerLogTerm null();
    static PowerLogTerm one() { return PowerLogTerm(0); }

    double eval(double n) const;
    std::string str() const;
};

bool operator==(const PowerLogTerm& x, const PowerLogTerm& y);
PowerLogTerm operator*(const PowerLogTerm& x, const PowerLogTerm& y);
PowerLogTerm pow(const PowerLogTerm& x, const ExtRational& r);

// The weight leaves the power-log family under some closure operation.
class OutsideClosure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A quantity that the closure evaluates to +inf (divergent tail, unbounded envelope).
class InfiniteQuantity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SeriesVerdict { Converges, Diverges };
std::string to_string(SeriesVerdict v);

SeriesVerdict powerlog_series_converges(const PowerLogTerm& t);

// Lexicographic sign of (a, c, e): +1 grows, -1 decays, 0 constant.
int growth_sign(const PowerLogTerm& t);

// Asymptotics as n -> inf, up to constants. Sums and integrals from 1 behave alike.
PowerLogTerm dominant(const PowerLogTerm& x, const PowerLogTerm& y);
PowerLogTerm prefix_sum(const PowerLogTerm& t);
PowerLogTerm tail_sum(const PowerLogTerm& t);      // throws InfiniteQuantity
PowerLogTerm sup_envelope(const PowerLogTerm& t);  // sup_{m >= n}; throws InfiniteQuantity
PowerLogTerm running_max(const PowerLogTerm& t);   // max_{m <= n}

struct BeGEResult {
    SeriesVerdict bege2 = SeriesVerdict::Converges;
    SeriesVerdict bege3 = SeriesVerdict::Converges;
    bool inequalityHolds = true;
    PowerLogTerm summand2;
    PowerLogTerm summand3;
    bool tailInfinite = false;
};

// Hardy inequality over nonincreasing sequences with weights lambda, gamma; 0 < u < v <= 1.
BeGEResult bege_criterion(const PowerLogTerm& lambda, const PowerLogTerm& gamma, const ExtRational& u,
                          const ExtRational& v);

// Weight on (0, inf): t^a (1+|log t|)^c (1+log(1+|log t|))^e on (0,1) and on [1, inf).
struct PiecewiseWeight {
    PowerLogTerm nearZero;
    PowerLogTerm nearInfinity;
};

enum class GPForm { Integral, Supremum };

struct GPResult {
    GPForm form = GPForm::Integral;
    SeriesVerdict condition = SeriesVerdict::Converges;  // Diverges: the integral or the sup is infinite
    bool inequalityHolds = true;
    // Integrand (or envelope) near t = 0 in the variable 1/t, and as t -> inf.
    PowerLogTerm atZero;
    PowerLogTerm atInfinity;
    bool infiniteFactor = false;
};

// Reverse Hardy inequality for g*; integral criterion when R < Q, supremum criterion when Q <= R.
// Throws std::invalid_argument when the weights violate the standing hypotheses.
GPResult gp_criterion(const PiecewiseWeight& u, const PiecewiseWeight& v, const PiecewiseWeight& w,
                      const ExtRational& R, const ExtRational& Q);

enum class WitnessKind {
    LacunaryBesovToLip,    // a_j = 2^{-j alpha} (1+j)^{-beta}: Besov finite, Lipschitz infinite
    LacunaryLipToBesov,    // same family, reversed roles
    GMLipToLorentzZygmund  // a_n = n^{-alpha-1+1/p} (1+log n)^{-beta}
};

enum class WitnessFamily { LacunaryLogPower, GMLogPower };

WitnessFamily family_of(WitnessKind k);
std::string to_string(WitnessKind k);
WitnessKind parse_witness_kind(const std::string& s);

struct WitnessSpec {
    WitnessKind kind = WitnessKind::LacunaryBesovToLip;
    double alpha = 0.5;
    double beta = 0.0;
    double b = 1.0;
    double p = 2.0;
    double q = 2.0;
    double epsilon = 0.0;  // lacunary: Besov log shift of the comparison space
    double r = 0.0;        // GM: Lorentz-Zygmund power index
    double xi = 0.0;       // GM: target log exponent -b + xi
    double scale = 1.0;
    std::vector<std::size_t> truncations;
};

class WitnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Open interval the exponent beta must lie in; throws WitnessError on invalid side parameters.
std::pair<double, double> witness_interval(const WitnessSpec& ws);
void check_witness(const WitnessSpec& ws);

using WitnessObject = std::variant<LacunarySpec, GMSequence>;

std::vector<WitnessObject> make_witness(const WitnessSpec& ws);

enum class RouteKind { LacunaryBesov, LacunaryLipschitz, GMLipschitz, GMLorentzZygmund, GMBesov };
std::string to_string(RouteKind k);

struct NormRoute {
    RouteKind kind = RouteKind::LacunaryBesov;
    double s = 0.0;   // smoothness (alpha)
    double b = 0.0;   // log exponent as used by the closed form
    double p = 2.0;
    double q = 2.0;
    double r = 2.0;
};

bool route_applies(const NormRoute& route, WitnessFamily fam);
double evaluate_route(const NormRoute& route, const WitnessObject& obj);

// Source and target norms the witness is built to separate.
std::pair<NormRoute, NormRoute> default_routes(const WitnessSpec& ws);

struct DivergenceThresholds {
    double srcMaxGrowth = 0.02;
    double dstMinGrowth = 0.10;
};

struct DivergenceRow {
    std::size_t truncation = 0;
    double src = 0.0;
    double dst = 0.0;
    double ratio = 0.0;
};

struct DivergenceTable {
    std::vector<DivergenceRow> rows;
    double srcGrowth = 0.0;
    double dstGrowth = 0.0;
    bool patternHeld = false;
    bool vacuous = false;
    std::string verdict;
};

DivergenceTable demonstrate_divergence(const WitnessSpec& ws, const NormRoute& src, const NormRoute& dst,
                                       const DivergenceThresholds& th = {});
DivergenceTable demonstrate_divergence(const WitnessSpec& ws, const DivergenceThresholds& th = {});

std::string divergence_csv(const DivergenceTable& t);

}  // namespace lipspace
