#include "lipspace/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "lipspace/parallel.hpp"

namespace lipspace {

PowerLogTerm PowerLogTerm::null() {
    PowerLogTerm t;
    t.zero = true;
    return t;
}

double PowerLogTerm::eval(double n) const {
    if (zero) return 0.0;
    const double L = 1.0 + std::log(n);
    return std::pow(n, a.to_double()) * std::pow(L, c.to_double()) * std::pow(1.0 + std::log(L), e.to_double());
}

std::string PowerLogTerm::str() const {
    if (zero) return "0";
    return "n^(" + a.str() + ") L^(" + c.str() + ") LL^(" + e.str() + ")";
}

bool operator==(const PowerLogTerm& x, const PowerLogTerm& y) {
    if (x.zero || y.zero) return x.zero == y.zero;
    return x.a == y.a && x.c == y.c && x.e == y.e;
}

PowerLogTerm operator*(const PowerLogTerm& x, const PowerLogTerm& y) {
    if (x.zero || y.zero) return PowerLogTerm::null();
    return PowerLogTerm(x.a + y.a, x.c + y.c, x.e + y.e);
}

PowerLogTerm pow(const PowerLogTerm& x, const ExtRational& r) {
    if (r.is_inf()) throw OutsideClosure("infinite exponent");
    if (x.zero) {
        if (r.is_zero()) return PowerLogTerm::one();
        if (r < ExtRational(0)) throw InfiniteQuantity("negative power of a null term");
        return x;
    }
    return PowerLogTerm(x.a * r, x.c * r, x.e * r);
}

std::string to_string(SeriesVerdict v) { return v == SeriesVerdict::Converges ? "Converges" : "Diverges"; }

SeriesVerdict powerlog_series_converges(const PowerLogTerm& t) {
    if (t.zero) return SeriesVerdict::Converges;
    const ExtRational m1(-1);
    if (t.a < m1) return SeriesVerdict::Converges;
    if (t.a == m1 && t.c < m1) return SeriesVerdict::Converges;
    if (t.a == m1 && t.c == m1 && t.e < m1) return SeriesVerdict::Converges;
    return SeriesVerdict::Diverges;
}

int growth_sign(const PowerLogTerm& t) {
    if (t.zero) return -1;
    for (const ExtRational* x : {&t.a, &t.c, &t.e}) {
        if (*x > ExtRational(0)) return 1;
        if (*x < ExtRational(0)) return -1;
    }
    return 0;
}

PowerLogTerm dominant(const PowerLogTerm& x, const PowerLogTerm& y) {
    if (x.zero) return y;
    if (y.zero) return x;
    auto key = [](const PowerLogTerm& t) { return std::tie(t.a, t.c, t.e); };
    return key(x) < key(y) ? y : x;
}

PowerLogTerm prefix_sum(const PowerLogTerm& t) {
    if (t.zero) return t;
    const ExtRational m1(-1), one(1);
    if (t.a > m1) return PowerLogTerm(t.a + one, t.c, t.e);
    if (t.a < m1) return PowerLogTerm::one();
    if (t.c > m1) return PowerLogTerm(0, t.c + one, t.e);
    if (t.c < m1) return PowerLogTerm::one();
    if (t.e > m1) return PowerLogTerm(0, 0, t.e + one);
    if (t.e < m1) return PowerLogTerm::one();
    throw OutsideClosure("partial sums of n^-1 L^-1 LL^-1 grow like a triple logarithm");
}

PowerLogTerm tail_sum(const PowerLogTerm& t) {
    if (t.zero) return t;
    if (powerlog_series_converges(t) == SeriesVerdict::Diverges)
        throw InfiniteQuantity("tail of a divergent series: " + t.str());
    const ExtRational m1(-1), one(1);
    if (t.a < m1) return PowerLogTerm(t.a + one, t.c, t.e);
    if (t.c < m1) return PowerLogTerm(0, t.c + one, t.e);
    return PowerLogTerm(0, 0, t.e + one);
}

PowerLogTerm sup_envelope(const PowerLogTerm& t) {
    int s = growth_sign(t);
    if (t.zero || s < 0) return t;
    if (s == 0) return PowerLogTerm::one();
    throw InfiniteQuantity("unbounded envelope: " + t.str());
}

PowerLogTerm running_max(const PowerLogTerm& t) {
    if (t.zero) return t;
    return growth_sign(t) > 0 ? t : PowerLogTerm::one();
}

BeGEResult bege_criterion(const PowerLogTerm& lambda, const PowerLogTerm& gamma, const ExtRational& u,
                          const ExtRational& v) {
    const ExtRational zero(0), one(1);
    if (u.is_inf() || v.is_inf() || !(u > zero) || !(u < v) || v > one)
        throw std::invalid_argument("bege_criterion requires 0 < u < v <= 1");
    if (gamma.zero) throw std::invalid_argument("gamma must not vanish");
    BeGEResult res;
    if (lambda.zero) {
        res.summand2 = res.summand3 = PowerLogTerm::null();
        return res;
    }
    const ExtRational wv = u / (v - u);
    const PowerLogTerm Gamma = prefix_sum(gamma);
    const PowerLogTerm inv_gamma = pow(Gamma, -one);

    const PowerLogTerm ku_lambda = PowerLogTerm(u) * lambda;
    res.summand2 = ku_lambda * pow(inv_gamma * prefix_sum(ku_lambda), wv);
    res.bege2 = powerlog_series_converges(res.summand2);

    try {
        const PowerLogTerm tail = tail_sum(lambda);
        res.summand3 = lambda * pow(tail, wv) * pow(running_max(PowerLogTerm(v) * inv_gamma), wv);
        res.bege3 = powerlog_series_converges(res.summand3);
    } catch (const InfiniteQuantity&) {
        res.tailInfinite = true;
        res.bege3 = SeriesVerdict::Diverges;
    }
    res.inequalityHolds = res.bege2 == SeriesVerdict::Converges && res.bege3 == SeriesVerdict::Converges;
    return res;
}

namespace {

// A function on (0, inf) by its two ends: `z` in the variable x = 1/t as t -> 0, `i` as t -> inf.
struct Ends {
    PowerLogTerm z, i;
};

const ExtRational kTwo(2);

PowerLogTerm measure_shift(const PowerLogTerm& t) {
    if (t.zero) return t;
    return PowerLogTerm(t.a - kTwo, t.c, t.e);
}

PowerLogTerm constant_if(const PowerLogTerm& t) { return t.zero ? PowerLogTerm::null() : PowerLogTerm::one(); }

Ends from_weight(const PiecewiseWeight& w) {
    Ends f{w.nearZero, w.nearInfinity};
    if (!f.z.zero) f.z.a = -f.z.a;
    return f;
}

Ends mul(const Ends& x, const Ends& y) { return {x.z * y.z, x.i * y.i}; }
Ends powe(const Ends& x, const ExtRational& r) { return {pow(x.z, r), pow(x.i, r)}; }
Ends add(const Ends& x, const Ends& y) { return {dominant(x.z, y.z), dominant(x.i, y.i)}; }

// int_0^t f
Ends integral_from_zero(const Ends& f) {
    return {tail_sum(measure_shift(f.z)), dominant(constant_if(f.z), prefix_sum(f.i))};
}

// int_t^inf f
Ends integral_to_infinity(const Ends& f) {
    return {dominant(constant_if(f.i), prefix_sum(measure_shift(f.z))), tail_sum(f.i)};
}

// sup_{y >= t} f(y)
Ends sup_above(const Ends& f) {
    PowerLogTerm atinf = sup_envelope(f.i);
    return {dominant(constant_if(f.i), running_max(f.z)), atinf};
}

bool integrable(const Ends& f) {
    return powerlog_series_converges(measure_shift(f.z)) == SeriesVerdict::Converges &&
           powerlog_series_converges(f.i) == SeriesVerdict::Converges;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("weights violate the hypothesis: ") + what);
}

}  // namespace

GPResult gp_criterion(const PiecewiseWeight& uw, const PiecewiseWeight& vw, const PiecewiseWeight& ww,
                      const ExtRational& R, const ExtRational& Q) {
    const ExtRational zero(0), one(1);
    if (R.is_inf() || Q.is_inf() || !(Q > zero) || R < one) throw std::invalid_argument("requires 1 <= R < inf, 0 < Q < inf");
    const Ends u = from_weight(uw), v = from_weight(vw), w = from_weight(ww);
    GPResult res;
    res.form = R < Q ? GPForm::Integral : GPForm::Supremum;

    Ends U, V, T;
    try {
        U = integral_from_zero(u);
        V = integral_from_zero(v);
    } catch (const InfiniteQuantity&) {
        require(false, "U and V finite");
    }
    require(!u.z.zero && !u.i.zero && !v.z.zero && !v.i.zero, "u and v positive");
    require(!integrable(u), "int u = inf");
    require(powerlog_series_converges(measure_shift(v.z * pow(U.z, -Q))) == SeriesVerdict::Diverges,
            "int_0^1 v / U^Q = inf");
    require(powerlog_series_converges(v.i) == SeriesVerdict::Diverges, "int_1^inf v = inf");
    try {
        T = integral_to_infinity(mul(powe(U, -Q), v));
    } catch (const InfiniteQuantity&) {
        require(false, "int_t^inf U^-Q v < inf");
    }
    require(!(T.z.zero || T.i.zero), "int_t^inf U^-Q v > 0");
    const Ends D = add(V, mul(powe(U, Q), T));

    Ends W;
    try {
        W = integral_from_zero(w);
    } catch (const InfiniteQuantity&) {
        res.infiniteFactor = true;
    }
    try {
        if (!res.infiniteFactor && res.form == GPForm::Integral) {
            const ExtRational P = Q * R / (Q - R);
            const Ends S = sup_above(mul(powe(U, -P), powe(W, P / R)));
            Ends g = mul(powe(U, P), S);
            g = mul(g, powe(D, -(P / Q + kTwo)));
            g = mul(g, mul(V, T));
            g = mul(g, mul(powe(U, Q - one), u));
            res.atZero = measure_shift(g.z);
            res.atInfinity = g.i;
            res.condition = integrable(g) ? SeriesVerdict::Converges : SeriesVerdict::Diverges;
        } else if (!res.infiniteFactor) {
            const Ends E = mul(powe(W, one / R), powe(D, -(one / Q)));
            res.atZero = E.z;
            res.atInfinity = E.i;
            const bool bounded = growth_sign(E.z) <= 0 && growth_sign(E.i) <= 0;
            res.condition = bounded ? SeriesVerdict::Converges : SeriesVerdict::Diverges;
        }
    } catch (const InfiniteQuantity&) {
        res.infiniteFactor = true;
    }
    if (res.infiniteFactor) res.condition = SeriesVerdict::Diverges;
    res.inequalityHolds = res.condition == SeriesVerdict::Converges;
    return res;
}

WitnessFamily family_of(WitnessKind k) {
    return k == WitnessKind::GMLipToLorentzZygmund ? WitnessFamily::GMLogPower : WitnessFamily::LacunaryLogPower;
}

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::LacunaryBesovToLip: return "lacunary-besov-lip";
        case WitnessKind::LacunaryLipToBesov: return "lacunary-lip-besov";
        case WitnessKind::GMLipToLorentzZygmund: return "gm-lip-lz";
    }
    return "";
}

WitnessKind parse_witness_kind(const std::string& s) {
    for (auto k : {WitnessKind::LacunaryBesovToLip, WitnessKind::LacunaryLipToBesov, WitnessKind::GMLipToLorentzZygmund})
        if (to_string(k) == s) return k;
    throw ParseError("unknown witness family: " + s);
}

std::pair<double, double> witness_interval(const WitnessSpec& ws) {
    if (!(ws.alpha > 0.0)) throw WitnessError("alpha must be positive");
    if (!(ws.q > 0.0) || std::isinf(ws.q)) throw WitnessError("requires 0 < q < inf");
    if (!(ws.b > 1.0 / ws.q)) throw WitnessError("requires b > 1/q");
    const double base = -ws.b + 1.0 / ws.q;
    switch (ws.kind) {
        case WitnessKind::LacunaryBesovToLip:
            if (!(ws.epsilon > 0.0)) throw WitnessError("requires epsilon > 0");
            if (std::min({2.0, ws.p, ws.q}) != 2.0) throw WitnessError("requires min{2,p,q} = 2");
            return {base + 0.5 - ws.epsilon, base + 0.5};
        case WitnessKind::LacunaryLipToBesov:
            if (!(ws.epsilon > 0.0)) throw WitnessError("requires epsilon > 0");
            if (std::max({2.0, ws.p, ws.q}) != 2.0) throw WitnessError("requires max{2,p,q} = 2");
            return {base + 0.5, std::min(0.5, base + 0.5 + ws.epsilon)};
        case WitnessKind::GMLipToLorentzZygmund: {
            if (!(ws.p > 1.0) || std::isinf(ws.p)) throw WitnessError("requires 1 < p < inf");
            if (!(ws.alpha < 1.0 / ws.p)) throw WitnessError("requires alpha < 1/p");
            if (std::abs(ws.alpha - 1.0 / ws.p + 1.0 / ws.r) > 1e-12) throw WitnessError("requires alpha - 1/p = -1/r");
            if (!(ws.q < ws.p)) throw WitnessError("requires q < p");
            if (!(ws.xi > 1.0 / ws.p)) throw WitnessError("requires xi > 1/p");
            return {base + 1.0 / ws.p, base + ws.xi};
        }
    }
    throw WitnessError("unknown witness");
}

void check_witness(const WitnessSpec& ws) {
    auto [lo, hi] = witness_interval(ws);
    if (!(ws.beta > lo && ws.beta < hi)) {
        std::ostringstream os;
        os << "exponent " << ws.beta << " outside (" << lo << ", " << hi << ")";
        throw WitnessError(os.str());
    }
    for (std::size_t n : ws.truncations)
        if (n < 3) throw WitnessError("truncations must be at least 3");
}

namespace {

WitnessObject build_witness(const WitnessSpec& ws, std::size_t n) {
    if (family_of(ws.kind) == WitnessFamily::LacunaryLogPower) {
        LacunarySpec spec;
        spec.decay = ws.alpha;
        spec.coeffs.resize(n - 2);
        for (std::size_t j = 3; j <= n; ++j) spec.coeffs[j - 3] = ws.scale * std::pow(1.0 + j, -ws.beta);
        return spec;
    }
    std::vector<double> a(n);
    for (std::size_t k = 1; k <= n; ++k) {
        double kk = static_cast<double>(k);
        a[k - 1] = ws.scale * std::pow(kk, -ws.alpha - 1.0 + 1.0 / ws.p) * std::pow(1.0 + std::log(kk), -ws.beta);
    }
    return make_gm_sequence(std::move(a), GMFlavor::Cosine);
}

}  // namespace

std::vector<WitnessObject> make_witness(const WitnessSpec& ws) {
    check_witness(ws);
    std::vector<WitnessObject> out;
    out.reserve(ws.truncations.size());
    for (std::size_t n : ws.truncations) out.push_back(build_witness(ws, n));
    return out;
}

std::string to_string(RouteKind k) {
    switch (k) {
        case RouteKind::LacunaryBesov: return "lacunary-besov";
        case RouteKind::LacunaryLipschitz: return "lacunary-lipschitz";
        case RouteKind::GMLipschitz: return "gm-lipschitz";
        case RouteKind::GMLorentzZygmund: return "gm-lorentz-zygmund";
        case RouteKind::GMBesov: return "gm-besov";
    }
    return "";
}

bool route_applies(const NormRoute& route, WitnessFamily fam) {
    const bool lac = route.kind == RouteKind::LacunaryBesov || route.kind == RouteKind::LacunaryLipschitz;
    return lac == (fam == WitnessFamily::LacunaryLogPower);
}

double evaluate_route(const NormRoute& route, const WitnessObject& obj) {
    switch (route.kind) {
        case RouteKind::LacunaryBesov:
            return lacunary_besov_norm(std::get<LacunarySpec>(obj), route.s, route.b, route.q).value;
        case RouteKind::LacunaryLipschitz:
            return lacunary_lipschitz_norm(std::get<LacunarySpec>(obj), route.s, route.b, route.q).value;
        case RouteKind::GMLipschitz:
            return gm_lipschitz_norm(std::get<GMSequence>(obj), route.s, route.b, route.p, route.q).value;
        case RouteKind::GMLorentzZygmund:
            return gm_lorentz_zygmund_norm(std::get<GMSequence>(obj), route.r, route.q, route.b).value;
        case RouteKind::GMBesov:
            return gm_besov_norm(std::get<GMSequence>(obj), route.s, route.b, route.p, route.q).value;
    }
    return 0.0;
}

std::pair<NormRoute, NormRoute> default_routes(const WitnessSpec& ws) {
    NormRoute lip{RouteKind::LacunaryLipschitz, ws.alpha, ws.b, ws.p, ws.q, 2.0};
    NormRoute bes{RouteKind::LacunaryBesov, ws.alpha, -ws.b + 0.5, ws.p, ws.q, 2.0};
    switch (ws.kind) {
        case WitnessKind::LacunaryBesovToLip:
            bes.b -= ws.epsilon;
            return {bes, lip};
        case WitnessKind::LacunaryLipToBesov:
            bes.b += ws.epsilon;
            return {lip, bes};
        case WitnessKind::GMLipToLorentzZygmund:
            return {NormRoute{RouteKind::GMLipschitz, ws.alpha, ws.b, ws.p, ws.q, ws.r},
                    NormRoute{RouteKind::GMLorentzZygmund, 0.0, -ws.b + ws.xi, ws.p, ws.q, ws.r}};
    }
    return {bes, lip};
}

DivergenceTable demonstrate_divergence(const WitnessSpec& ws, const NormRoute& src, const NormRoute& dst,
                                       const DivergenceThresholds& th) {
    const auto fam = family_of(ws.kind);
    if (!route_applies(src, fam) || !route_applies(dst, fam))
        throw std::invalid_argument("norm route does not apply to the witness family");
    check_witness(ws);
    DivergenceTable t;
    t.rows.resize(ws.truncations.size());
    parallel_for(t.rows.size(), [&](std::size_t i) {
        const WitnessObject obj = build_witness(ws, ws.truncations[i]);
        DivergenceRow& row = t.rows[i];
        row.truncation = ws.truncations[i];
        row.src = evaluate_route(src, obj);
        row.dst = evaluate_route(dst, obj);
        row.ratio = row.src > 0.0 ? row.dst / row.src : 0.0;
    });
    const std::size_t n = t.rows.size();
    if (n < 2 || t.rows[n - 1].dst == 0.0 || t.rows[n - 2].src == 0.0 || t.rows[n - 2].dst == 0.0) {
        t.vacuous = true;
        t.verdict = "vacuous";
        return t;
    }
    t.srcGrowth = t.rows[n - 1].src / t.rows[n - 2].src - 1.0;
    t.dstGrowth = t.rows[n - 1].dst / t.rows[n - 2].dst - 1.0;
    t.patternHeld = std::abs(t.srcGrowth) < th.srcMaxGrowth && t.dstGrowth > th.dstMinGrowth;
    std::ostringstream os;
    os << (t.patternHeld ? "pattern held" : "pattern not observed") << ": src growth " << t.srcGrowth
       << ", dst growth " << t.dstGrowth;
    t.verdict = os.str();
    return t;
}

DivergenceTable demonstrate_divergence(const WitnessSpec& ws, const DivergenceThresholds& th) {
    auto [src, dst] = default_routes(ws);
    return demonstrate_divergence(ws, src, dst, th);
}

std::string divergence_csv(const DivergenceTable& t) {
    std::ostringstream os;
    os.precision(12);
    os << "truncation,src,dst,ratio\n";
    for (const auto& r : t.rows) os << r.truncation << "," << r.src << "," << r.dst << "," << r.ratio << "\n";
    return os.str();
}

}  // namespace lipspace
