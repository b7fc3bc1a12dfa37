#include "lipspace/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lipspace/dyadic.hpp"
#include "lipspace/engine.hpp"
#include "lipspace/haar.hpp"
#include "lipspace/moduli.hpp"
#include "lipspace/parallel.hpp"
#include "lipspace/rearrange.hpp"
#include "lipspace/sharpness.hpp"

namespace lipspace {

bool CriterionResult::pass() const {
    if (seconds > budget) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool SuiteReport::pass() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass(); });
}

namespace {

using Clock = std::chrono::steady_clock;

Check at_most(std::string name, double measured, double bound, std::string detail = {}) {
    return Check{std::move(name), measured <= bound, measured, bound, std::move(detail)};
}

Check at_least(std::string name, double measured, double bound, std::string detail = {}) {
    return Check{std::move(name), measured >= bound, measured, bound, std::move(detail)};
}

Check expect(std::string name, bool ok, std::string detail = {}) {
    return Check{std::move(name), ok, ok ? 1.0 : 0.0, 1.0, std::move(detail)};
}

struct Spread {
    double lo = kInf;
    double hi = 0.0;
    void add(double x) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    double factor() const { return hi / lo; }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

template <typename Body>
CriterionResult timed(int id, std::string title, double budget, Body body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.budget = budget;
    auto t0 = Clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

void mark_vacuous(CriterionResult& r) {
    r.vacuous = true;
    r.warning = "empty corpus: vacuous pass";
}

SpaceParams lip(ExtRational a, ExtRational p, ExtRational q, ExtRational b) { return SpaceParams::lipschitz(a, p, q, b); }

std::vector<PeriodicSignal> corpus_signals(const Corpus& c, std::size_t N) {
    std::vector<PeriodicSignal> out;
    for (const auto& s : c.lacunary) out.push_back(realize_signal(truncate(s, log2_exact(N) - 2), N));
    for (const auto& g : c.gm) {
        GMSequence cut = g;
        if (cut.a.size() >= N / 2) cut.a.resize(N / 2 - 1);
        out.push_back(realize_signal(cut, N));
    }
    for (const auto& b : c.bandLimited) out.push_back(b.realize(N));
    return out;
}

}  // namespace

CriterionResult criterion_coincidence(const Corpus& c) {
    return timed(1, "coincidence Lip(alpha,-b)_{2,2} = B(alpha,-b+1/2)_{2,2} on lacunary series", 1.0, [&](CriterionResult& r) {
        if (c.lacunary.empty()) return mark_vacuous(r);
        for (double alpha : {0.5, 1.0, 2.0}) {
            for (double b : {1.0, 2.0}) {
                Spread at8, at12;
                for (const auto& spec : c.lacunary) {
                    for (int J : {8, 12}) {
                        LacunarySpec s = truncate(spec, J);
                        double ratio = lacunary_lipschitz_norm(s, alpha, b, 2.0).value /
                                       lacunary_besov_norm(s, alpha, -b + 0.5, 2.0).value;
                        (J == 8 ? at8 : at12).add(ratio);
                    }
                }
                std::string tag = "alpha=" + fmt(alpha) + ",b=" + fmt(b);
                r.checks.push_back(at_most("spread J=12 " + tag, at12.factor(), 4.0,
                                           "[" + fmt(at12.lo) + ", " + fmt(at12.hi) + "]"));
                r.checks.push_back(at_most("spread J=8 " + tag, at8.factor(), 4.0));
                double drift = std::max(std::abs(at12.lo / at8.lo - 1.0), std::abs(at12.hi / at8.hi - 1.0));
                r.checks.push_back(at_most("endpoint drift " + tag, drift, 0.10));
            }
        }
    });
}

CriterionResult criterion_route_equivalence(const Corpus& c) {
    return timed(2, "Lipschitz routes agree: truncated square function, modulus, Fourier means", 30.0, [&](CriterionResult& r) {
        if (c.lacunary.empty()) return mark_vacuous(r);
        struct P { ExtRational a, p, q, b; };
        const std::vector<P> params = {{ExtRational(1, 2), 2, 2, 1}, {ExtRational(1, 4), 3, 2, 1}, {ExtRational(3, 4), 2, 4, 1}};
        const std::size_t specs = std::min<std::size_t>(10, c.lacunary.size());
        const std::size_t Ns[] = {std::size_t{1} << 12, std::size_t{1} << 13};
        // ratios[param][spec][N] = {square/modulus, square/means, modulus/means}
        std::vector<std::array<double, 3>> ratios(params.size() * specs * 2);
        DyadicPartition parts[2] = {make_partition(Ns[0], PartitionKind::Sharp), make_partition(Ns[1], PartitionKind::Sharp)};
        parallel_for(ratios.size(), [&](std::size_t idx) {
            const std::size_t k = idx % 2, s = (idx / 2) % specs, pi = idx / (2 * specs);
            const P& pp = params[pi];
            const SpaceParams sp = lip(pp.a, pp.p, pp.q, pp.b);
            PeriodicSignal f = realize_signal(truncate(c.lacunary[s], 10), Ns[k]);
            double sq = lipschitz_norm_truncated_square(f, parts[k], sp).value;
            double mo = lipschitz_norm_modulus(f, sp).value;
            double me = fourier_means_lip_norm(f, pp.a.to_double(), pp.b.to_double(), pp.p.to_double(), pp.q.to_double()).value;
            ratios[idx] = {sq / mo, sq / me, mo / me};
        });
        const char* names[3] = {"square/modulus", "square/means", "modulus/means"};
        for (std::size_t pi = 0; pi < params.size(); ++pi) {
            const P& pp = params[pi];
            std::string tag = to_string(lip(pp.a, pp.p, pp.q, pp.b));
            for (int m = 0; m < 3; ++m) {
                double worst = 0.0, drift = 0.0;
                for (std::size_t s = 0; s < specs; ++s) {
                    const auto& lo = ratios[(pi * specs + s) * 2];
                    const auto& hi = ratios[(pi * specs + s) * 2 + 1];
                    worst = std::max(worst, std::max(lo[m], 1.0 / lo[m]));
                    drift = std::max(drift, std::abs(hi[m] / lo[m] - 1.0));
                }
                r.checks.push_back(at_most(std::string(names[m]) + " factor " + tag, worst, 10.0));
                r.checks.push_back(at_most(std::string(names[m]) + " N-doubling drift " + tag, drift, 0.05));
            }
        }
    });
}

CriterionResult criterion_engine_table() {
    return timed(3, "embedding decision table", 0.1, [&](CriterionResult& r) {
        const Domain T = Domain::Torus, R = Domain::Euclidean;
        struct Case {
            std::string name;
            SpaceParams src, dst;
            Verdict want;
            std::string rule;
            bool coincidence = false;
        };
        const ExtRational h(1, 2);
        const std::vector<Case> cases = {
            {"classical Lip, alpha = 1+d/p", SpaceParams::lipschitz(2, 3, 2, 1, 3, R), SpaceParams::simple(SpaceKind::ClassicalLip, 3, R),
             Verdict::DoesNotEmbed, "lip-into-classical-lip"},
            {"classical Lip, alpha > 1+d/p", SpaceParams::lipschitz(ExtRational(5, 2), 3, 2, 1, 3, R),
             SpaceParams::simple(SpaceKind::ClassicalLip, 3, R), Verdict::Embeds, "lip-into-classical-lip"},
            {"BV, alpha = 3/2", SpaceParams::lipschitz(ExtRational(3, 2), 1, 2, 1, 2, R), SpaceParams::simple(SpaceKind::BV, 2, R),
             Verdict::Embeds, "lip-into-bv"},
            {"BV, alpha = 1", SpaceParams::lipschitz(1, 1, 2, 1, 1, T), SpaceParams::simple(SpaceKind::BV, 1, T),
             Verdict::DoesNotEmbed, "lip-into-bv"},
            {"Linf, alpha = d/p", SpaceParams::lipschitz(h, 2, 2, 1), SpaceParams::lebesgue(ExtRational::infinity()),
             Verdict::DoesNotEmbed, "lip-into-linf"},
            {"Linf, alpha > d/p", SpaceParams::lipschitz(ExtRational(3, 4), 2, 2, 1), SpaceParams::lebesgue(ExtRational::infinity()),
             Verdict::Embeds, "lip-into-linf"},
            {"Lebesgue, p <= r0 < r", SpaceParams::lipschitz(ExtRational(1, 4), 2, 2, 1), SpaceParams::lebesgue(3),
             Verdict::Embeds, "lip-into-lebesgue"},
            {"Lebesgue, r0 = r", SpaceParams::lipschitz(ExtRational(1, 4), 2, 2, 1), SpaceParams::lebesgue(4),
             Verdict::DoesNotEmbed, "lip-into-lebesgue"},
            {"Lorentz-Zygmund, xi = 1/max{p,q}", SpaceParams::lipschitz(ExtRational(1, 4), 2, 2, 1), SpaceParams::lorentz_zygmund(4, 2, -h),
             Verdict::Embeds, "lip-into-lorentz-zygmund"},
            {"Lorentz-Zygmund, xi above", SpaceParams::lipschitz(ExtRational(1, 4), 2, 2, 1), SpaceParams::lorentz_zygmund(4, 2, ExtRational(-1, 4)),
             Verdict::DoesNotEmbed, "lip-into-lorentz-zygmund"},
            {"coincidence p = q = 2", SpaceParams::lipschitz(h, 2, 2, 1, 1, R), SpaceParams::besov(h, 2, 2, -h, 1, R),
             Verdict::Embeds, "lip-besov-coincidence", true},
            {"coincidence p = q = 3", SpaceParams::lipschitz(h, 3, 3, 1, 1, R),
             SpaceParams::besov(h, 3, 3, ExtRational(-2, 3), 1, R), Verdict::DoesNotEmbed, "lip-besov-coincidence", true},
        };
        for (const auto& cs : cases) {
            EmbeddingDecision d = cs.coincidence ? decide_coincidence(cs.src, cs.dst) : decide_embedding(cs.src, cs.dst);
            bool ok = d.verdict == cs.want && d.ruleId == cs.rule && !d.conflict;
            r.checks.push_back(expect(cs.name, ok, to_string(d.verdict) + " via " + d.ruleId));
        }
    });
}

CriterionResult criterion_hardy() {
    return timed(4, "Hardy criteria on the optimality weights", 0.1, [&](CriterionResult& r) {
        {
            const ExtRational b(1), q(2), rr(3), p(4);
            PowerLogTerm lambda(-1, -b * q);
            PowerLogTerm gamma(rr / p - ExtRational(1), (-b + ExtRational(1) / q) * rr);
            BeGEResult res = bege_criterion(lambda, gamma, q / p, rr / p);
            r.checks.push_back(expect("sequence criterion: first condition converges", res.bege2 == SeriesVerdict::Converges,
                                      res.summand2.str()));
            r.checks.push_back(expect("sequence criterion: second condition diverges", res.bege3 == SeriesVerdict::Diverges,
                                      res.summand3.str()));
            r.checks.push_back(expect("sequence criterion: summand n^-1 L^-1", res.summand3 == PowerLogTerm(-1, -1)));
            r.checks.push_back(expect("sequence criterion: inequality fails", !res.inequalityHolds));
        }
        {
            // d = 1, alpha = 1/2, p = 2 < r = 3 < q = 4, b = 1
            const ExtRational h(1, 2);
            PiecewiseWeight u{PowerLogTerm(0), PowerLogTerm(1)};
            PiecewiseWeight v{PowerLogTerm(1), PowerLogTerm(3, -4)};
            PiecewiseWeight w{PowerLogTerm::null(), PowerLogTerm(2, ExtRational(-9, 4))};
            GPResult res = gp_criterion(u, v, w, ExtRational(3, 2), 2);
            r.checks.push_back(expect("integral criterion: integrand t^-1 L^-1", res.atInfinity == PowerLogTerm(-1, -1),
                                      res.atInfinity.str()));
            r.checks.push_back(expect("integral criterion: fails", res.form == GPForm::Integral && !res.inequalityHolds));
        }
        {
            // d = 1, alpha = 1/4, p = 2, r = r0 = 4, q = 2, b = 1
            PiecewiseWeight u{PowerLogTerm(0), PowerLogTerm(ExtRational(1, 2))};
            PiecewiseWeight v{PowerLogTerm(0), PowerLogTerm(ExtRational(1, 2), -2)};
            PiecewiseWeight w{PowerLogTerm(2), PowerLogTerm(2)};
            GPResult res = gp_criterion(u, v, w, 2, 1);
            r.checks.push_back(expect("supremum criterion: envelope L^((b-1/q)p)", res.atInfinity == PowerLogTerm(0, 1),
                                      res.atInfinity.str()));
            r.checks.push_back(expect("supremum criterion: fails", res.form == GPForm::Supremum && !res.inequalityHolds));
        }
    });
}

WitnessSpec lacunary_witness_spec() {
    WitnessSpec ws;
    ws.kind = WitnessKind::LacunaryBesovToLip;
    ws.alpha = 0.5;
    ws.p = 2.0;
    ws.q = 4.0;
    ws.b = 1.0;
    ws.epsilon = 0.4;
    ws.beta = -0.45;
    for (int k = 10; k <= 14; ++k) ws.truncations.push_back(std::size_t{1} << k);
    return ws;
}

WitnessSpec gm_witness_spec() {
    WitnessSpec ws;
    ws.kind = WitnessKind::GMLipToLorentzZygmund;
    ws.alpha = 1.0 / 6.0;
    ws.p = 3.0;
    ws.q = 2.0;
    ws.b = 1.0;
    ws.r = 6.0;
    ws.xi = 2.75;
    ws.beta = 0.25;
    for (int k = 10; k <= 14; ++k) ws.truncations.push_back(std::size_t{1} << k);
    return ws;
}

CriterionResult criterion_witness() {
    return timed(5, "witness divergence tables", 10.0, [&](CriterionResult& r) {
        for (const WitnessSpec& ws : {lacunary_witness_spec(), gm_witness_spec()}) {
            DivergenceTable t = demonstrate_divergence(ws);
            std::string tag = to_string(ws.kind);
            r.checks.push_back(at_most(tag + " source growth", std::abs(t.srcGrowth), 0.02));
            r.checks.push_back(at_least(tag + " target growth", t.dstGrowth, 0.10));
        }
    });
}

CriterionResult criterion_modulus(const Corpus& c) {
    return timed(6, "modulus of smoothness properties", 60.0, [&](CriterionResult& r) {
        if (c.empty()) return mark_vacuous(r);
        const std::size_t N = std::size_t{1} << 12;
        const std::vector<PeriodicSignal> sigs = corpus_signals(c, N);
        const double alphas[] = {0.5, 1.0, 1.5};
        const double ps[] = {1.5, 2.0, 4.0};
        const int M = default_scales(N);
        struct Out {
            double mono = 0.0, quasi = 0.0, homog = 0.0, marchaud = 0.0;
        };
        std::vector<Out> outs(sigs.size() * 9);
        parallel_for(outs.size(), [&](std::size_t idx) {
            const PeriodicSignal& f = sigs[idx / 9];
            const double a = alphas[idx % 3], p = ps[(idx / 3) % 3];
            ModulusCurve cu = modulus_curve(f, a, p, M);
            Out o;
            for (std::size_t n = 0; n + 1 < cu.values.size(); ++n)
                o.mono = std::max(o.mono, (cu.values[n + 1] - cu.values[n]) / cu.values[0]);
            for (std::size_t n = 0; n < cu.values.size(); ++n)
                for (std::size_t m = n + 1; m < cu.values.size(); ++m) {
                    double big = cu.values[n] / std::pow(cu.tGrid[n], a);
                    double small = cu.values[m] / std::pow(cu.tGrid[m], a);
                    if (small > 0.0) o.quasi = std::max(o.quasi, big / small);
                }
            const cplx lambda(-2.5, 1.0);
            std::vector<cplx> scaled = f.samples;
            for (auto& z : scaled) z *= lambda;
            double w1 = modulus(f, a, 0.3, p), w2 = modulus(make_signal(scaled), a, 0.3, p);
            o.homog = std::abs(w2 / (std::abs(lambda) * w1) - 1.0);
            o.marchaud = marchaud_check(f, a, 1.0, p, M).maxRatio;
            outs[idx] = o;
        });
        Out worst;
        for (const auto& o : outs) {
            worst.mono = std::max(worst.mono, o.mono);
            worst.quasi = std::max(worst.quasi, o.quasi);
            worst.homog = std::max(worst.homog, o.homog);
            worst.marchaud = std::max(worst.marchaud, o.marchaud);
        }
        double constant = 0.0;
        std::vector<cplx> ones(N, cplx(3.0, -1.0));
        for (double a : alphas) constant = std::max(constant, modulus(make_signal(ones), a, M_PI, 2.0) / std::abs(ones[0]));
        r.checks.push_back(at_most("nondecreasing (relative violation)", worst.mono, 1e-9));
        r.checks.push_back(at_most("vanishes on constants", constant, 1e-12));
        r.checks.push_back(at_most("homogeneity", worst.homog, 1e-10));
        r.checks.push_back(at_most("omega/t^alpha quasi-decreasing", worst.quasi, 8.0));
        r.checks.push_back(at_most("Marchaud ratio", worst.marchaud, kMarchaudConstant));
    });
}

CriterionResult criterion_gm_closed_forms(const Corpus& c) {
    return timed(7, "GM closed forms against realized signals", 120.0, [&](CriterionResult& r) {
        if (c.gm.empty()) return mark_vacuous(r);
        const std::size_t N = std::size_t{1} << 12;
        struct G { ExtRational a, b, p, q; };
        const std::vector<G> grid = {{ExtRational(1, 2), 1, 2, 2}, {ExtRational(1, 4), 1, 2, 2}, {ExtRational(1, 2), 2, 2, 2},
                                     {ExtRational(1, 4), 1, 3, 2}, {ExtRational(1, 2), 1, 2, 4}, {ExtRational(3, 10), 1, ExtRational(3, 2), 2}};
        struct L { double r, q, b; };
        const std::vector<L> lz = {{2, 2, 0}, {4, 2, 1}, {3, 3, -0.5}, {4, 4, 0}};
        std::vector<double> lipRatio(c.gm.size() * grid.size()), lzRatio(c.gm.size() * lz.size());
        std::vector<PeriodicSignal> sigs(c.gm.size());
        std::vector<RearrangedProfile> profs(c.gm.size());
        parallel_for(c.gm.size(), [&](std::size_t i) {
            sigs[i] = realize_signal(c.gm[i], N);
            profs[i] = rearrangement(sigs[i]);
        });
        parallel_for(lipRatio.size(), [&](std::size_t idx) {
            const std::size_t i = idx / grid.size();
            const G& g = grid[idx % grid.size()];
            double closed = gm_lipschitz_norm(c.gm[i], g.a.to_double(), g.b.to_double(), g.p.to_double(), g.q.to_double()).value;
            double numeric = lipschitz_norm_modulus(sigs[i], lip(g.a, g.p, g.q, g.b)).value;
            lipRatio[idx] = closed / numeric;
        });
        parallel_for(lzRatio.size(), [&](std::size_t idx) {
            const std::size_t i = idx / lz.size();
            const L& l = lz[idx % lz.size()];
            lzRatio[idx] = gm_lorentz_zygmund_norm(c.gm[i], l.r, l.q, l.b).value / lorentz_zygmund_norm(profs[i], l.r, l.q, l.b);
        });
        Spread all;
        for (double x : lipRatio) all.add(x);
        r.checks.push_back(at_most("Lipschitz closed form / modulus route spread", all.factor(), 10.0,
                                   "[" + fmt(all.lo) + ", " + fmt(all.hi) + "]"));
        double worst = 0.0;
        for (double x : lzRatio) worst = std::max(worst, std::max(x, 1.0 / x));
        r.checks.push_back(at_most("Lorentz-Zygmund closed form / rearrangement factor", worst, 10.0));
    });
}

CriterionResult criterion_haar(const Corpus& c) {
    return timed(8, "Haar sequence norm against the modulus route", 60.0, [&](CriterionResult& r) {
        if (c.bandLimited.empty()) return mark_vacuous(r);
        const std::vector<double> alphas = {0.2, 0.3};
        const std::size_t nN = 5;
        std::vector<double> ratio(c.bandLimited.size() * alphas.size() * nN);
        parallel_for(ratio.size(), [&](std::size_t idx) {
            const std::size_t k = idx % nN, a = (idx / nN) % alphas.size(), s = idx / (nN * alphas.size());
            PeriodicSignal f = c.bandLimited[s].realize(std::size_t{1} << (8 + k));
            const ExtRational alpha(alphas[a] == 0.2 ? 1 : 3, 10);
            double h = lip_sequence_norm(haar_analyze(f), alphas[a], 1.0, 2.0, 2.0).value;
            double m = lipschitz_norm_modulus(f, lip(alpha, 2, 2, 1)).value;
            ratio[idx] = h / m;
        });
        Spread all;
        for (double x : ratio) all.add(x);
        r.checks.push_back(at_most("Haar / modulus spread over N = 2^8..2^12", all.factor(), 10.0,
                                   "[" + fmt(all.lo) + ", " + fmt(all.hi) + "]"));
        NormReport out = lip_sequence_norm(haar_analyze(c.bandLimited[0].realize(1024)), 0.8, 1.0, 2.0, 2.0);
        r.checks.push_back(expect("alpha = 0.8 flagged outside the regime", !out.equivalenceValid));
    });
}

namespace {

std::vector<SpaceParams> scan_grid() {
    const Domain R = Domain::Euclidean;
    const ExtRational h(1, 2), inf = ExtRational::infinity();
    std::vector<SpaceParams> g;
    for (ExtRational a : {ExtRational(1, 4), h, ExtRational(1)})
        for (ExtRational q : {ExtRational(2), inf}) g.push_back(SpaceParams::lipschitz(a, 2, q, 1));
    g.push_back(SpaceParams::lipschitz(h, 2, 2, 2));
    g.push_back(SpaceParams::lipschitz(h, 3, 2, 1));
    g.push_back(SpaceParams::lipschitz(1, 3, 2, 1));
    g.push_back(SpaceParams::lipschitz(1, 1, 2, 1));
    g.push_back(SpaceParams::lipschitz(ExtRational(3, 2), 1, 2, 1));
    for (ExtRational s : {ExtRational(1, 4), h, ExtRational(1)})
        for (ExtRational b : {-h, ExtRational(0)}) g.push_back(SpaceParams::besov(s, 2, 2, b));
    g.push_back(SpaceParams::besov(h, 3, 3, ExtRational(-2, 3)));
    g.push_back(SpaceParams::sobolev(h, 2));
    g.push_back(SpaceParams::sobolev(1, 2));
    for (int p : {1, 2, 3, 4, 6}) g.push_back(SpaceParams::lebesgue(p));
    g.push_back(SpaceParams::lebesgue(inf));
    g.push_back(SpaceParams::lorentz_zygmund(4, 2, -h));
    g.push_back(SpaceParams::lorentz_zygmund(4, 2, ExtRational(-1, 4)));
    g.push_back(SpaceParams::lorentz_zygmund(6, 2, 0));
    g.push_back(SpaceParams::lorentz_zygmund(4, 4, 0));
    g.push_back(SpaceParams::grand(4, 2, -1, 2));
    g.push_back(SpaceParams::grand(6, 2, -1, 3));
    g.push_back(SpaceParams::simple(SpaceKind::BV));
    g.push_back(SpaceParams::simple(SpaceKind::ClassicalLip));
    g.push_back(SpaceParams::simple(SpaceKind::BoundedContinuous));
    g.push_back(SpaceParams::lipschitz(h, 2, 2, 1, 1, R));
    g.push_back(SpaceParams::lipschitz(ExtRational(3, 4), 2, 2, 1, 1, R));
    g.push_back(SpaceParams::besov(h, 2, 2, -h, 1, R));
    g.push_back(SpaceParams::simple(SpaceKind::ClassicalLip, 1, R));
    g.push_back(SpaceParams::lebesgue(inf, 1, R));
    return g;
}

double rel_err(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(a[i]));
    }
    return den > 0.0 ? num / den : num;
}

}  // namespace

CriterionResult criterion_infrastructure(const Corpus& c) {
    return timed(9, "infrastructure exactness", 10.0, [&](CriterionResult& r) {
        std::vector<PeriodicSignal> sigs = corpus_signals(c, std::size_t{1} << 12);
        double fft = 0.0, haar = 0.0, parseval = 0.0, rearr = 0.0;
        for (const auto& f : sigs) {
            fft = std::max(fft, rel_err(f.samples, fft_inverse(fft_forward(f.samples))));
            haar = std::max(haar, rel_err(f.samples, haar_synthesize(haar_analyze(f)).samples));
            double e = 0.0, s = 0.0;
            for (const auto& z : fft_forward(f.samples)) e += std::norm(z);
            for (const auto& z : f.samples) s += std::norm(z);
            s /= static_cast<double>(f.size());
            parseval = std::max(parseval, std::abs(e / s - 1.0));
            RearrangedProfile prof = rearrangement(f);
            for (double p : {1.0, 2.0, 3.5}) {
                double direct = lp_norm(f.samples, p) / std::pow(2.0 * M_PI, 1.0 / p);
                rearr = std::max(rearr, std::abs(profile_lp_norm(prof, p) / direct - 1.0));
            }
        }
        r.checks.push_back(at_most("FFT round trip", fft, 1e-12));
        r.checks.push_back(at_most("Haar round trip", haar, 1e-12));
        r.checks.push_back(at_most("Parseval", parseval, 1e-10));
        r.checks.push_back(at_most("rearrangement preserves L_p", rearr, 1e-9));
        const auto grid = scan_grid();
        const auto conflicts = consistency_scan(grid);
        r.checks.push_back(at_most("engine conflicts over " + std::to_string(grid.size()) + " spaces",
                                   static_cast<double>(conflicts.size()), 0.0,
                                   conflicts.empty() ? std::string() : conflicts.front().description));
    });
}

CriterionResult run_criterion(int id, const Corpus& c) {
    switch (id) {
        case 1: return criterion_coincidence(c);
        case 2: return criterion_route_equivalence(c);
        case 3: return criterion_engine_table();
        case 4: return criterion_hardy();
        case 5: return criterion_witness();
        case 6: return criterion_modulus(c);
        case 7: return criterion_gm_closed_forms(c);
        case 8: return criterion_haar(c);
        case 9: return criterion_infrastructure(c);
    }
    throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"equivalence", "modulus-properties", "hardy", "engine-table", "haar"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<int> suite_criteria(const std::string& name) {
    static const std::map<std::string, std::vector<int>> table = {
        {"equivalence", {1, 2, 7}}, {"modulus-properties", {6}}, {"hardy", {4, 5}}, {"engine-table", {3}}, {"haar", {8}}};
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    return it->second;
}

SuiteReport run_suite(const std::string& name, const Corpus& c) {
    SuiteReport rep;
    rep.suite = name;
    for (int id : suite_criteria(name)) rep.criteria.push_back(run_criterion(id, c));
    return rep;
}

std::string summary_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << fmt(r.seconds) << " s of "
       << fmt(r.budget) << " s";
    if (r.vacuous) os << ", " << r.warning;
    os << ")";
    return os.str();
}

}  // namespace lipspace
