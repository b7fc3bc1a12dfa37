#include "lipspace/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace lipspace {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Embeds: return "Embeds";
        case Verdict::DoesNotEmbed: return "DoesNotEmbed";
        case Verdict::OutsideTheory: return "OutsideTheory";
    }
    return "?";
}

namespace {

using R = ExtRational;

const R kZero(0);
const R kOne(1);
const R kTwo(2);

R min3(const R& a, const R& b, const R& c) { return min(a, min(b, c)); }
R max3(const R& a, const R& b, const R& c) { return max(a, max(b, c)); }

struct LipView {
    R alpha, b, p, q;
};

// Sobolev and BV enter rules that admit b >= 0 at q = inf.
std::optional<LipView> lip_view(const SpaceParams& s) {
    switch (s.kind) {
        case SpaceKind::Lipschitz: return LipView{s.smooth, s.logExp, s.p, s.q};
        case SpaceKind::Sobolev: return LipView{s.smooth, kZero, s.p, R::infinity()};
        case SpaceKind::BV: return LipView{kOne, kZero, kOne, R::infinity()};
        default: return std::nullopt;
    }
}

bool b_strict(const LipView& v) { return v.b > v.q.reciprocal(); }
bool b_relaxed(const LipView& v) { return v.q.is_inf() ? v.b >= kZero : v.b > v.q.reciprocal(); }

R threshold_p(int d) { return R(2 * d, d + 1); }

struct RuleEval {
    std::string id;
    std::string citation;
    bool iff = false;
    bool shape = false;
    std::vector<Hypothesis> hyps;
    Verdict outcome = Verdict::OutsideTheory;
    std::string condition;

    void need(const std::string& text, bool holds) { hyps.push_back({text, holds}); }
    bool holds() const {
        return shape && std::all_of(hyps.begin(), hyps.end(), [](const Hypothesis& h) { return h.holds; });
    }
    double held_fraction() const {
        if (hyps.empty()) return 1.0;
        double n = 0;
        for (const auto& h : hyps) n += h.holds ? 1 : 0;
        return n / static_cast<double>(hyps.size());
    }
    void decide(bool cond, const std::string& text) {
        condition = text + (cond ? ": true" : ": false");
        outcome = cond ? Verdict::Embeds : Verdict::DoesNotEmbed;
    }
    void upgrade(bool cond, const std::string& text) {
        condition = text + (cond ? ": true" : ": false");
        outcome = cond ? Verdict::Embeds : Verdict::OutsideTheory;
        need(text, cond);
    }
};

struct Pair {
    const SpaceParams& src;
    const SpaceParams& dst;
    int d;
    bool torus;
};

// Elementary Besov inclusions at fixed p: larger s, or equal s with larger log weight and smaller fine index.
bool besov_elementary(const R& s0, const R& xi0, const R& r0, const R& s1, const R& xi1, const R& r1) {
    if (s0 > s1) return true;
    return s0 == s1 && xi0 >= xi1 && r0 <= r1;
}

// Lorentz-Zygmund inclusions at fixed r: smaller fine index and larger log exponent.
bool lz_elementary(const R& u0, const R& beta0, const R& u1, const R& beta1) { return u0 <= u1 && beta0 >= beta1; }

void lip_basics(RuleEval& e, const LipView& v, bool strict) {
    e.need("alpha > 0", v.alpha > kZero);
    if (strict)
        e.need("b > 1/q", b_strict(v));
    else
        e.need("b > 1/q (b >= 0 if q = inf)", b_relaxed(v));
}

RuleEval rule_reflexive(const Pair& P) {
    RuleEval e{"reflexive", "identity embedding of a space into itself"};
    e.shape = P.src == P.dst;
    e.need("source equals target", P.src == P.dst);
    e.outcome = Verdict::Embeds;
    e.condition = "X = Y: true";
    return e;
}

RuleEval rule_fixed_integrability(const Pair& P) {
    RuleEval e{"lip-fixed-integrability",
               "Lip into Lip at equal p: smoothness first, then b - 1/q, then q", true};
    auto a = lip_view(P.src), c = lip_view(P.dst);
    e.shape = a && c && P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::Lipschitz;
    if (!e.shape) return e;
    e.need("p0 = p1", a->p == c->p);
    e.need("1 < p < inf", a->p > kOne && !a->p.is_inf());
    e.need("alpha0 > 0", a->alpha > kZero);
    e.need("alpha1 > 0", c->alpha > kZero);
    e.need("b0 > 1/q0", b_strict(*a));
    e.need("b1 > 1/q1", b_strict(*c));
    if (!e.holds()) return e;
    R g0 = a->b - a->q.reciprocal(), g1 = c->b - c->q.reciprocal();
    bool cond = a->alpha > c->alpha || (a->alpha == c->alpha && g1 > g0) ||
                (a->alpha == c->alpha && g1 == g0 && a->q <= c->q);
    e.decide(cond, "alpha0 > alpha1, or alpha0 = alpha1 with b1-1/q1 > b0-1/q0, or equality with q0 <= q1");
    return e;
}

// Lipschitz vs Besov with a fixed or shifted integrability. shifted=false: same p, the 2 enters min/max.
RuleEval rule_lip_besov_sharp(const Pair& P, bool shifted) {
    RuleEval e;
    e.iff = true;
    e.id = shifted ? "lip-besov-shifted-p" : "lip-besov-fixed-integrability";
    e.citation = shifted ? "Lip into Besov with shifted integrability: sharp log exponent"
                         : "Lip and Besov at equal p: sharp log exponent";
    bool besov_src = P.src.kind == SpaceKind::Besov && P.dst.kind == SpaceKind::Lipschitz;
    bool besov_dst = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::Besov;
    e.shape = besov_src || besov_dst;
    if (!e.shape) return e;
    const SpaceParams& B = besov_src ? P.src : P.dst;
    LipView L = *lip_view(besov_src ? P.dst : P.src);
    const R th = threshold_p(P.d);
    e.need("domain is R^d", !P.torus);
    lip_basics(e, L, true);
    e.need("2d/(d+1) < p < inf", L.p > th && !L.p.is_inf());
    if (shifted) {
        if (besov_src) {
            e.need("2d/(d+1) < p0 < p", B.p > th && B.p < L.p);
            e.need("s = alpha + d(1/p0 - 1/p)", B.smooth == L.alpha + R(P.d) * (B.p.reciprocal() - L.p.reciprocal()));
        } else {
            e.need("p < p1 < inf", B.p > L.p && !B.p.is_inf());
            e.need("s = alpha + d(1/p1 - 1/p)", B.smooth == L.alpha + R(P.d) * (B.p.reciprocal() - L.p.reciprocal()));
        }
    } else {
        e.need("Besov p equals Lipschitz p", B.p == L.p);
        e.need("s = alpha", B.smooth == L.alpha);
    }
    const R log_one_q = -L.b + L.q.reciprocal();
    bool fine_matches = B.q == L.q;
    bool log_matches = B.logExp == log_one_q;
    e.need("Besov fine index equals q, or Besov log exponent equals -b+1/q", fine_matches || log_matches);
    if (!e.holds()) return e;
    R lo = shifted ? min(L.p, L.q) : min3(kTwo, L.p, L.q);
    R hi = shifted ? max(L.p, L.q) : max3(kTwo, L.p, L.q);
    std::string lo_s = shifted ? "min{p,q}" : "min{2,p,q}";
    std::string hi_s = shifted ? "max{p,q}" : "max{2,p,q}";
    R xi = B.logExp + L.b;
    if (fine_matches) {
        if (besov_src)
            e.decide(xi >= lo.reciprocal(), "xi >= 1/" + lo_s + " with xi = " + xi.str());
        else
            e.decide(xi <= hi.reciprocal(), "xi <= 1/" + hi_s + " with xi = " + xi.str());
    } else {
        if (besov_src)
            e.decide(B.q <= lo, "r <= " + lo_s + " with r = " + B.q.str());
        else
            e.decide(B.q >= hi, "r >= " + hi_s + " with r = " + B.q.str());
    }
    return e;
}

RuleEval rule_lip_besov_sufficient(const Pair& P, bool shifted) {
    RuleEval e;
    e.id = shifted ? "lip-besov-shifted-p-sufficient" : "lip-besov-fixed-integrability-sufficient";
    e.citation = shifted ? "Lip into Besov with shifted integrability"
                         : "Lip and Besov at equal p";
    bool besov_src = P.src.kind == SpaceKind::Besov && P.dst.kind == SpaceKind::Lipschitz;
    bool besov_dst = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::Besov;
    e.shape = besov_src || besov_dst;
    if (!e.shape) return e;
    const SpaceParams& B = besov_src ? P.src : P.dst;
    LipView L = *lip_view(besov_src ? P.dst : P.src);
    lip_basics(e, L, true);
    R s_star = L.alpha;
    if (shifted) {
        if (besov_src)
            e.need("1 <= p0 < p < inf", B.p >= kOne && B.p < L.p && !L.p.is_inf());
        else
            e.need("1 < p < p1 <= inf", L.p > kOne && B.p > L.p);
        s_star = L.alpha + R(P.d) * (B.p.reciprocal() - L.p.reciprocal());
    } else {
        e.need("Besov p equals Lipschitz p", B.p == L.p);
        e.need("1 < p < inf", L.p > kOne && !L.p.is_inf());
    }
    if (!e.holds()) return e;
    R lo = shifted ? min(L.p, L.q) : min3(kTwo, L.p, L.q);
    R hi = shifted ? max(L.p, L.q) : max3(kTwo, L.p, L.q);
    R one_q = -L.b + L.q.reciprocal();
    bool ok;
    if (besov_src) {
        ok = besov_elementary(B.smooth, B.logExp, B.q, s_star, -L.b + lo.reciprocal(), L.q) ||
             besov_elementary(B.smooth, B.logExp, B.q, s_star, one_q, lo);
    } else {
        ok = besov_elementary(s_star, -L.b + hi.reciprocal(), L.q, B.smooth, B.logExp, B.q) ||
             besov_elementary(s_star, one_q, hi, B.smooth, B.logExp, B.q);
    }
    e.upgrade(ok, "Besov space reachable from the stated embedding by elementary Besov inclusions");
    return e;
}

RuleEval rule_sobolev_type(const Pair& P) {
    RuleEval e{"lip-sobolev-type", "Lip into Lip trading smoothness for integrability"};
    e.shape = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::Lipschitz;
    if (!e.shape) return e;
    LipView a = *lip_view(P.src), c = *lip_view(P.dst);
    e.need("1 < p0 < p1 < inf", a.p > kOne && a.p < c.p && !c.p.is_inf());
    e.need("0 < alpha1 < alpha0", kZero < c.alpha && c.alpha < a.alpha);
    e.need("alpha0 - d/p0 = alpha1 - d/p1",
           a.alpha - R(P.d) * a.p.reciprocal() == c.alpha - R(P.d) * c.p.reciprocal());
    e.need("q0 = q1", a.q == c.q);
    e.need("b > 1/q", b_strict(a));
    if (!e.holds()) return e;
    e.upgrade(c.b >= a.b, "b1 >= b0");
    return e;
}

RuleEval rule_limiting_p1(const Pair& P) {
    RuleEval e{"lip-limiting-p1", "Lip with p = 1 into limiting targets"};
    auto a = lip_view(P.src), c = lip_view(P.dst);
    e.shape = a && c && a->p == kOne && P.dst.kind != SpaceKind::BV;
    if (!e.shape) return e;
    e.need("1 < p < inf", c->p > kOne && !c->p.is_inf());
    e.need("q0 = q1", a->q == c->q);
    e.need("b > 1/q (b >= 0 if q = inf)", b_relaxed(*a));
    if (!e.holds()) return e;
    R d(P.d);
    bool first = kZero < c->alpha && c->alpha < a->alpha && a->alpha - d == c->alpha - d * c->p.reciprocal() &&
                 c->b >= a->b + c->p.reciprocal();
    bool second = P.d >= 2 && a->alpha.is_integer() && a->alpha >= kTwo && kZero < c->alpha &&
                  c->alpha <= a->alpha - kOne && a->alpha - d == c->alpha - d * c->p.reciprocal() && c->b >= a->b;
    e.upgrade(first || second,
              "alpha0 - d = alpha1 - d/p with target log exponent >= b + 1/p, or the integer-order variant");
    return e;
}

RuleEval rule_limiting_p1_sharp(const Pair& P) {
    RuleEval e{"lip-limiting-p1-sharp", "Lip with p = 1 on the torus: sharp limiting target",
               true};
    auto a = lip_view(P.src), c = lip_view(P.dst);
    e.shape = a && c && a->p == kOne && P.dst.kind != SpaceKind::BV;
    if (!e.shape) return e;
    e.need("domain is the torus, d = 1", P.torus && P.d == 1);
    e.need("source log exponent 0 and q = inf", a->b == kZero && a->q.is_inf());
    e.need("target q = inf", c->q.is_inf());
    e.need("1 < p < inf", c->p > kOne && !c->p.is_inf());
    e.need("0 < alpha1 < alpha0", kZero < c->alpha && c->alpha < a->alpha);
    e.need("alpha0 - 1 = alpha1 - 1/p", a->alpha - kOne == c->alpha - c->p.reciprocal());
    if (!e.holds()) return e;
    e.decide(c->b >= c->p.reciprocal(), "xi >= 1/p with xi = " + c->b.str());
    return e;
}

RuleEval rule_brezis_wainger(const Pair& P) {
    RuleEval e{"lip-brezis-wainger", "Lip at critical smoothness alpha = d/p into exponential-type targets"};
    auto a = lip_view(P.src), c = lip_view(P.dst);
    e.shape = a && c && c->p.is_inf();
    if (!e.shape) return e;
    e.need("q0 = q1", a->q == c->q);
    e.need("b > 1/q (b >= 0 if q = inf)", b_relaxed(*a));
    e.need("1 <= p < inf", a->p >= kOne && !a->p.is_inf());
    if (!e.holds()) return e;
    R d(P.d);
    bool first = a->p > kOne && c->alpha > kZero && a->alpha == c->alpha + d * a->p.reciprocal() &&
                 c->b >= a->b + kOne - a->p.reciprocal();
    bool second = a->p == kOne && c->alpha.is_integer() && c->alpha >= kOne && a->alpha == c->alpha + d &&
                  c->b >= a->b;
    e.upgrade(first || second,
              "alpha0 = alpha + d/p with target log exponent >= b + 1 - 1/p, or the integer-order variant");
    return e;
}

RuleEval rule_brezis_wainger_sharp(const Pair& P) {
    RuleEval e{"lip-brezis-wainger-sharp", "Lip at critical smoothness on the torus: sharp log exponent", true};
    auto a = lip_view(P.src), c = lip_view(P.dst);
    e.shape = a && c && c->p.is_inf();
    if (!e.shape) return e;
    e.need("domain is the torus, d = 1", P.torus && P.d == 1);
    e.need("1 < p < inf", a->p > kOne && !a->p.is_inf());
    e.need("alpha > 0", c->alpha > kZero);
    e.need("alpha0 = alpha + 1/p", a->alpha == c->alpha + a->p.reciprocal());
    e.need("q0 = q1", a->q == c->q);
    e.need("b > 1/q (b >= 0 if q = inf)", b_relaxed(*a));
    if (!e.holds()) return e;
    R xi = c->b - a->b;
    e.decide(xi >= kOne - a->p.reciprocal(), "xi >= 1 - 1/p with xi = " + xi.str());
    return e;
}

RuleEval rule_into_classical_lip(const Pair& P) {
    RuleEval e{"lip-into-classical-lip", "Lip into classical Lipschitz functions", true};
    e.shape = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::ClassicalLip;
    if (!e.shape) return e;
    LipView a = *lip_view(P.src);
    e.need("domain is R^d", !P.torus);
    e.need("1 < p < inf", a.p > kOne && !a.p.is_inf());
    lip_basics(e, a, true);
    if (!e.holds()) return e;
    e.decide(a.alpha > kOne + R(P.d) * a.p.reciprocal(), "alpha > 1 + d/p");
    return e;
}

RuleEval rule_into_bv(const Pair& P) {
    RuleEval e{"lip-into-bv", "Lip into bounded variation", true};
    e.shape = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::BV;
    if (!e.shape) return e;
    LipView a = *lip_view(P.src);
    e.need("p = 1", a.p == kOne);
    lip_basics(e, a, true);
    if (!e.holds()) return e;
    e.decide(a.alpha > kOne, "alpha > 1");
    return e;
}

RuleEval rule_into_linf(const Pair& P) {
    RuleEval e{"lip-into-linf", "Lip into bounded and continuous functions", true};
    bool linf = (P.dst.kind == SpaceKind::Lebesgue && P.dst.p.is_inf()) ||
                P.dst.kind == SpaceKind::BoundedContinuous;
    e.shape = P.src.kind == SpaceKind::Lipschitz && linf;
    if (!e.shape) return e;
    LipView a = *lip_view(P.src);
    e.need("1 < p < inf", a.p > kOne && !a.p.is_inf());
    lip_basics(e, a, true);
    if (!e.holds()) return e;
    e.decide(a.alpha > R(P.d) * a.p.reciprocal(), "alpha > d/p");
    return e;
}

RuleEval rule_into_lebesgue(const Pair& P) {
    RuleEval e{"lip-into-lebesgue", "Lip into Lebesgue targets: no smallest one", true};
    e.shape = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::Lebesgue && !P.dst.p.is_inf();
    if (!e.shape) return e;
    LipView a = *lip_view(P.src);
    R th = threshold_p(P.d), d(P.d);
    e.need("2d/(d+1) < p < inf", a.p > th && !a.p.is_inf());
    e.need("2d/(d+1) < r0 < inf", P.dst.p > th);
    e.need("0 < alpha < d/p", kZero < a.alpha && a.alpha < d * a.p.reciprocal());
    e.need("b > 1/q", b_strict(a));
    if (!e.holds()) return e;
    R r = d / (d * a.p.reciprocal() - a.alpha);
    e.decide(a.p <= P.dst.p && P.dst.p < r, "p <= r0 < r with r = " + r.str());
    return e;
}

R critical_r(const LipView& a, int d) { return R(d) / (R(d) * a.p.reciprocal() - a.alpha); }

RuleEval rule_into_lz_sharp(const Pair& P) {
    RuleEval e{"lip-into-lorentz-zygmund", "Lip into Lorentz-Zygmund: sharp log exponent",
               true};
    e.shape = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::LorentzZygmund;
    if (!e.shape) return e;
    LipView a = *lip_view(P.src);
    e.need("domain is the torus, d = 1", P.torus && P.d == 1);
    e.need("1 < p < inf", a.p > kOne && !a.p.is_inf());
    e.need("0 < alpha < 1/p", kZero < a.alpha && a.alpha < a.p.reciprocal());
    e.need("b > 1/q", b_strict(a));
    if (!e.holds()) return e;
    R r = critical_r(a, 1);
    e.need("target r satisfies alpha - 1/p = -1/r", P.dst.p == r);
    bool fine_matches = P.dst.q == a.q;
    bool log_matches = P.dst.logExp == -a.b + a.q.reciprocal();
    e.need("target fine index equals q, or target log exponent equals -b+1/q", fine_matches || log_matches);
    if (!e.holds()) return e;
    R mx = max(a.p, a.q);
    if (fine_matches) {
        R xi = P.dst.logExp + a.b;
        e.decide(xi <= mx.reciprocal(), "xi <= 1/max{p,q} with xi = " + xi.str());
    } else {
        e.decide(P.dst.q >= mx, "u >= max{p,q} with u = " + P.dst.q.str());
    }
    return e;
}

RuleEval rule_into_lz(const Pair& P) {
    RuleEval e{"lip-into-lorentz-zygmund-sufficient", "Lip into Lorentz-Zygmund: sufficient condition"};
    e.shape = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::LorentzZygmund;
    if (!e.shape) return e;
    LipView a = *lip_view(P.src);
    R d(P.d);
    e.need("1 < p < inf", a.p > kOne && !a.p.is_inf());
    e.need("0 < alpha < d/p", kZero < a.alpha && a.alpha < d * a.p.reciprocal());
    e.need("b > 1/q", b_strict(a));
    if (!e.holds()) return e;
    e.need("target r satisfies alpha - d/p = -d/r", P.dst.p == critical_r(a, P.d));
    if (!e.holds()) return e;
    R mx = max(a.p, a.q);
    bool ok = lz_elementary(a.q, -a.b + mx.reciprocal(), P.dst.q, P.dst.logExp) ||
              lz_elementary(mx, -a.b + a.q.reciprocal(), P.dst.q, P.dst.logExp);
    e.upgrade(ok, "target reachable from L_{r,q}(log L)_{-b+1/max{p,q}} or L_{r,max{p,q}}(log L)_{-b+1/q}");
    return e;
}

RuleEval rule_into_grand(const Pair& P) {
    RuleEval e{"lip-into-grand", "Lip into the grand Lorentz target"};
    e.shape = P.src.kind == SpaceKind::Lipschitz && P.dst.kind == SpaceKind::GrandLorentz;
    if (!e.shape) return e;
    LipView a = *lip_view(P.src);
    R d(P.d);
    e.need("domain is the torus", P.torus);
    e.need("1 < p < inf", a.p > kOne && !a.p.is_inf());
    e.need("0 < alpha < d/p", kZero < a.alpha && a.alpha < d * a.p.reciprocal());
    e.need("b > 1/q", b_strict(a));
    if (!e.holds()) return e;
    const SpaceParams& G = P.dst;
    bool ok = G.p == critical_r(a, P.d) && G.q == a.q && G.logExp == -a.b && G.secondaryLog == a.p;
    e.upgrade(ok, "target slots (r, q, -b, p) with alpha - d/p = -d/r");
    return e;
}

RuleEval rule_besov_monotone(const Pair& P) {
    RuleEval e{"besov-monotone", "Besov into Besov at equal p"};
    e.shape = P.src.kind == SpaceKind::Besov && P.dst.kind == SpaceKind::Besov;
    if (!e.shape) return e;
    e.need("p0 = p1", P.src.p == P.dst.p);
    if (!e.holds()) return e;
    e.upgrade(besov_elementary(P.src.smooth, P.src.logExp, P.src.q, P.dst.smooth, P.dst.logExp, P.dst.q),
              "s0 > s1, or s0 = s1 with xi0 >= xi1 and q0 <= q1");
    return e;
}

RuleEval rule_log_monotone(const Pair& P) {
    RuleEval e{"lip-log-monotone", "Lip decreases as the log exponent grows"};
    auto a = lip_view(P.src), c = lip_view(P.dst);
    e.shape = a && c && P.dst.kind == SpaceKind::Lipschitz;
    if (!e.shape) return e;
    e.need("alpha0 = alpha1", a->alpha == c->alpha);
    e.need("p0 = p1", a->p == c->p);
    e.need("q0 = q1", a->q == c->q);
    if (!e.holds()) return e;
    e.upgrade(c->b >= a->b, "b1 >= b0");
    return e;
}

RuleEval rule_sobolev_into_lip(const Pair& P) {
    RuleEval e{"sobolev-into-lip", "Sobolev into Lip of the same order"};
    e.shape = P.src.kind == SpaceKind::Sobolev && P.dst.kind == SpaceKind::Lipschitz;
    if (!e.shape) return e;
    LipView c = *lip_view(P.dst);
    e.need("p0 = p1", P.src.p == c.p);
    e.need("alpha0 = alpha1", P.src.smooth == c.alpha);
    e.need("b > 1/q", b_strict(c));
    if (!e.holds()) return e;
    e.outcome = Verdict::Embeds;
    e.condition = "H^alpha_p embeds into every nontrivial Lip^{(alpha,-b)}_{p,q}: true";
    return e;
}

std::vector<RuleEval> evaluate_rules(const Pair& P) {
    return {
        rule_fixed_integrability(P),
        rule_lip_besov_sharp(P, false),
        rule_lip_besov_sharp(P, true),
        rule_limiting_p1_sharp(P),
        rule_brezis_wainger_sharp(P),
        rule_into_classical_lip(P),
        rule_into_bv(P),
        rule_into_linf(P),
        rule_into_lebesgue(P),
        rule_into_lz_sharp(P),
        rule_reflexive(P),
        rule_lip_besov_sufficient(P, false),
        rule_lip_besov_sufficient(P, true),
        rule_sobolev_type(P),
        rule_limiting_p1(P),
        rule_brezis_wainger(P),
        rule_into_lz(P),
        rule_into_grand(P),
        rule_besov_monotone(P),
        rule_log_monotone(P),
        rule_sobolev_into_lip(P),
    };
}

std::optional<EmbeddingDecision> precheck(const SpaceParams& src, const SpaceParams& dst) {
    EmbeddingDecision dec;
    bool bad = false;
    for (const auto* sp : {&src, &dst}) {
        std::string role = sp == &src ? "source" : "target";
        for (const auto& v : validate(*sp)) {
            dec.hypotheses.push_back({role + ": " + v.constraint, false});
            bad = true;
        }
    }
    if (bad) {
        dec.notes = "invalid or trivial space; the engine does not decide embeddings of the zero space";
        return dec;
    }
    if (src.dim != dst.dim) {
        dec.hypotheses.push_back({"d_src = d_dst", false});
        dec.notes = "dimension mismatch";
        return dec;
    }
    if (src.domain != dst.domain) {
        dec.hypotheses.push_back({"same domain", false});
        dec.notes = "domain mismatch";
        return dec;
    }
    return std::nullopt;
}

}  // namespace

EmbeddingDecision decide_embedding(const SpaceParams& src_in, const SpaceParams& dst_in) {
    if (auto early = precheck(src_in, dst_in)) return *early;
    const SpaceParams src = canonical_identities(src_in);
    const SpaceParams dst = canonical_identities(dst_in);
    Pair P{src, dst, src.dim, src.domain == Domain::Torus};
    std::vector<RuleEval> rules = evaluate_rules(P);

    EmbeddingDecision dec;
    const RuleEval* decider = nullptr;
    std::optional<Verdict> iff_verdict;
    for (const auto& r : rules) {
        if (!r.holds() || r.outcome == Verdict::OutsideTheory) continue;
        dec.firedRules.push_back(r.id);
        if (r.iff) {
            if (!iff_verdict) {
                iff_verdict = r.outcome;
                decider = &r;
            } else if (*iff_verdict != r.outcome) {
                dec.conflict = true;
            }
        }
    }
    if (!decider) {
        for (const auto& r : rules)
            if (r.holds() && r.outcome == Verdict::Embeds) {
                decider = &r;
                break;
            }
    } else if (*iff_verdict == Verdict::DoesNotEmbed) {
        for (const auto& r : rules)
            if (!r.iff && r.holds() && r.outcome == Verdict::Embeds) dec.conflict = true;
    }

    if (src.kind == SpaceKind::Lipschitz && dst.kind == SpaceKind::Besov) {
        auto co = decide_coincidence(src, dst);
        if (co.verdict == Verdict::Embeds) dec.firedRules.push_back(co.ruleId);
    } else if (src.kind == SpaceKind::Besov && dst.kind == SpaceKind::Lipschitz) {
        auto co = decide_coincidence(dst, src);
        if (co.verdict == Verdict::Embeds) dec.firedRules.push_back(co.ruleId);
    }

    if (decider) {
        dec.verdict = decider->outcome;
        dec.ruleId = decider->id;
        dec.citation = decider->citation;
        dec.hypotheses = decider->hyps;
        dec.notes = decider->condition;
        if (dec.conflict) dec.notes += "; fired rules disagree";
        return dec;
    }

    const RuleEval* nearest = nullptr;
    for (const auto& r : rules) {
        if (!r.shape || r.hyps.empty()) continue;
        if (!nearest || r.held_fraction() > nearest->held_fraction()) nearest = &r;
    }
    dec.verdict = Verdict::OutsideTheory;
    if (nearest) {
        dec.ruleId = nearest->id;
        dec.hypotheses = nearest->hyps;
        bool any_failed = std::any_of(dec.hypotheses.begin(), dec.hypotheses.end(),
                                      [](const Hypothesis& h) { return !h.holds; });
        if (!any_failed) dec.hypotheses.push_back({"a conclusion is stated for these parameters", false});
        dec.notes = "nearest rule: " + nearest->citation;
    } else {
        dec.hypotheses.push_back({"a rule covers " + to_string(src.kind) + " -> " + to_string(dst.kind), false});
        dec.notes = "no rule covers this pair of space kinds";
    }
    return dec;
}

EmbeddingDecision decide_coincidence(const SpaceParams& lip_in, const SpaceParams& besov_in) {
    if (auto early = precheck(lip_in, besov_in)) return *early;
    const SpaceParams lip = canonical_identities(lip_in);
    const SpaceParams besov = canonical_identities(besov_in);
    EmbeddingDecision dec;
    dec.ruleId = "lip-besov-coincidence";
    dec.citation = "Lip equals Besov as sets";
    auto need = [&](const std::string& t, bool h) { dec.hypotheses.push_back({t, h}); };
    need("first space is Lipschitz", lip.kind == SpaceKind::Lipschitz);
    need("second space is Besov", besov.kind == SpaceKind::Besov);
    bool shapes = lip.kind == SpaceKind::Lipschitz && besov.kind == SpaceKind::Besov;
    if (shapes) {
        R th = threshold_p(lip.dim);
        need("2d/(d+1) < p < inf", lip.p > th && !lip.p.is_inf());
        need("b > 1/q", lip.logExp > lip.q.reciprocal());
        need("s = alpha", besov.smooth == lip.smooth);
        need("same p and q", besov.p == lip.p && besov.q == lip.q);
    }
    bool ok = std::all_of(dec.hypotheses.begin(), dec.hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
    if (!ok) {
        dec.verdict = Verdict::OutsideTheory;
        dec.notes = "hypotheses of the coincidence criterion fail";
        return dec;
    }
    R xi = besov.logExp;
    bool cond = lip.p == kTwo && lip.q == kTwo && xi == -lip.logExp + R(1, 2);
    dec.notes = "p = q = 2 and xi = -b+1/2 with xi = " + xi.str() + (cond ? ": true" : ": false");
    if (cond) {
        dec.verdict = Verdict::Embeds;
    } else if (lip.domain == Domain::Euclidean) {
        dec.verdict = Verdict::DoesNotEmbed;
    } else {
        dec.verdict = Verdict::OutsideTheory;
        dec.hypotheses.push_back({"domain is R^d (the converse is stated there only)", false});
    }
    return dec;
}

std::vector<Conflict> consistency_scan(const std::vector<SpaceParams>& grid) {
    std::vector<Conflict> out;
    const std::size_t n = grid.size();
    std::vector<Verdict> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            EmbeddingDecision d = decide_embedding(grid[i], grid[j]);
            v[i * n + j] = d.verdict;
            if (d.conflict)
                out.push_back({{i, j}, "fired rules disagree for " + to_string(grid[i]) + " -> " + to_string(grid[j])});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (v[i * n + j] != Verdict::Embeds) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (v[j * n + k] == Verdict::Embeds && v[i * n + k] == Verdict::DoesNotEmbed)
                    out.push_back({{i, k}, "transitivity violated through " + to_string(grid[j]) + ": " +
                                               to_string(grid[i]) + " -> " + to_string(grid[k])});
        }
    return out;
}

}  // namespace lipspace
