#include <doctest.h>

#include <cmath>

#include "lipspace/sharpness.hpp"

using namespace lipspace;

namespace {

double partial_sum(const PowerLogTerm& t, double from, double to) {
    double s = 0.0;
    for (double n = from; n <= to; n += 1.0) s += t.eval(n);
    return s;
}

const ExtRational half(1, 2);

}  // namespace

TEST_CASE("power-log series") {
    CHECK(powerlog_series_converges(PowerLogTerm(-2)) == SeriesVerdict::Converges);
    CHECK(powerlog_series_converges(PowerLogTerm(-1)) == SeriesVerdict::Diverges);
    CHECK(powerlog_series_converges(PowerLogTerm(-1, -1)) == SeriesVerdict::Diverges);
    CHECK(powerlog_series_converges(PowerLogTerm(-1, ExtRational(-3, 2))) == SeriesVerdict::Converges);
    CHECK(powerlog_series_converges(PowerLogTerm(-1, -1, -2)) == SeriesVerdict::Converges);
    CHECK(powerlog_series_converges(PowerLogTerm(-1, -1, -1)) == SeriesVerdict::Diverges);
    CHECK(powerlog_series_converges(PowerLogTerm(ExtRational(-3, 2), 5)) == SeriesVerdict::Converges);
    CHECK(powerlog_series_converges(PowerLogTerm::null()) == SeriesVerdict::Converges);
    CHECK(PowerLogTerm::null().eval(10.0) == 0.0);
    CHECK(PowerLogTerm(half, 2, -1).eval(1.0) == doctest::Approx(1.0));
}

TEST_CASE("series verdicts against partial sums") {
    for (auto t : {PowerLogTerm(-1), PowerLogTerm(-1, -1), PowerLogTerm(-half), PowerLogTerm(-1, -half)}) {
        INFO(t.str());
        REQUIRE(powerlog_series_converges(t) == SeriesVerdict::Diverges);
        CHECK(partial_sum(t, 1, 1e6) / partial_sum(t, 1, 1e3) >= 1.2);
    }
    for (auto t : {PowerLogTerm(-2), PowerLogTerm(ExtRational(-3, 2)), PowerLogTerm(-1, -2), PowerLogTerm(-2, 3)}) {
        INFO(t.str());
        REQUIRE(powerlog_series_converges(t) == SeriesVerdict::Converges);
        const double total = partial_sum(t, 1, 1e6);
        CHECK(partial_sum(t, 1001, 1e6) / total < 0.2);
    }
}

TEST_CASE("closure operations match brute force growth") {
    // doubling n multiplies the sum by the predicted factor up to a few percent
    for (auto t : {PowerLogTerm(half), PowerLogTerm(-half, 1), PowerLogTerm(2, -1)}) {
        const PowerLogTerm s = prefix_sum(t);
        INFO(t.str(), " -> ", s.str());
        const double got = partial_sum(t, 1, 2e5) / partial_sum(t, 1, 1e5);
        CHECK(got == doctest::Approx(s.eval(2e5) / s.eval(1e5)).epsilon(0.03));
    }
    for (auto t : {PowerLogTerm(-2), PowerLogTerm(-3, 1), PowerLogTerm(ExtRational(-5, 2), -1)}) {
        const PowerLogTerm s = tail_sum(t);
        INFO(t.str(), " -> ", s.str());
        const double got = partial_sum(t, 1e4, 1e7) / partial_sum(t, 2e4, 1e7);
        CHECK(got == doctest::Approx(s.eval(1e4) / s.eval(2e4)).epsilon(0.03));
    }
    CHECK(prefix_sum(PowerLogTerm(-2)) == PowerLogTerm::one());
    CHECK(prefix_sum(PowerLogTerm(-1, 1)) == PowerLogTerm(0, 2));
    CHECK(prefix_sum(PowerLogTerm(-1, -1)) == PowerLogTerm(0, 0, 1));
    CHECK_THROWS_AS(prefix_sum(PowerLogTerm(-1, -1, -1)), OutsideClosure);
    CHECK(tail_sum(PowerLogTerm(-1, -2)) == PowerLogTerm(0, -1));
    CHECK_THROWS_AS(tail_sum(PowerLogTerm(-1)), InfiniteQuantity);
    CHECK(sup_envelope(PowerLogTerm(-1, 5)) == PowerLogTerm(-1, 5));
    CHECK(sup_envelope(PowerLogTerm(0)) == PowerLogTerm::one());
    CHECK_THROWS_AS(sup_envelope(PowerLogTerm(0, 0, 1)), InfiniteQuantity);
    CHECK(running_max(PowerLogTerm(0, 1)) == PowerLogTerm(0, 1));
    CHECK(running_max(PowerLogTerm(0, -1)) == PowerLogTerm::one());
    CHECK(dominant(PowerLogTerm(1, -3), PowerLogTerm(1, -2)) == PowerLogTerm(1, -2));
    CHECK(pow(PowerLogTerm(2, -1, 4), half) == PowerLogTerm(1, -half, 2));
    CHECK(PowerLogTerm(1, 2) * PowerLogTerm(-1, 1) == PowerLogTerm(0, 3));
    CHECK(PowerLogTerm(1) * PowerLogTerm::null() == PowerLogTerm::null());
}

TEST_CASE("sequence Hardy criterion") {
    const ExtRational b(1), q(2), r(3), p(4);
    PowerLogTerm lambda(-1, -b * q);
    PowerLogTerm gamma(r / p - ExtRational(1), (-b + ExtRational(1) / q) * r);
    auto res = bege_criterion(lambda, gamma, q / p, r / p);
    CHECK(res.bege2 == SeriesVerdict::Converges);
    CHECK(res.bege3 == SeriesVerdict::Diverges);
    CHECK(res.summand3 == PowerLogTerm(-1, -1));
    CHECK_FALSE(res.inequalityHolds);

    auto zero = bege_criterion(PowerLogTerm::null(), gamma, q / p, r / p);
    CHECK(zero.bege2 == SeriesVerdict::Converges);
    CHECK(zero.bege3 == SeriesVerdict::Converges);
    CHECK(zero.inequalityHolds);

    CHECK_THROWS_AS(bege_criterion(lambda, gamma, half, half), std::invalid_argument);
    CHECK_THROWS_AS(bege_criterion(lambda, gamma, half, ExtRational(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(bege_criterion(lambda, PowerLogTerm::null(), half, 1), std::invalid_argument);
}

TEST_CASE("shrinking lambda never breaks the sequence inequality") {
    const PowerLogTerm gamma(ExtRational(-1, 4), ExtRational(-3, 2));
    for (ExtRational a : {ExtRational(-1), ExtRational(-3, 2), ExtRational(-2)}) {
        bool held = false;
        for (int k = -8; k <= 8; ++k) {
            const ExtRational c(-k, 2);
            try {
                bool holds = bege_criterion(PowerLogTerm(a, c), gamma, half, ExtRational(3, 4)).inequalityHolds;
                INFO("a = ", a.str(), " c = ", c.str());
                if (held) CHECK(holds);
                held = held || holds;
            } catch (const OutsideClosure&) {
            }
        }
        CHECK(held);
    }
}

TEST_CASE("reverse Hardy criterion") {
    {
        PiecewiseWeight u{PowerLogTerm(0), PowerLogTerm(1)};
        PiecewiseWeight v{PowerLogTerm(1), PowerLogTerm(3, -4)};
        PiecewiseWeight w{PowerLogTerm::null(), PowerLogTerm(2, ExtRational(-9, 4))};
        auto res = gp_criterion(u, v, w, ExtRational(3, 2), 2);
        CHECK(res.form == GPForm::Integral);
        CHECK(res.atInfinity == PowerLogTerm(-1, -1));
        CHECK_FALSE(res.inequalityHolds);
        auto none = gp_criterion(u, v, {PowerLogTerm::null(), PowerLogTerm::null()}, ExtRational(3, 2), 2);
        CHECK(none.inequalityHolds);
    }
    {
        PiecewiseWeight u{PowerLogTerm(0), PowerLogTerm(half)};
        PiecewiseWeight v{PowerLogTerm(0), PowerLogTerm(half, -2)};
        PiecewiseWeight w{PowerLogTerm(2), PowerLogTerm(2)};
        auto res = gp_criterion(u, v, w, 2, 1);
        CHECK(res.form == GPForm::Supremum);
        CHECK(res.atInfinity == PowerLogTerm(0, 1));
        CHECK_FALSE(res.inequalityHolds);
        auto none = gp_criterion(u, v, {PowerLogTerm::null(), PowerLogTerm::null()}, 2, 1);
        CHECK(none.inequalityHolds);
        CHECK_THROWS_AS(gp_criterion(u, v, w, half, 1), std::invalid_argument);
        // integrable u violates the standing hypotheses
        CHECK_THROWS_AS(gp_criterion({PowerLogTerm(0), PowerLogTerm(-2)}, v, w, 2, 1), std::invalid_argument);
    }
}

TEST_CASE("witness intervals") {
    WitnessSpec ws;
    ws.kind = WitnessKind::LacunaryBesovToLip;
    ws.p = 2.0;
    ws.q = 4.0;
    ws.b = 1.0;
    ws.epsilon = 0.4;
    auto [lo, hi] = witness_interval(ws);
    CHECK(lo == doctest::Approx(-0.65));
    CHECK(hi == doctest::Approx(-0.25));
    ws.beta = -0.2;
    CHECK_THROWS_AS(check_witness(ws), WitnessError);
    ws.beta = -0.45;
    CHECK_NOTHROW(check_witness(ws));
    ws.truncations = {2};
    CHECK_THROWS_AS(check_witness(ws), WitnessError);
    ws.q = 1.0;
    CHECK_THROWS_AS(witness_interval(ws), WitnessError);

    WitnessSpec gm;
    gm.kind = WitnessKind::GMLipToLorentzZygmund;
    gm.alpha = 1.0 / 6.0;
    gm.p = 3.0;
    gm.q = 2.0;
    gm.r = 5.0;
    gm.xi = 2.75;
    CHECK_THROWS_AS(witness_interval(gm), WitnessError);
    gm.r = 6.0;
    auto [a, c] = witness_interval(gm);
    CHECK(a == doctest::Approx(-1.0 + 0.5 + 1.0 / 3.0));
    CHECK(c == doctest::Approx(-1.0 + 0.5 + 2.75));

    CHECK(parse_witness_kind("gm-lip-lz") == WitnessKind::GMLipToLorentzZygmund);
    CHECK_THROWS_AS(parse_witness_kind("nope"), ParseError);
    CHECK(family_of(WitnessKind::LacunaryLipToBesov) == WitnessFamily::LacunaryLogPower);
}

TEST_CASE("witness truncations") {
    WitnessSpec ws;
    ws.kind = WitnessKind::GMLipToLorentzZygmund;
    ws.alpha = 0.25;
    ws.p = 2.0;
    ws.q = 1.5;
    ws.r = 4.0;
    ws.xi = 1.0;
    ws.beta = 0.5;
    ws.scale = 2.0;
    ws.truncations = {3, 10};
    auto objs = make_witness(ws);
    REQUIRE(objs.size() == 2);
    const auto& g = std::get<GMSequence>(objs[1]);
    REQUIRE(g.a.size() == 10);
    CHECK(g.a[0] == doctest::Approx(2.0));
    CHECK(g.a[9] == doctest::Approx(2.0 * std::pow(10.0, -0.75) / std::sqrt(1.0 + std::log(10.0))));

    ws.kind = WitnessKind::LacunaryBesovToLip;
    ws.epsilon = 0.5;
    ws.q = 2.0;
    ws.beta = -0.2;
    auto lac = make_witness(ws);
    const auto& s = std::get<LacunarySpec>(lac[1]);
    REQUIRE(s.coeffs.size() == 8);
    CHECK(std::abs(s.coeffs[0]) == doctest::Approx(2.0 * std::pow(4.0, 0.2)));
}

TEST_CASE("divergence patterns") {
    WitnessSpec lac;
    lac.kind = WitnessKind::LacunaryBesovToLip;
    lac.alpha = 0.5;
    lac.p = 2.0;
    lac.q = 4.0;
    lac.b = 1.0;
    lac.epsilon = 0.4;
    lac.beta = -0.45;
    for (int k = 10; k <= 14; ++k) lac.truncations.push_back(std::size_t{1} << k);
    auto t = demonstrate_divergence(lac);
    CHECK(t.patternHeld);
    CHECK(t.rows.size() == 5);
    for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].dst > t.rows[i - 1].dst);

    WitnessSpec rev = lac;
    rev.kind = WitnessKind::LacunaryLipToBesov;
    rev.q = 2.0;
    rev.epsilon = 0.4;
    rev.beta = 0.2;
    auto u = demonstrate_divergence(rev);
    CHECK(u.dstGrowth > u.srcGrowth);
    auto [src, dst] = default_routes(rev);
    CHECK(src.kind == RouteKind::LacunaryLipschitz);
    CHECK(dst.kind == RouteKind::LacunaryBesov);

    WitnessSpec gm;
    gm.kind = WitnessKind::GMLipToLorentzZygmund;
    gm.alpha = 1.0 / 6.0;
    gm.p = 3.0;
    gm.q = 2.0;
    gm.b = 1.0;
    gm.r = 6.0;
    gm.xi = 2.75;
    gm.beta = 0.25;
    for (int k = 12; k <= 16; k += 2) gm.truncations.push_back(std::size_t{1} << k);
    auto v = demonstrate_divergence(gm);
    CHECK(v.patternHeld);

    auto bad = default_routes(gm).first;
    CHECK_THROWS_AS(demonstrate_divergence(lac, bad, bad), std::invalid_argument);
}

TEST_CASE("degenerate witnesses") {
    WitnessSpec ws;
    ws.kind = WitnessKind::LacunaryBesovToLip;
    ws.q = 2.0;
    ws.epsilon = 0.5;
    ws.beta = -0.2;
    ws.scale = 0.0;
    ws.truncations = {16, 32};
    auto t = demonstrate_divergence(ws);
    CHECK(t.vacuous);
    CHECK_FALSE(t.patternHeld);
    ws.scale = 1.0;
    ws.truncations.clear();
    auto e = demonstrate_divergence(ws);
    CHECK(e.vacuous);
    CHECK(e.rows.empty());
    CHECK(divergence_csv(e) == "truncation,src,dst,ratio\n");
}
