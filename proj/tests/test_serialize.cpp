#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "lipspace/dyadic.hpp"
#include "lipspace/routes.hpp"
#include "lipspace/serialize.hpp"

using namespace lipspace;

namespace {

const ExtRational half(1, 2);

PeriodicSignal random_band(std::mt19937_64& rng, std::size_t N, int K) {
    std::normal_distribution<double> g;
    std::vector<cplx> c(N);
    for (int k = -K; k <= K; ++k) c[k >= 0 ? k : N + k] = cplx(g(rng), g(rng));
    return make_signal(fft_inverse(c));
}

std::string scratch(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("lipspace_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST_CASE("non-finite numbers") {
    CHECK(number(1.5).dump() == "1.5");
    CHECK(number(INFINITY).dump() == "\"inf\"");
    CHECK(number(-INFINITY).dump() == "\"-inf\"");
    CHECK(number(NAN).dump() == "\"nan\"");
}

TEST_CASE("norm report fields") {
    NormReport r;
    r.value = 3.0;
    r.method = "fourier-lipschitz";
    r.perScale = {1.0, 2.0};
    r.q = kInf;
    r.N = 64;
    r.J = 6;
    r.partition = "sharp";
    auto j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"value", "method", "perScale", "meta", "firstScale", "q", "offset", "tailPower",
                                           "truncation", "equivalenceValid", "warning", "note"});
    CHECK(j["q"] == "inf");
    CHECK(j["meta"]["N"] == 64);
    CHECK(j["meta"]["partition"] == "sharp");
    CHECK(norm_csv(r) == "scale,term\n0,1\n1,2\nvalue,3\n");
}

TEST_CASE("decision and suite serialization") {
    auto d = decide_embedding(SpaceParams::besov(half, 2, 2, 0), SpaceParams::besov(half, 2, 2, 0));
    auto j = to_json(d);
    CHECK(j["verdict"] == "Embeds");
    CHECK(j["ruleId"] == "reflexive");
    CHECK(j["conflict"] == false);
    CHECK(decision_csv(d).rfind("verdict,ruleId,citation,conflict\nEmbeds,reflexive,", 0) == 0);

    auto s = run_suite("engine-table", Corpus{});
    auto sj = to_json(s);
    CHECK(sj["suite"] == "engine-table");
    CHECK(sj["pass"] == true);
    REQUIRE(sj["criteria"].size() == 1);
    CHECK_FALSE(sj["criteria"][0].contains("seconds"));
    CHECK(suite_csv(s).rfind("criterion,check,pass,measured,bound\n", 0) == 0);
    auto text = suite_summary(s);
    CHECK(text.size() >= 13);
    CHECK(text.substr(text.size() - 13) == "suite passed\n");
    CHECK_THROWS_AS(run_suite("nonsense", Corpus{}), std::invalid_argument);
}

TEST_CASE("haar and profile serialization") {
    auto c = haar_analyze(make_signal({1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}));
    auto j = to_json(c);
    CHECK(j["levels"].size() == 3);
    CHECK(j["mean"].size() == 2);
    auto p = to_json(make_profile({0.0, 0.5, 1.0}, {2.0, 1.0}));
    CHECK(p["values"] == json::array({2.0, 1.0}));
    CHECK(p["totalMeasure"] == 1.0);
}

TEST_CASE("method and input names") {
    for (auto m : {NormMethod::Auto, NormMethod::Fourier, NormMethod::Modulus, NormMethod::Means, NormMethod::Haar,
                   NormMethod::Closed, NormMethod::Direct})
        CHECK(parse_method(to_string(m)) == m);
    CHECK_THROWS_AS(parse_method("spectral"), ParseError);
    CHECK(parse_input_kind("gm") == InputKind::GM);
    CHECK_THROWS_AS(parse_input_kind("image"), ParseError);
}

TEST_CASE("route dispatch") {
    std::mt19937_64 rng(1);
    const auto f = random_band(rng, 1024, 60);
    const auto lip = SpaceParams::lipschitz(half, 2, 2, 1);

    CHECK(compute_norm(lip, f).method == compute_norm(lip, f, {NormMethod::Fourier}).method);
    for (auto m : {NormMethod::Fourier, NormMethod::Modulus, NormMethod::Means, NormMethod::Haar}) {
        auto r = compute_norm(lip, f, {m});
        CHECK(std::isfinite(r.value));
        CHECK(r.value > 0.0);
    }
    CHECK(compute_norm(SpaceParams::lebesgue(2), f).value == doctest::Approx(lp_norm(f.samples, 2.0)));
    CHECK(compute_norm(SpaceParams::lorentz_zygmund(4, 2, -half), f).value > 0.0);
    CHECK(compute_norm(SpaceParams::grand(4, 2, -1, 2), f).value > 0.0);
    CHECK(compute_norm(SpaceParams::sobolev(1, 2), f).value > 0.0);
    CHECK(compute_norm(SpaceParams::besov(half, 2, 2, 0), f, {NormMethod::Modulus}).value > 0.0);

    LacunarySpec spec;
    spec.coeffs = {1.0, 0.5, 0.25};
    auto bs = SpaceParams::besov(half, 2, 2, 0);
    auto closed = compute_norm(bs, spec);
    auto fourier = compute_norm(bs, spec, {NormMethod::Fourier, PartitionKind::Sharp, 256});
    CHECK(fourier.value == doctest::Approx(std::sqrt(2.0 * M_PI) * closed.value).epsilon(1e-9));

    auto gm = make_gm_sequence({1.0, 0.5, 0.25, 0.125});
    CHECK(compute_norm(SpaceParams::lebesgue(2), gm).value == doctest::Approx(gm_lp_norm(gm, 2.0).value));

    CHECK_THROWS_AS(compute_norm(SpaceParams::simple(SpaceKind::BV), f), UnsupportedRoute);
    CHECK_THROWS_AS(compute_norm(SpaceParams::sobolev(1, 2), spec), UnsupportedRoute);
    CHECK_THROWS_AS(compute_norm(lip, f, {NormMethod::Direct}), UnsupportedRoute);
    CHECK_THROWS_AS(compute_norm(SpaceParams::lipschitz(half, 2, 2, 1, 2), f), UnsupportedRoute);
    CHECK_THROWS_AS(compute_norm(lip, make_signal(std::vector<cplx>(12, 1.0))), std::invalid_argument);
}

TEST_CASE("input files") {
    auto sig = std::get<PeriodicSignal>(load_input(scratch("sig.csv", "# samples\n1,0\n2\n3,1\n4,0\n5\n6\n7\n8\n"), InputKind::Signal));
    REQUIRE(sig.size() == 8);
    CHECK(sig.samples[2] == cplx(3.0, 1.0));
    auto lac = std::get<LacunarySpec>(load_input(scratch("lac.csv", "3,1\n5,0.5,0.5\n"), InputKind::Lacunary));
    CHECK(lac.coeffs.size() == 3);
    auto gm = std::get<GMSequence>(load_input(scratch("gm.csv", "1,1\n2,0.5\n"), InputKind::GM));
    CHECK(gm.a == std::vector<double>{1.0, 0.5});
    CHECK_THROWS_AS(load_input("/nonexistent/lipspace.csv", InputKind::Signal), IoError);
    CHECK_THROWS_AS(load_input(scratch("bad.csv", "1,x\n"), InputKind::Signal), ParseError);
}

TEST_CASE("serialization is deterministic") {
    std::mt19937_64 rng(2);
    const auto f = random_band(rng, 512, 30);
    const auto sp = SpaceParams::lipschitz(half, 2, ExtRational::infinity(), 0);
    CHECK(to_json(compute_norm(sp, f, {NormMethod::Modulus})).dump() ==
          to_json(compute_norm(sp, f, {NormMethod::Modulus})).dump());
}
