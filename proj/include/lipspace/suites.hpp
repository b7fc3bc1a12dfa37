#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lipspace/closed_forms.hpp"
#include "lipspace/signal.hpp"

namespace lipspace {

// Trigonometric polynomial with frequencies -K..K, realizable at any N > 2K.
struct BandLimited {
    std::vector<cplx> coeffs;  // coeffs[k + K]
    int K() const { return static_cast<int>(coeffs.size() / 2); }
    PeriodicSignal realize(std::size_t N) const;
};

struct Corpus {
    std::vector<LacunarySpec> lacunary;
    std::vector<GMSequence> gm;
    std::vector<BandLimited> bandLimited;
    std::uint64_t seed = 0;

    bool empty() const { return lacunary.empty() && gm.empty() && bandLimited.empty(); }
};

constexpr std::uint64_t kDefaultSeed = 20240607;

// Bound on t^{-alpha} omega_alpha / int_t omega_{alpha+1} u^{-alpha} du/u, frozen after calibration.
constexpr double kMarchaudConstant = 1.0;

// 30 lacunary specs (J = 12), 10 monotone sequences n^{-g}(1+log n)^{-d}, 5 band-limited signals.
Corpus make_corpus(std::uint64_t seed = kDefaultSeed);

// Lacunary spec cut to levels j <= J.
LacunarySpec truncate(const LacunarySpec& spec, int J);

struct Check {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;
    double budget = 0.0;
    bool vacuous = false;
    std::string warning;

    bool pass() const;
};

CriterionResult criterion_coincidence(const Corpus& c);
CriterionResult criterion_route_equivalence(const Corpus& c);
CriterionResult criterion_engine_table();
CriterionResult criterion_hardy();
CriterionResult criterion_witness();
CriterionResult criterion_modulus(const Corpus& c);
CriterionResult criterion_gm_closed_forms(const Corpus& c);
CriterionResult criterion_haar(const Corpus& c);
CriterionResult criterion_infrastructure(const Corpus& c);

CriterionResult run_criterion(int id, const Corpus& c);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
std::vector<int> suite_criteria(const std::string& name);

struct SuiteReport {
    std::string suite;
    std::vector<CriterionResult> criteria;
    bool pass() const;
};

// Throws std::invalid_argument on an unknown suite name.
SuiteReport run_suite(const std::string& name, const Corpus& c);

std::string summary_line(const CriterionResult& r);

}  // namespace lipspace
