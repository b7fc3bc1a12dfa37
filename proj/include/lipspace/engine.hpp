#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lipspace/params.hpp"

namespace lipspace {

enum class Verdict { Embeds, DoesNotEmbed, OutsideTheory };

std::string to_string(Verdict v);

struct Hypothesis {
    std::string text;
    bool holds = false;
};

struct EmbeddingDecision {
    Verdict verdict = Verdict::OutsideTheory;
    std::string ruleId;
    std::string citation;
    std::vector<Hypothesis> hypotheses;
    std::vector<std::string> firedRules;
    std::string notes;
    bool conflict = false;
};

EmbeddingDecision decide_embedding(const SpaceParams& src, const SpaceParams& dst);

// Two-sided question for a Lipschitz/Besov pair: do the spaces coincide?
EmbeddingDecision decide_coincidence(const SpaceParams& lip, const SpaceParams& besov);

struct Conflict {
    std::pair<std::size_t, std::size_t> pair;
    std::string description;
};

std::vector<Conflict> consistency_scan(const std::vector<SpaceParams>& grid);

}  // namespace lipspace
