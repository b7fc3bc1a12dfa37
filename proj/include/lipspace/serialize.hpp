#pragma once

#include <string>

#include <json.hpp>

#include "lipspace/engine.hpp"
#include "lipspace/haar.hpp"
#include "lipspace/rearrange.hpp"
#include "lipspace/report.hpp"
#include "lipspace/sharpness.hpp"
#include "lipspace/suites.hpp"

namespace lipspace {

using json = nlohmann::ordered_json;

// Non-finite values are written as the strings "inf", "-inf", "nan".
json number(double x);

json to_json(const NormReport& r);
json to_json(const EmbeddingDecision& d);
json to_json(const DivergenceTable& t);
json to_json(const HaarCoeffs& c);
json to_json(const RearrangedProfile& p);
json to_json(const CriterionResult& r);
json to_json(const SuiteReport& s);

// "scale,term" rows followed by a value row.
std::string norm_csv(const NormReport& r);
std::string decision_csv(const EmbeddingDecision& d);
std::string suite_csv(const SuiteReport& s);
std::string suite_summary(const SuiteReport& s);

}  // namespace lipspace
