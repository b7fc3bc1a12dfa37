#include <cmath>
#include <sstream>

#include "lipspace/serialize.hpp"

namespace lipspace {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

json complex_json(const cplx& z) { return json::array({number(z.real()), number(z.imag())}); }

}  // namespace

json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

json to_json(const NormReport& r) {
    json per = json::array();
    for (double t : r.perScale) per.push_back(number(t));
    json j;
    j["value"] = number(r.value);
    j["method"] = r.method;
    j["perScale"] = per;
    j["meta"] = {{"N", r.N}, {"J", r.J}, {"partition", r.partition}};
    j["firstScale"] = r.firstScale;
    j["q"] = number(r.q);
    j["offset"] = number(r.offset);
    j["tailPower"] = number(r.tailPower);
    j["truncation"] = r.truncation;
    j["equivalenceValid"] = r.equivalenceValid;
    j["warning"] = r.warning;
    j["note"] = r.note;
    return j;
}

json to_json(const EmbeddingDecision& d) {
    json hyp = json::array();
    for (const auto& h : d.hypotheses) hyp.push_back({{"text", h.text}, {"holds", h.holds}});
    json j;
    j["verdict"] = to_string(d.verdict);
    j["ruleId"] = d.ruleId;
    j["citation"] = d.citation;
    j["hypotheses"] = hyp;
    j["firedRules"] = d.firedRules;
    j["notes"] = d.notes;
    j["conflict"] = d.conflict;
    return j;
}

json to_json(const DivergenceTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"truncation", r.truncation}, {"src", number(r.src)}, {"dst", number(r.dst)},
                        {"ratio", number(r.ratio)}});
    json j;
    j["rows"] = rows;
    j["srcGrowth"] = number(t.srcGrowth);
    j["dstGrowth"] = number(t.dstGrowth);
    j["patternHeld"] = t.patternHeld;
    j["vacuous"] = t.vacuous;
    j["verdict"] = t.verdict;
    return j;
}

json to_json(const HaarCoeffs& c) {
    json levels = json::array();
    for (const auto& lev : c.levels) {
        json row = json::array();
        for (const auto& z : lev) row.push_back(complex_json(z));
        levels.push_back(row);
    }
    return {{"mean", complex_json(c.mean)}, {"levels", levels}};
}

json to_json(const RearrangedProfile& p) {
    json bp = json::array(), v = json::array();
    for (double t : p.breakpoints) bp.push_back(number(t));
    for (double x : p.values) v.push_back(number(x));
    return {{"breakpoints", bp}, {"values", v}, {"totalMeasure", number(p.totalMeasure)}};
}

json to_json(const CriterionResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"measured", number(c.measured)},
                          {"bound", number(c.bound)},
                          {"detail", c.detail}});
    json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["pass"] = r.pass();
    j["budget"] = number(r.budget);
    j["vacuous"] = r.vacuous;
    j["warning"] = r.warning;
    j["checks"] = checks;
    return j;
}

json to_json(const SuiteReport& s) {
    json crit = json::array();
    for (const auto& c : s.criteria) crit.push_back(to_json(c));
    return {{"suite", s.suite}, {"pass", s.pass()}, {"criteria", crit}};
}

std::string norm_csv(const NormReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "scale,term\n";
    for (std::size_t k = 0; k < r.perScale.size(); ++k) os << r.firstScale + static_cast<int>(k) << "," << r.perScale[k] << "\n";
    os << "value," << r.value << "\n";
    return os.str();
}

std::string decision_csv(const EmbeddingDecision& d) {
    std::ostringstream os;
    os << "verdict,ruleId,citation,conflict\n";
    os << to_string(d.verdict) << "," << csv_field(d.ruleId) << "," << csv_field(d.citation) << ","
       << (d.conflict ? "true" : "false") << "\n";
    return os.str();
}

std::string suite_csv(const SuiteReport& s) {
    std::ostringstream os;
    os.precision(12);
    os << "criterion,check,pass,measured,bound\n";
    for (const auto& c : s.criteria)
        for (const auto& ch : c.checks)
            os << c.id << "," << csv_field(ch.name) << "," << (ch.pass ? "true" : "false") << "," << ch.measured
               << "," << ch.bound << "\n";
    return os.str();
}

std::string suite_summary(const SuiteReport& s) {
    std::ostringstream os;
    for (const auto& c : s.criteria) {
        os << summary_line(c) << "\n";
        for (const auto& ch : c.checks) {
            os << "  " << (ch.pass ? "ok  " : "FAIL") << " " << ch.name << ": " << ch.measured << " (bound " << ch.bound
               << ")";
            if (!ch.detail.empty()) os << " " << ch.detail;
            os << "\n";
        }
    }
    os << (s.pass() ? "suite passed" : "suite failed") << "\n";
    return os.str();
}

}  // namespace lipspace
