#include <chrono>
#include <cstring>
#include <sstream>
#include <thread>

#include "lipspace.h"
#include "lipspace/parallel.hpp"
#include "lipspace/routes.hpp"
#include "lipspace/serialize.hpp"

struct lip_space {
    lipspace::SpaceParams params;
    std::string text;
};

struct lip_result {
    std::string json;
    std::string csv;
    bool hasCsv = false;
    std::string summary;
    std::string meta;
    double value = 0.0;
    int code = 0;
};

namespace {

thread_local std::string g_error;

lip_status fail(lip_status s, const std::string& msg) {
    g_error = msg;
    return s;
}

template <class F>
lip_status guarded(F&& body) {
    g_error.clear();
    try {
        return body();
    } catch (const lipspace::ParseError& e) {
        return fail(LIP_ERR_PARSE, e.what());
    } catch (const lipspace::WitnessError& e) {
        return fail(LIP_ERR_WITNESS_INTERVAL, e.what());
    } catch (const lipspace::UnsupportedRoute& e) {
        return fail(LIP_ERR_UNSUPPORTED, e.what());
    } catch (const lipspace::IoError& e) {
        return fail(LIP_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(LIP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(LIP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LIP_ERR_INTERNAL, "unknown error");
    }
}

std::string meta_json(double seconds) {
    lipspace::json m;
    m["seconds"] = seconds;
    m["threads"] = lipspace::thread_count();
    m["version"] = lip_version();
    return m.dump(2) + "\n";
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

lipspace::NormRequest to_request(const lip_norm_options* opt) {
    lipspace::NormRequest req;
    if (!opt) return req;
    if (opt->method) req.method = lipspace::parse_method(opt->method);
    if (opt->partition) req.partition = lipspace::parse_partition(opt->partition);
    if (opt->N) req.N = opt->N;
    req.scales = opt->scales;
    return req;
}

lip_status norm_common(const lip_space* sp, const lipspace::NormInput& in, const lip_norm_options* opt,
                       lip_result** out, std::chrono::steady_clock::time_point t0) {
    lipspace::NormReport rep = lipspace::compute_norm(sp->params, in, to_request(opt));
    auto* r = new lip_result;
    r->json = to_json(rep).dump(2) + "\n";
    r->csv = lipspace::norm_csv(rep);
    r->hasCsv = true;
    std::ostringstream os;
    os.precision(12);
    os << rep.method << " " << rep.value;
    if (!rep.equivalenceValid) os << " (outside the equivalence regime)";
    r->summary = os.str();
    r->value = rep.value;
    r->meta = meta_json(elapsed(t0));
    *out = r;
    return LIP_OK;
}

}  // namespace

extern "C" {

const char* lip_version(void) { return "1.0.0"; }

const char* lip_status_name(lip_status s) {
    switch (s) {
        case LIP_OK: return "ok";
        case LIP_ERR_PARSE: return "parse error";
        case LIP_ERR_INVALID_SPACE: return "invalid space";
        case LIP_ERR_UNSUPPORTED: return "unsupported route";
        case LIP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LIP_ERR_IO: return "i/o error";
        case LIP_ERR_WITNESS_INTERVAL: return "witness interval violated";
        case LIP_ERR_UNKNOWN_SUITE: return "unknown suite";
        case LIP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lip_last_error(void) { return g_error.c_str(); }

lip_status lip_set_threads(int n) {
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    lipspace::set_thread_count(n);
    return LIP_OK;
}

int lip_threads(void) { return lipspace::thread_count(); }

lip_status lip_space_parse(const char* text, lip_space** out) {
    if (!text || !out) return fail(LIP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        lipspace::SpaceParams sp = lipspace::parse_space(text);
        auto violations = lipspace::validate(sp);
        if (!violations.empty()) {
            std::ostringstream os;
            os << "invalid space " << text << ":";
            for (const auto& v : violations) os << "\n  " << v.constraint << " [" << v.rule << "]";
            return fail(LIP_ERR_INVALID_SPACE, os.str());
        }
        *out = new lip_space{sp, lipspace::to_string(sp)};
        return LIP_OK;
    });
}

const char* lip_space_string(const lip_space* sp) { return sp ? sp->text.c_str() : ""; }

void lip_space_free(lip_space* sp) { delete sp; }

void lip_norm_options_init(lip_norm_options* opt) {
    if (!opt) return;
    opt->method = "auto";
    opt->input_kind = "signal";
    opt->partition = "sharp";
    opt->N = 4096;
    opt->scales = -1;
}

lip_status lip_norm_file(const lip_space* sp, const char* path, const lip_norm_options* opt, lip_result** out) {
    if (!sp || !path || !out) return fail(LIP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto t0 = std::chrono::steady_clock::now();
        auto kind = lipspace::parse_input_kind(opt && opt->input_kind ? opt->input_kind : "signal");
        return norm_common(sp, lipspace::load_input(path, kind), opt, out, t0);
    });
}

lip_status lip_norm_samples(const lip_space* sp, const double* re, const double* im, size_t n,
                            const lip_norm_options* opt, lip_result** out) {
    if (!sp || !re || !out) return fail(LIP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<lipspace::cplx> s(n);
        for (size_t i = 0; i < n; ++i) s[i] = {re[i], im ? im[i] : 0.0};
        return norm_common(sp, lipspace::make_signal(std::move(s)), opt, out, t0);
    });
}

lip_status lip_embed(const lip_space* src, const lip_space* dst, lip_result** out) {
    if (!src || !dst || !out) return fail(LIP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto t0 = std::chrono::steady_clock::now();
        auto d = lipspace::decide_embedding(src->params, dst->params);
        auto* r = new lip_result;
        r->json = to_json(d).dump(2) + "\n";
        r->csv = lipspace::decision_csv(d);
        r->hasCsv = true;
        r->summary = to_string(d.verdict) + (d.ruleId.empty() ? "" : " (" + d.ruleId + ")");
        switch (d.verdict) {
            case lipspace::Verdict::Embeds: r->code = LIP_EMBEDS; break;
            case lipspace::Verdict::DoesNotEmbed: r->code = LIP_DOES_NOT_EMBED; break;
            case lipspace::Verdict::OutsideTheory: r->code = LIP_OUTSIDE_THEORY; break;
        }
        r->meta = meta_json(elapsed(t0));
        *out = r;
        return LIP_OK;
    });
}

void lip_witness_spec_init(lip_witness_spec* ws) {
    if (!ws) return;
    std::memset(ws, 0, sizeof(*ws));
    lipspace::WitnessSpec d;
    ws->kind = "lacunary-besov-lip";
    ws->alpha = d.alpha;
    ws->beta = d.beta;
    ws->b = d.b;
    ws->p = d.p;
    ws->q = d.q;
    ws->epsilon = d.epsilon;
    ws->r = d.r;
    ws->xi = d.xi;
    ws->scale = d.scale;
}

lip_status lip_witness(const lip_witness_spec* ws, lip_result** out) {
    if (!ws || !out || !ws->kind) return fail(LIP_ERR_INVALID_ARGUMENT, "null argument");
    if (ws->truncation_count && !ws->truncations) return fail(LIP_ERR_INVALID_ARGUMENT, "null truncation list");
    *out = nullptr;
    return guarded([&] {
        auto t0 = std::chrono::steady_clock::now();
        lipspace::WitnessSpec spec;
        spec.kind = lipspace::parse_witness_kind(ws->kind);
        spec.alpha = ws->alpha;
        spec.beta = ws->beta;
        spec.b = ws->b;
        spec.p = ws->p;
        spec.q = ws->q;
        spec.epsilon = ws->epsilon;
        spec.r = ws->r;
        spec.xi = ws->xi;
        spec.scale = ws->scale;
        spec.truncations.assign(ws->truncations, ws->truncations + ws->truncation_count);
        auto t = lipspace::demonstrate_divergence(spec);
        auto* r = new lip_result;
        r->json = to_json(t).dump(2) + "\n";
        r->csv = lipspace::divergence_csv(t);
        r->hasCsv = true;
        r->summary = t.verdict;
        r->code = t.patternHeld ? 1 : 0;
        r->meta = meta_json(elapsed(t0));
        *out = r;
        return LIP_OK;
    });
}

size_t lip_suite_count(void) { return lipspace::suite_names().size(); }

const char* lip_suite_name(size_t i) {
    const auto& n = lipspace::suite_names();
    return i < n.size() ? n[i].c_str() : nullptr;
}

uint64_t lip_default_seed(void) { return lipspace::kDefaultSeed; }

lip_status lip_verify(const char* suite, uint64_t seed, int empty_corpus, lip_result** out) {
    if (!suite || !out) return fail(LIP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    if (!lipspace::is_suite(suite)) return fail(LIP_ERR_UNKNOWN_SUITE, std::string("unknown suite: ") + suite);
    return guarded([&] {
        auto t0 = std::chrono::steady_clock::now();
        lipspace::Corpus c;
        if (!empty_corpus) c = lipspace::make_corpus(seed);
        auto rep = lipspace::run_suite(suite, c);
        auto* r = new lip_result;
        r->json = to_json(rep).dump(2) + "\n";
        r->csv = lipspace::suite_csv(rep);
        r->hasCsv = true;
        r->summary = lipspace::suite_summary(rep);
        r->code = rep.pass() ? 1 : 0;
        lipspace::json m = lipspace::json::parse(meta_json(elapsed(t0)));
        m["seed"] = seed;
        lipspace::json crit = lipspace::json::array();
        for (const auto& cr : rep.criteria) crit.push_back({{"id", cr.id}, {"seconds", cr.seconds}});
        m["criteria"] = crit;
        r->meta = m.dump(2) + "\n";
        *out = r;
        return LIP_OK;
    });
}

const char* lip_result_text(const lip_result* r, lip_format fmt) {
    if (!r) return nullptr;
    if (fmt == LIP_FORMAT_CSV) return r->hasCsv ? r->csv.c_str() : nullptr;
    return r->json.c_str();
}

const char* lip_result_summary(const lip_result* r) { return r ? r->summary.c_str() : ""; }

const char* lip_result_meta(const lip_result* r) { return r ? r->meta.c_str() : ""; }

double lip_result_value(const lip_result* r) { return r ? r->value : 0.0; }

int lip_result_code(const lip_result* r) { return r ? r->code : 0; }

void lip_result_free(lip_result* r) { delete r; }

}  // extern "C"
