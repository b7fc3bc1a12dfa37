#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lipspace.h"

namespace {

enum Exit {
    kOk = 0,
    kUsage = 2,
    kInvalidSpace = 3,
    kOutsideTheory = 4,
    kWitnessInterval = 5,
    kIo = 6,
    kInternal = 10
};

struct Globals {
    std::string out;
    std::string meta;
    std::optional<std::string> format;
    std::uint64_t seed = lip_default_seed();
};

struct NormArgs {
    std::string space, input, method = "auto", inputKind = "signal", partition = "sharp";
    std::size_t N = 4096;
    int scales = -1;
};

struct EmbedArgs {
    std::string src, dst;
};

struct WitnessArgs {
    std::string family = "lacunary-besov-lip";
    double alpha = 0.5, beta = 0.0, b = 1.0, p = 2.0, q = 2.0, epsilon = 0.0, r = 0.0, xi = 0.0, scale = 1.0;
    std::vector<std::size_t> truncations;
};

struct VerifyArgs {
    std::string suite;
    bool emptyCorpus = false;
};

int status_exit(lip_status s) {
    switch (s) {
        case LIP_OK: return kOk;
        case LIP_ERR_PARSE:
        case LIP_ERR_INVALID_ARGUMENT:
        case LIP_ERR_UNKNOWN_SUITE: return kUsage;
        case LIP_ERR_INVALID_SPACE:
        case LIP_ERR_UNSUPPORTED: return kInvalidSpace;
        case LIP_ERR_WITNESS_INTERVAL: return kWitnessInterval;
        case LIP_ERR_IO: return kIo;
        default: return kInternal;
    }
}

int report_error(lip_status s) {
    std::cerr << "error: " << lip_status_name(s);
    const char* msg = lip_last_error();
    if (msg && *msg) std::cerr << ": " << msg;
    std::cerr << "\n";
    return status_exit(s);
}

bool write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) std::cerr << "error: cannot write " << path << "\n";
    return static_cast<bool>(f);
}

lip_format pick_format(const Globals& g, const char* fallback) {
    return g.format.value_or(fallback) == "csv" ? LIP_FORMAT_CSV : LIP_FORMAT_JSON;
}

int emit(const Globals& g, lip_result* r, lip_format fmt, const std::string& trailer = {}) {
    const char* text = lip_result_text(r, fmt);
    std::string payload = text ? text : "";
    payload += trailer;
    bool ok = write_text(g.out, payload);
    if (ok && !g.meta.empty()) ok = write_text(g.meta, lip_result_meta(r));
    return ok ? kOk : kIo;
}

struct SpaceHandle {
    lip_space* sp = nullptr;
    ~SpaceHandle() { lip_space_free(sp); }
};

struct ResultHandle {
    lip_result* r = nullptr;
    ~ResultHandle() { lip_result_free(r); }
};

int cmd_norm(const Globals& g, const NormArgs& a) {
    SpaceHandle sp;
    if (lip_status s = lip_space_parse(a.space.c_str(), &sp.sp)) return report_error(s);
    lip_norm_options opt;
    lip_norm_options_init(&opt);
    opt.method = a.method.c_str();
    opt.input_kind = a.inputKind.c_str();
    opt.partition = a.partition.c_str();
    opt.N = a.N;
    opt.scales = a.scales;
    ResultHandle res;
    if (lip_status s = lip_norm_file(sp.sp, a.input.c_str(), &opt, &res.r)) return report_error(s);
    return emit(g, res.r, pick_format(g, "json"));
}

int cmd_embed(const Globals& g, const EmbedArgs& a) {
    SpaceHandle src, dst;
    if (lip_status s = lip_space_parse(a.src.c_str(), &src.sp)) return report_error(s);
    if (lip_status s = lip_space_parse(a.dst.c_str(), &dst.sp)) return report_error(s);
    ResultHandle res;
    if (lip_status s = lip_embed(src.sp, dst.sp, &res.r)) return report_error(s);
    if (int rc = emit(g, res.r, pick_format(g, "json"))) return rc;
    switch (lip_result_code(res.r)) {
        case LIP_EMBEDS: return 0;
        case LIP_DOES_NOT_EMBED: return 1;
        default: return kOutsideTheory;
    }
}

int cmd_witness(const Globals& g, const WitnessArgs& a) {
    lip_witness_spec ws;
    lip_witness_spec_init(&ws);
    ws.kind = a.family.c_str();
    ws.alpha = a.alpha;
    ws.beta = a.beta;
    ws.b = a.b;
    ws.p = a.p;
    ws.q = a.q;
    ws.epsilon = a.epsilon;
    ws.r = a.r;
    ws.xi = a.xi;
    ws.scale = a.scale;
    ws.truncations = a.truncations.data();
    ws.truncation_count = a.truncations.size();
    ResultHandle res;
    if (lip_status s = lip_witness(&ws, &res.r)) return report_error(s);
    lip_format fmt = pick_format(g, "csv");
    std::string trailer = fmt == LIP_FORMAT_CSV ? std::string("# ") + lip_result_summary(res.r) + "\n" : "";
    return emit(g, res.r, fmt, trailer);
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
    ResultHandle res;
    if (lip_status s = lip_verify(a.suite.c_str(), g.seed, a.emptyCorpus ? 1 : 0, &res.r)) return report_error(s);
    std::cerr << lip_result_summary(res.r);
    if (int rc = emit(g, res.r, pick_format(g, "json"))) return rc;
    return lip_result_code(res.r) ? 0 : 1;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// key=value lines; '#' starts a comment line.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::FileError::Missing(path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ConversionError(path + ":" + std::to_string(lineno) + ": expected key=value");
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

bool mentions(const std::vector<std::string>& args, const std::string& flag) {
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
}

bool truthy(const std::string& v) { return v == "1" || v == "true" || v == "yes" || v == "on"; }

// Splices config entries in front of the command-line arguments; explicit flags win.
std::vector<std::string> merge_config(CLI::App& app, const std::vector<std::string>& argv) {
    std::vector<std::string> rest;
    std::string configPath;
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i] == "--config" && i + 1 < argv.size()) {
            configPath = argv[++i];
        } else if (argv[i].rfind("--config=", 0) == 0) {
            configPath = argv[i].substr(9);
        } else {
            rest.push_back(argv[i]);
        }
    }
    if (configPath.empty()) return argv;

    auto entries = read_config(configPath);
    std::string command;
    for (const auto& a : rest)
        if (app.get_subcommand_no_throw(a)) {
            command = a;
            break;
        }
    for (const auto& [k, v] : entries)
        if (k == "command") {
            if (!app.get_subcommand_no_throw(v)) throw CLI::ConversionError("unknown command in config: " + v);
            if (command.empty()) command = v;
        }
    if (command.empty()) throw CLI::RequiredError("a command (norm, embed, witness, verify)");

    CLI::App* sub = app.get_subcommand(command);
    std::vector<std::string> head, tail;
    for (const auto& [k, v] : entries) {
        if (k == "command") continue;
        const std::string flag = "--" + k;
        bool global = app.get_option_no_throw(flag) != nullptr;
        const CLI::Option* opt = global ? app.get_option_no_throw(flag) : sub->get_option_no_throw(flag);
        if (!opt) throw CLI::ConversionError("unknown config key '" + k + "' for " + command);
        if (mentions(rest, flag)) continue;
        auto& dst = global ? head : tail;
        if (opt->get_expected_min() == 0) {
            if (truthy(v)) dst.push_back(flag);
        } else {
            dst.push_back(flag);
            dst.push_back(v);
        }
    }

    std::vector<std::string> merged{argv[0]};
    merged.insert(merged.end(), head.begin(), head.end());
    merged.push_back(command);
    merged.insert(merged.end(), tail.begin(), tail.end());
    for (const auto& a : rest)
        if (a != command) merged.push_back(a);
    return merged;
}

void apply_thread_env() {
    const char* env = std::getenv("LIPSPACE_THREADS");
    int n = 0;
    if (env && *env) {
        try {
            n = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring LIPSPACE_THREADS=" << env << "\n";
        }
    }
    lip_set_threads(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Function-space norms, embedding decisions and sharpness witnesses"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::string configPath;
    app.add_option("--out", g.out, "Output file (default: standard output)");
    app.add_option("--meta", g.meta, "Sidecar file for run metadata");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "Corpus seed for verify");
    app.add_option("--config", configPath, "key=value file mirroring the flags");

    NormArgs na;
    auto* norm = app.add_subcommand("norm", "Norm of a signal or coefficient file");
    norm->add_option("--space", na.space, "Space string, e.g. Lip:alpha=1/2,p=2,q=2,b=1")->required();
    norm->add_option("--input", na.input, "Input CSV")->required();
    norm->add_option("--method", na.method, "auto, fourier, modulus, means, haar, closed, direct");
    norm->add_option("--input-kind", na.inputKind, "signal, lacunary or gm");
    norm->add_option("--partition", na.partition, "sharp or bump");
    norm->add_option("--N", na.N, "Grid size for realizing coefficient inputs");
    norm->add_option("--scales", na.scales, "Modulus scales (-1 for the default)");

    EmbedArgs ea;
    auto* embed = app.add_subcommand("embed", "Decide an embedding between two spaces");
    embed->add_option("--src", ea.src, "Source space")->required();
    embed->add_option("--dst", ea.dst, "Target space")->required();

    WitnessArgs wa;
    auto* witness = app.add_subcommand("witness", "Divergence table for a sharpness witness");
    witness->add_option("--family", wa.family, "lacunary-besov-lip, lacunary-lip-besov or gm-lip-lz");
    witness->add_option("--alpha", wa.alpha);
    witness->add_option("--beta", wa.beta);
    witness->add_option("--b", wa.b);
    witness->add_option("--p", wa.p);
    witness->add_option("--q", wa.q);
    witness->add_option("--epsilon", wa.epsilon);
    witness->add_option("--r", wa.r);
    witness->add_option("--xi", wa.xi);
    witness->add_option("--scale", wa.scale);
    witness->add_option("--truncations", wa.truncations, "Comma-separated truncation sizes")->delimiter(',');

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run an acceptance suite on the bundled corpus");
    verify->add_option("suite,--suite", va.suite, "equivalence, modulus-properties, hardy, engine-table, haar")
        ->required();
    verify->add_flag("--empty-corpus", va.emptyCorpus, "Run on an empty corpus");

    std::vector<std::string> args(argv, argv + argc);
    try {
        args = merge_config(app, args);
        std::vector<const char*> raw;
        for (const auto& a : args) raw.push_back(a.c_str());
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    apply_thread_env();
    if (norm->parsed()) return cmd_norm(g, na);
    if (embed->parsed()) return cmd_embed(g, ea);
    if (witness->parsed()) return cmd_witness(g, wa);
    return cmd_verify(g, va);
}
