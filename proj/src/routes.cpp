#include <cmath>
#include <fstream>

#include "lipspace/haar.hpp"
#include "lipspace/moduli.hpp"
#include "lipspace/rearrange.hpp"
#include "lipspace/routes.hpp"

namespace lipspace {

namespace {

double dbl(const ExtRational& x) { return x.is_inf() ? kInf : x.to_double(); }

NormReport value_report(double v, const std::string& method, std::size_t N) {
    NormReport r;
    r.value = v;
    r.method = method;
    r.N = N;
    r.q = kInf;
    return r;
}

NormMethod resolve(const SpaceParams& sp, const NormInput& in, NormMethod m) {
    if (m != NormMethod::Auto) return m;
    if (!std::holds_alternative<PeriodicSignal>(in)) return NormMethod::Closed;
    switch (sp.kind) {
        case SpaceKind::Lebesgue:
        case SpaceKind::LorentzZygmund:
        case SpaceKind::GrandLorentz: return NormMethod::Direct;
        default: return NormMethod::Fourier;
    }
}

[[noreturn]] void unsupported(const SpaceParams& sp, NormMethod m, const std::string& what) {
    throw UnsupportedRoute("no " + to_string(m) + " route for " + to_string(sp) + " on " + what + " input");
}

PeriodicSignal as_signal(const NormInput& in, std::size_t N) {
    if (auto s = std::get_if<PeriodicSignal>(&in)) return *s;
    if (auto l = std::get_if<LacunarySpec>(&in)) return realize_signal(*l, N);
    return realize_signal(std::get<GMSequence>(in), N);
}

NormReport closed(const SpaceParams& sp, const NormInput& in) {
    if (auto l = std::get_if<LacunarySpec>(&in)) {
        if (sp.kind == SpaceKind::Besov) return lacunary_besov_norm(*l, dbl(sp.smooth), dbl(sp.logExp), dbl(sp.q));
        if (sp.kind == SpaceKind::Lipschitz)
            return lacunary_lipschitz_norm(*l, dbl(sp.smooth), dbl(sp.logExp), dbl(sp.q));
        unsupported(sp, NormMethod::Closed, "lacunary");
    }
    if (auto g = std::get_if<GMSequence>(&in)) {
        switch (sp.kind) {
            case SpaceKind::Lebesgue: return gm_lp_norm(*g, dbl(sp.p));
            case SpaceKind::Besov: return gm_besov_norm(*g, dbl(sp.smooth), dbl(sp.logExp), dbl(sp.p), dbl(sp.q));
            case SpaceKind::Lipschitz:
                return gm_lipschitz_norm(*g, dbl(sp.smooth), dbl(sp.logExp), dbl(sp.p), dbl(sp.q));
            case SpaceKind::LorentzZygmund: return gm_lorentz_zygmund_norm(*g, dbl(sp.p), dbl(sp.q), dbl(sp.logExp));
            case SpaceKind::GrandLorentz:
                return gm_grand_norm(*g, dbl(sp.p), dbl(sp.q), -dbl(sp.logExp), dbl(sp.secondaryLog));
            default: unsupported(sp, NormMethod::Closed, "GM");
        }
    }
    unsupported(sp, NormMethod::Closed, "sampled");
}

}  // namespace

std::string to_string(NormMethod m) {
    switch (m) {
        case NormMethod::Auto: return "auto";
        case NormMethod::Fourier: return "fourier";
        case NormMethod::Modulus: return "modulus";
        case NormMethod::Means: return "means";
        case NormMethod::Haar: return "haar";
        case NormMethod::Closed: return "closed";
        case NormMethod::Direct: return "direct";
    }
    return "?";
}

NormMethod parse_method(const std::string& s) {
    for (NormMethod m : {NormMethod::Auto, NormMethod::Fourier, NormMethod::Modulus, NormMethod::Means, NormMethod::Haar,
                         NormMethod::Closed, NormMethod::Direct})
        if (to_string(m) == s) return m;
    throw ParseError("unknown method: " + s);
}

InputKind parse_input_kind(const std::string& s) {
    if (s == "signal") return InputKind::Signal;
    if (s == "lacunary") return InputKind::Lacunary;
    if (s == "gm") return InputKind::GM;
    throw ParseError("unknown input kind: " + s);
}

NormInput load_input(const std::string& path, InputKind kind) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    switch (kind) {
        case InputKind::Signal: return read_signal_csv(in, path);
        case InputKind::Lacunary: return read_lacunary_csv(in);
        case InputKind::GM: return read_gm_csv(in);
    }
    throw ParseError("unknown input kind");
}

NormReport compute_norm(const SpaceParams& sp, const NormInput& in, const NormRequest& req) {
    if (sp.dim != 1 || sp.domain != Domain::Torus) throw UnsupportedRoute("norms are computed on the one-dimensional torus");
    const NormMethod m = resolve(sp, in, req.method);
    if (m == NormMethod::Closed) return closed(sp, in);

    if (!is_power_of_two(req.N) || req.N < 8) throw std::invalid_argument("N must be a power of two >= 8");
    const PeriodicSignal f = as_signal(in, req.N);
    const std::string what = std::holds_alternative<PeriodicSignal>(in) ? "signal" : "realized";

    switch (m) {
        case NormMethod::Fourier: {
            if (sp.kind == SpaceKind::Sobolev) return sobolev_norm(f, dbl(sp.smooth), dbl(sp.p));
            const DyadicPartition part = make_partition(f.size(), req.partition);
            if (sp.kind == SpaceKind::Besov) return besov_norm_fourier(f, part, sp);
            if (sp.kind == SpaceKind::Lipschitz) return lipschitz_norm_truncated_square(f, part, sp);
            break;
        }
        case NormMethod::Modulus: {
            if (sp.kind == SpaceKind::Lipschitz) return lipschitz_norm_modulus(f, sp, req.scales);
            if (sp.kind == SpaceKind::Besov)
                return besov_norm_modulus(f, sp, std::floor(dbl(sp.smooth)) + 1.0, req.scales);
            break;
        }
        case NormMethod::Means:
            if (sp.kind == SpaceKind::Lipschitz)
                return fourier_means_lip_norm(f, dbl(sp.smooth), dbl(sp.logExp), dbl(sp.p), dbl(sp.q));
            break;
        case NormMethod::Haar:
            if (sp.kind == SpaceKind::Lipschitz)
                return lip_sequence_norm(haar_analyze(f), dbl(sp.smooth), dbl(sp.logExp), dbl(sp.p), dbl(sp.q));
            break;
        case NormMethod::Direct: {
            if (sp.kind == SpaceKind::Lebesgue) return value_report(lp_norm(f, sp.p), "lebesgue", f.size());
            const RearrangedProfile prof = rearrangement(f);
            if (sp.kind == SpaceKind::LorentzZygmund)
                return value_report(lorentz_zygmund_norm(prof, dbl(sp.p), dbl(sp.q), dbl(sp.logExp)), "lorentz-zygmund",
                                    f.size());
            if (sp.kind == SpaceKind::GrandLorentz)
                return value_report(grand_norm(prof, dbl(sp.p), dbl(sp.q), dbl(sp.logExp), dbl(sp.secondaryLog)),
                                    "grand", f.size());
            break;
        }
        default: break;
    }
    unsupported(sp, m, what);
}

}  // namespace lipspace
