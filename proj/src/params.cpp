#include "lipspace/params.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace lipspace {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

ExtRational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    return ExtRational(narrow(n), narrow(d));
}

}  // namespace

ExtRational::ExtRational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = n;
    den_ = d;
}

ExtRational ExtRational::infinity() {
    ExtRational r;
    r.inf_ = true;
    r.num_ = 1;
    r.den_ = 0;
    return r;
}

ExtRational ExtRational::parse(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text == "inf" || text == "+inf" || text == "infinity") return infinity();
    if (text.empty()) throw ParseError("empty rational");
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        if (s.empty()) throw ParseError("malformed rational '" + raw + "'");
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') i = 1;
        if (i == s.size()) throw ParseError("malformed rational '" + raw + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("malformed rational '" + raw + "'");
        try {
            return std::stoll(s);
        } catch (const std::exception&) {
            throw ParseError("rational out of range '" + raw + "'");
        }
    };
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = parse_int(text.substr(0, slash));
        std::int64_t d = parse_int(text.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + raw + "'");
        return ExtRational(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        if (fp.empty() || fp.size() > 15) throw ParseError("malformed rational '" + raw + "'");
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed rational '" + raw + "'");
        std::int64_t scale = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
        std::int64_t whole = parse_int(ip);
        std::int64_t frac = std::stoll(fp);
        i128 n = static_cast<i128>(whole < 0 ? -whole : whole) * scale + frac;
        if (neg) n = -n;
        return make(n, scale);
    }
    return ExtRational(parse_int(text));
}

double ExtRational::to_double() const {
    if (inf_) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExtRational::str() const {
    if (inf_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

ExtRational ExtRational::reciprocal() const {
    if (inf_) return ExtRational(0);
    if (num_ == 0) return infinity();
    return ExtRational(den_, num_);
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.inf_ || b.inf_) return ExtRational::infinity();
    return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                static_cast<i128>(a.den_) * b.den_);
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) {
    if (b.inf_) throw std::domain_error("subtracting infinity");
    if (a.inf_) return ExtRational::infinity();
    return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                static_cast<i128>(a.den_) * b.den_);
}

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
    if (a.inf_ || b.inf_) {
        const ExtRational& other = a.inf_ ? b : a;
        if (!other.inf_ && other.num_ == 0) throw std::domain_error("0 * inf");
        if (!other.inf_ && other.num_ < 0) throw std::domain_error("negative infinity");
        return ExtRational::infinity();
    }
    return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

ExtRational operator/(const ExtRational& a, const ExtRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * b.reciprocal();
}

ExtRational ExtRational::operator-() const {
    if (inf_) throw std::domain_error("negative infinity");
    return ExtRational(-num_, den_);
}

bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.inf_ || b.inf_) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }
ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

SpaceParams SpaceParams::lebesgue(ExtRational p, int d, Domain dom) {
    SpaceParams s;
    s.kind = SpaceKind::Lebesgue;
    s.p = p;
    s.dim = d;
    s.domain = dom;
    return s;
}

SpaceParams SpaceParams::sobolev(ExtRational alpha, ExtRational p, int d, Domain dom) {
    SpaceParams s = lebesgue(p, d, dom);
    s.kind = SpaceKind::Sobolev;
    s.smooth = alpha;
    return s;
}

SpaceParams SpaceParams::besov(ExtRational sm, ExtRational p, ExtRational q, ExtRational b, int d, Domain dom) {
    SpaceParams s = lebesgue(p, d, dom);
    s.kind = SpaceKind::Besov;
    s.smooth = sm;
    s.q = q;
    s.logExp = b;
    return s;
}

SpaceParams SpaceParams::lipschitz(ExtRational alpha, ExtRational p, ExtRational q, ExtRational b, int d,
                                   Domain dom) {
    SpaceParams s = besov(alpha, p, q, b, d, dom);
    s.kind = SpaceKind::Lipschitz;
    return s;
}

SpaceParams SpaceParams::lorentz_zygmund(ExtRational r, ExtRational q, ExtRational b, int d, Domain dom) {
    SpaceParams s = lebesgue(r, d, dom);
    s.kind = SpaceKind::LorentzZygmund;
    s.q = q;
    s.logExp = b;
    return s;
}

SpaceParams SpaceParams::grand(ExtRational r, ExtRational q, ExtRational c, ExtRational inner, int d, Domain dom) {
    SpaceParams s = lorentz_zygmund(r, q, c, d, dom);
    s.kind = SpaceKind::GrandLorentz;
    s.secondaryLog = inner;
    return s;
}

SpaceParams SpaceParams::simple(SpaceKind kind, int d, Domain dom) {
    SpaceParams s;
    s.kind = kind;
    s.dim = d;
    s.domain = dom;
    s.p = ExtRational::infinity();
    return s;
}

std::vector<Violation> validate(const SpaceParams& sp) {
    std::vector<Violation> out;
    const ExtRational one(1), zero(0);
    if (sp.dim < 1) out.push_back({"d >= 1 required", "dimension"});
    bool uses_p = sp.kind != SpaceKind::ClassicalLip && sp.kind != SpaceKind::BV &&
                  sp.kind != SpaceKind::BoundedContinuous;
    bool uses_q = sp.kind == SpaceKind::Besov || sp.kind == SpaceKind::Lipschitz ||
                  sp.kind == SpaceKind::LorentzZygmund || sp.kind == SpaceKind::GrandLorentz;
    if (uses_p && sp.p < one) out.push_back({"1 <= p <= inf required", "integrability"});
    if (uses_q && sp.q <= zero) out.push_back({"0 < q <= inf required", "fine index"});
    switch (sp.kind) {
        case SpaceKind::Lipschitz:
            if (sp.smooth <= zero) out.push_back({"alpha > 0 required", "Lipschitz smoothness"});
            if (sp.q.is_inf()) {
                if (sp.logExp < zero)
                    out.push_back({"b >= 0 required when q = inf", "nontrivial Lipschitz space"});
            } else if (sp.q > zero && sp.logExp <= sp.q.reciprocal()) {
                out.push_back({"b > 1/q required", "nontrivial Lipschitz space"});
            }
            break;
        case SpaceKind::Sobolev:
            if (sp.p <= one || sp.p.is_inf()) out.push_back({"1 < p < inf required", "Bessel potential space"});
            break;
        case SpaceKind::LorentzZygmund:
            if (sp.p.is_inf()) out.push_back({"r < inf required", "Lorentz-Zygmund space"});
            break;
        case SpaceKind::GrandLorentz:
            if (sp.p <= one || sp.p.is_inf()) out.push_back({"1 < r < inf required", "grand space"});
            if (sp.secondaryLog <= zero || sp.secondaryLog.is_inf())
                out.push_back({"0 < inner exponent < inf required", "grand space"});
            if (sp.q.is_inf()) {
                if (sp.logExp > zero) out.push_back({"outer log exponent <= 0 required when q = inf", "nontrivial grand space"});
            } else if (sp.q > zero && !(sp.logExp < -sp.q.reciprocal())) {
                out.push_back({"outer log exponent < -1/q required", "nontrivial grand space"});
            }
            break;
        default:
            break;
    }
    return out;
}

SpaceParams canonical_identities(const SpaceParams& sp) {
    SpaceParams s = sp;
    const ExtRational one(1), zero(0);
    if (s.kind == SpaceKind::Lipschitz && s.logExp == zero && s.q.is_inf()) {
        if (s.p > one && !s.p.is_inf()) {
            s = SpaceParams::sobolev(s.smooth, s.p, s.dim, s.domain);
        } else if (s.p == one && s.smooth == one) {
            s = SpaceParams::simple(SpaceKind::BV, s.dim, s.domain);
        }
    }
    if (s.kind == SpaceKind::Sobolev && s.smooth == zero) s = SpaceParams::lebesgue(s.p, s.dim, s.domain);
    return s;
}

std::string to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::Lebesgue: return "L";
        case SpaceKind::Sobolev: return "Sobolev";
        case SpaceKind::Besov: return "Besov";
        case SpaceKind::Lipschitz: return "Lip";
        case SpaceKind::LorentzZygmund: return "LZ";
        case SpaceKind::GrandLorentz: return "Grand";
        case SpaceKind::ClassicalLip: return "ClassicalLip";
        case SpaceKind::BV: return "BV";
        case SpaceKind::BoundedContinuous: return "C";
    }
    return "?";
}

namespace {

struct KindInfo {
    SpaceKind kind;
    std::vector<std::string> required;
};

const std::map<std::string, KindInfo>& kind_table() {
    static const std::map<std::string, KindInfo> table = {
        {"L", {SpaceKind::Lebesgue, {"p"}}},
        {"Lebesgue", {SpaceKind::Lebesgue, {"p"}}},
        {"Linf", {SpaceKind::Lebesgue, {}}},
        {"H", {SpaceKind::Sobolev, {"alpha", "p"}}},
        {"Sobolev", {SpaceKind::Sobolev, {"alpha", "p"}}},
        {"B", {SpaceKind::Besov, {"s", "p", "q", "b"}}},
        {"Besov", {SpaceKind::Besov, {"s", "p", "q", "b"}}},
        {"Lip", {SpaceKind::Lipschitz, {"alpha", "p", "q", "b"}}},
        {"Lipschitz", {SpaceKind::Lipschitz, {"alpha", "p", "q", "b"}}},
        {"LZ", {SpaceKind::LorentzZygmund, {"r", "q", "b"}}},
        {"Grand", {SpaceKind::GrandLorentz, {"r", "q", "b", "p"}}},
        {"ClassicalLip", {SpaceKind::ClassicalLip, {}}},
        {"BV", {SpaceKind::BV, {}}},
        {"C", {SpaceKind::BoundedContinuous, {}}},
    };
    return table;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

SpaceParams parse_space(const std::string& raw) {
    std::string text = trim(raw);
    auto colon = text.find(':');
    std::string name = trim(text.substr(0, colon));
    auto it = kind_table().find(name);
    if (it == kind_table().end()) throw ParseError("unknown space kind '" + name + "'");
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos) throw ParseError("expected key=value, got '" + item + "'");
            std::string key = trim(item.substr(0, eq));
            if (kv.count(key)) throw ParseError("duplicate key '" + key + "'");
            kv[key] = trim(item.substr(eq + 1));
        }
    }
    const KindInfo& info = it->second;
    std::vector<std::string> allowed = info.required;
    allowed.push_back("d");
    allowed.push_back("dom");
    for (const auto& [k, v] : kv) {
        bool ok = false;
        for (const auto& a : allowed) ok = ok || a == k;
        if (!ok) throw ParseError("unknown key '" + k + "' for kind " + name);
    }
    for (const auto& r : info.required)
        if (!kv.count(r)) throw ParseError("missing key '" + r + "' for kind " + name);
    auto get = [&](const std::string& k) { return ExtRational::parse(kv.at(k)); };

    int d = 1;
    if (kv.count("d")) {
        ExtRational dr = get("d");
        if (!dr.is_integer() || dr.num() < 1 || dr.num() > 1000) throw ParseError("d must be a positive integer");
        d = static_cast<int>(dr.num());
    }
    Domain dom = Domain::Torus;
    if (kv.count("dom")) {
        const std::string& v = kv.at("dom");
        if (v == "T" || v == "torus") dom = Domain::Torus;
        else if (v == "R" || v == "euclidean") dom = Domain::Euclidean;
        else throw ParseError("dom must be T or R");
    }

    switch (info.kind) {
        case SpaceKind::Lebesgue:
            return SpaceParams::lebesgue(name == "Linf" ? ExtRational::infinity() : get("p"), d, dom);
        case SpaceKind::Sobolev: return SpaceParams::sobolev(get("alpha"), get("p"), d, dom);
        case SpaceKind::Besov: return SpaceParams::besov(get("s"), get("p"), get("q"), get("b"), d, dom);
        case SpaceKind::Lipschitz: return SpaceParams::lipschitz(get("alpha"), get("p"), get("q"), get("b"), d, dom);
        case SpaceKind::LorentzZygmund: return SpaceParams::lorentz_zygmund(get("r"), get("q"), get("b"), d, dom);
        case SpaceKind::GrandLorentz: return SpaceParams::grand(get("r"), get("q"), get("b"), get("p"), d, dom);
        default: return SpaceParams::simple(info.kind, d, dom);
    }
}

std::string to_string(const SpaceParams& sp) {
    std::string tail = "d=" + std::to_string(sp.dim) + ",dom=" + (sp.domain == Domain::Torus ? "T" : "R");
    switch (sp.kind) {
        case SpaceKind::Lebesgue: return "L:p=" + sp.p.str() + "," + tail;
        case SpaceKind::Sobolev: return "Sobolev:alpha=" + sp.smooth.str() + ",p=" + sp.p.str() + "," + tail;
        case SpaceKind::Besov:
            return "Besov:s=" + sp.smooth.str() + ",p=" + sp.p.str() + ",q=" + sp.q.str() + ",b=" + sp.logExp.str() +
                   "," + tail;
        case SpaceKind::Lipschitz:
            return "Lip:alpha=" + sp.smooth.str() + ",p=" + sp.p.str() + ",q=" + sp.q.str() +
                   ",b=" + sp.logExp.str() + "," + tail;
        case SpaceKind::LorentzZygmund:
            return "LZ:r=" + sp.p.str() + ",q=" + sp.q.str() + ",b=" + sp.logExp.str() + "," + tail;
        case SpaceKind::GrandLorentz:
            return "Grand:r=" + sp.p.str() + ",q=" + sp.q.str() + ",b=" + sp.logExp.str() +
                   ",p=" + sp.secondaryLog.str() + "," + tail;
        default: return to_string(sp.kind) + ":" + tail;
    }
}

}  // namespace lipspace
