#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipspace {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact rational number, or +inf.
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(std::int64_t n) : num_(n), den_(1) {}
    ExtRational(std::int64_t n, std::int64_t d);

    static ExtRational infinity();
    static ExtRational parse(const std::string& text);

    bool is_inf() const { return inf_; }
    bool is_zero() const { return !inf_ && num_ == 0; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return !inf_ && den_ == 1; }

    double to_double() const;
    std::string str() const;

    // 1/0 = inf, 1/inf = 0
    ExtRational reciprocal() const;

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator/(const ExtRational& a, const ExtRational& b);
    ExtRational operator-() const;

    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

private:
    bool inf_ = false;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

ExtRational min(const ExtRational& a, const ExtRational& b);
ExtRational max(const ExtRational& a, const ExtRational& b);

enum class SpaceKind {
    Lebesgue,
    Sobolev,
    Besov,
    Lipschitz,
    LorentzZygmund,
    GrandLorentz,
    ClassicalLip,
    BV,
    BoundedContinuous
};

enum class Domain { Torus, Euclidean };

// Field use by kind:
//   Lebesgue        p
//   Sobolev         smooth=alpha, p
//   Besov           smooth=s, p, q, logExp=b        (weight (1+j)^b)
//   Lipschitz       smooth=alpha, p, q, logExp=b    (space Lip^{(alpha,-b)})
//   LorentzZygmund  p=r, q, logExp=b                (L_{r,q}(log L)_b)
//   GrandLorentz    p=r, q, logExp=c, secondaryLog=inner exponent (L^{(R)}_{r,q,c,p})
struct SpaceParams {
    SpaceKind kind = SpaceKind::Lebesgue;
    ExtRational smooth{0};
    ExtRational p{2};
    ExtRational q{ExtRational::infinity()};
    ExtRational logExp{0};
    ExtRational secondaryLog{0};
    int dim = 1;
    Domain domain = Domain::Torus;

    static SpaceParams lebesgue(ExtRational p, int d = 1, Domain dom = Domain::Torus);
    static SpaceParams sobolev(ExtRational alpha, ExtRational p, int d = 1, Domain dom = Domain::Torus);
    static SpaceParams besov(ExtRational s, ExtRational p, ExtRational q, ExtRational b, int d = 1,
                             Domain dom = Domain::Torus);
    static SpaceParams lipschitz(ExtRational alpha, ExtRational p, ExtRational q, ExtRational b, int d = 1,
                                 Domain dom = Domain::Torus);
    static SpaceParams lorentz_zygmund(ExtRational r, ExtRational q, ExtRational b, int d = 1,
                                       Domain dom = Domain::Torus);
    static SpaceParams grand(ExtRational r, ExtRational q, ExtRational c, ExtRational inner, int d = 1,
                             Domain dom = Domain::Torus);
    static SpaceParams simple(SpaceKind kind, int d = 1, Domain dom = Domain::Torus);

    friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

struct Violation {
    std::string constraint;
    std::string rule;
};

std::vector<Violation> validate(const SpaceParams& sp);
SpaceParams canonical_identities(const SpaceParams& sp);

// Kind:key=val,... grammar; throws ParseError.
SpaceParams parse_space(const std::string& text);
std::string to_string(const SpaceParams& sp);
std::string to_string(SpaceKind kind);

}  // namespace lipspace
