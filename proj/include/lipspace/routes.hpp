#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

#include "lipspace/closed_forms.hpp"
#include "lipspace/dyadic.hpp"
#include "lipspace/params.hpp"
#include "lipspace/report.hpp"
#include "lipspace/signal.hpp"

namespace lipspace {

enum class NormMethod { Auto, Fourier, Modulus, Means, Haar, Closed, Direct };
enum class InputKind { Signal, Lacunary, GM };

std::string to_string(NormMethod m);
NormMethod parse_method(const std::string& s);
InputKind parse_input_kind(const std::string& s);

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using NormInput = std::variant<PeriodicSignal, LacunarySpec, GMSequence>;

// Throws IoError when the file cannot be read, ParseError on malformed content.
NormInput load_input(const std::string& path, InputKind kind);

struct NormRequest {
    NormMethod method = NormMethod::Auto;
    PartitionKind partition = PartitionKind::Sharp;
    std::size_t N = 4096;  // grid for coefficient inputs on signal routes
    int scales = -1;       // modulus scales, -1 for the default
};

// The space / method / input combination has no implemented route.
class UnsupportedRoute : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

NormReport compute_norm(const SpaceParams& sp, const NormInput& in, const NormRequest& req = {});

}  // namespace lipspace
