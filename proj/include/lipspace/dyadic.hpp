#pragma once

#include <vector>

#include "lipspace/params.hpp"
#include "lipspace/report.hpp"
#include "lipspace/signal.hpp"

namespace lipspace {

enum class PartitionKind { Sharp, SmoothBump };

std::string to_string(PartitionKind k);
PartitionKind parse_partition(const std::string& s);

struct DyadicPartition {
    std::size_t N = 0;
    int J = 0;
    PartitionKind kind = PartitionKind::Sharp;
    // weights[j][i] is phi_j at the frequency of FFT bin i
    std::vector<std::vector<double>> weights;
};

// Profile: 1 on |t| <= 1, exp(1 - 1/(1 - (|t|-1)^2)) on 1 < |t| < 2, 0 beyond.
double bump_profile(double t);

DyadicPartition make_partition(std::size_t N, PartitionKind kind);

using DyadicBlocks = std::vector<PeriodicSignal>;

DyadicBlocks lp_blocks(const PeriodicSignal& f, const DyadicPartition& part);

NormReport besov_norm_fourier(const PeriodicSignal& f, const DyadicPartition& part, const SpaceParams& sp);

NormReport lipschitz_norm_truncated_square(const PeriodicSignal& f, const DyadicPartition& part,
                                           const SpaceParams& sp);

NormReport unified_scale_norm(const PeriodicSignal& f, const DyadicPartition& part, double alpha, double beta,
                              double b, double p, double q);

NormReport sobolev_norm(const PeriodicSignal& f, double alpha, double p);

NormReport fourier_means_lip_norm(const PeriodicSignal& f, double alpha, double b, double p, double q);

}  // namespace lipspace
