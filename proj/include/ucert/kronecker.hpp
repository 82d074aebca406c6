#pragma once

#include <optional>

#include "ucert/arith.hpp"
#include "ucert/partition.hpp"

namespace ucert {

struct KroneckerOptions {
    /// Refuse n above this (p(n)^2 character evaluations).
    int max_n = 20;
    /// Worker threads for the parallel kernel; 0 means the OpenMP default.
    int threads = 0;
};

/// g_mu = sum over cycle types lambda of chi^{mu1}_lambda chi^{mu2}_lambda chi^{mu3}_lambda / z_lambda.
/// OpenMP-parallel over lambda; the result is independent of scheduling.
Integer kronecker(const PartitionTriple& mu, const KroneckerOptions& opts = {});

/// Single-threaded reference for the same sum.
Integer kronecker_serial(const PartitionTriple& mu, const KroneckerOptions& opts = {});

/// Rough operation count used in the feasibility message.
double kronecker_cost_estimate(int n);

enum class Comparability { XiBelowTau, TauBelowXi, Equal };

/// Dominance comparison of xi_d with tau, or nullopt when incomparable.
std::optional<Comparability> saxl_dominance_witness(int d, const Partition& tau);

const char* to_string(Comparability c);

}  // namespace ucert
