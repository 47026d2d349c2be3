#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "shiftlab/families.hpp"
#include "shiftlab/lp.hpp"
#include "shiftlab/rational.hpp"

namespace shiftlab {

/// Essential branching bounds of a leafless tree: beyond level
/// 2*exceptional_radius every child count is one of the values that occur
/// infinitely often, and those values lie in [essential_min, essential_max].
struct BranchingBounds {
    std::int64_t essential_min = 1;      // m
    std::int64_t essential_max = 1;      // M
    std::int64_t exceptional_radius = 0; // N
};

BranchingBounds branching_bounds(const TreeSpec& spec);

enum class KernelVerdict { Trivial, Nontrivial, Undetermined };

struct KernelClass {
    KernelVerdict verdict = KernelVerdict::Undetermined;
    std::string rule;  // the threshold inequality that decides the verdict
};

std::string verdict_name(KernelVerdict v);

/// Pure function of (m, M, p). Trivial when M = 1 and p < inf, or when
/// p <= 1 + log_M(m); nontrivial when p = inf, or when m > 1 and
/// p > 1 + log_m(M); otherwise undetermined (the open band). Threshold
/// comparisons are exact whenever p is (within 1e-12) a small rational.
KernelClass classify_kernel(const BranchingBounds& bounds, Exponent p);

/// Kernel element on the alternating (m,M)-tree: 1 at the root, zero on odd
/// levels, (-M)^(-k) on level 2k. Exact rationals; Sf vanishes identically
/// on the interior of the returned truncation.
LpFunction alternating_kernel(std::int64_t m, std::int64_t M, int depth,
                              std::size_t vertex_cap = Truncation::kDefaultVertexCap);

/// Kernel element built by the two-level recursion f(v) = -f(Par^2(v)) / beta(Par(v))
/// with f = 1 at the root and f = 0 on level 1; works on any leafless tree.
LpFunction inductive_kernel(const GraphFamily& tree, int depth,
                            std::size_t vertex_cap = Truncation::kDefaultVertexCap);

/// sigma_k = sum over |u| = 2k of |f(u)|^p, plus consecutive ratios
/// (NaN where the previous sum vanishes). Input must vanish on odd levels.
struct LevelPowerSums {
    double p = 2.0;
    std::vector<double> sums;
    std::vector<double> ratios;
};

LevelPowerSums level_power_sums(const LpFunction& f, Exponent p);
std::vector<Rational> level_power_sums_exact(const LpFunction& f, int p);

/// Partial sums sum_{j<=J} t_j / M^((j-1)p): the divergence witness showing
/// any unit-normalized kernel candidate on the stretched tree has infinite
/// p-norm.
std::vector<double> stretched_partial_sums(std::int64_t M, const TSequence& t, double p, int J);

}  // namespace shiftlab
