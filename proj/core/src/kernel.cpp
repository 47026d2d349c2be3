#include "shiftlab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shiftlab {

BranchingBounds branching_bounds(const TreeSpec& spec) {
    return std::visit(
        [](const auto& s) -> BranchingBounds {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AlternatingTreeSpec>) {
                return {std::min(s.m, s.M), std::max(s.m, s.M), 0};
            } else if constexpr (std::is_same_v<T, AlmostRegularTreeSpec>) {
                return {s.k - 1, s.k - 1, s.root_children == s.k - 1 ? 0 : 1};
            } else if constexpr (std::is_same_v<T, StretchedTreeSpec>) {
                return {1, s.M, 0};
            } else {
                // Only the default child count occurs infinitely often; the
                // listed prefix is the exceptional set.
                std::int64_t last_exceptional = -1;
                for (std::size_t j = 0; j < s.levels.size(); ++j)
                    if (s.levels[j] != s.default_beta) last_exceptional = static_cast<std::int64_t>(j);
                const std::int64_t except_radius = last_exceptional < 0 ? 0 : last_exceptional / 2 + 1;
                return {s.default_beta, s.default_beta, except_radius};
            }
        },
        spec);
}

std::string verdict_name(KernelVerdict v) {
    switch (v) {
        case KernelVerdict::Trivial: return "Trivial";
        case KernelVerdict::Nontrivial: return "Nontrivial";
        case KernelVerdict::Undetermined: return "Undetermined";
    }
    throw std::logic_error("unreachable");
}

namespace {

// Sign of base^(p-1) - target, exact whenever p-1 is (within 1e-12) a
// rational with denominator <= 64; doubles decide otherwise.
int compare_power(std::int64_t base, double p_minus_1, std::int64_t target) {
    std::int64_t pn = 1, qn = 0;  // convergent p_{-1}/q_{-1}
    std::int64_t pp = 0, qp = 1;  // convergent p_{-2}/q_{-2}
    double frac = p_minus_1;
    for (int it = 0; it < 24; ++it) {
        const double a = std::floor(frac);
        if (a > 1e15) break;
        const std::int64_t ai = static_cast<std::int64_t>(a);
        const std::int64_t cn = ai * pn + pp;
        const std::int64_t cd = ai * qn + qp;
        if (cd > 64) break;
        pp = pn;
        qp = qn;
        pn = cn;
        qn = cd;
        if (std::abs(p_minus_1 - static_cast<double>(cn) / static_cast<double>(cd)) < 1e-12) {
            const BigInt lhs = int_pow(BigInt(base), static_cast<std::uint64_t>(cn));
            const BigInt rhs = int_pow(BigInt(target), static_cast<std::uint64_t>(cd));
            return lhs < rhs ? -1 : lhs == rhs ? 0 : 1;
        }
        const double rem = frac - a;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    const double lhs = p_minus_1 * std::log(static_cast<double>(base));
    const double rhs = std::log(static_cast<double>(target));
    return lhs < rhs ? -1 : lhs == rhs ? 0 : 1;
}

}  // namespace

KernelClass classify_kernel(const BranchingBounds& bounds, Exponent p) {
    const std::int64_t m = bounds.essential_min;
    const std::int64_t M = bounds.essential_max;
    if (m < 1 || M < m) throw std::invalid_argument("branching bounds need 1 <= m <= M");

    if (p.is_infinite())
        return {KernelVerdict::Nontrivial, "p = inf on a leafless bounded-degree tree"};
    if (M == 1) return {KernelVerdict::Trivial, "M = 1 and p < inf"};

    // Trivial iff M^(p-1) <= m, i.e. p <= 1 + log_M(m); the boundary belongs
    // to the trivial side.
    if (compare_power(M, p.p() - 1.0, m) <= 0) return {KernelVerdict::Trivial, "p <= 1 + log_M(m)"};
    if (m > 1 && compare_power(m, p.p() - 1.0, M) > 0)
        return {KernelVerdict::Nontrivial, "m > 1 and p > 1 + log_m(M)"};
    return {KernelVerdict::Undetermined, "open band: 1 + log_M(m) < p <= 1 + log_m(M)"};
}

namespace {

std::shared_ptr<const Truncation> tree_truncation(const GraphFamily& tree, int depth,
                                                  std::size_t cap) {
    if (depth < 0 || depth % 2 != 0)
        throw std::invalid_argument("kernel depth must be even and >= 0 (kernels live on even levels)");
    return std::make_shared<const Truncation>(tree, depth + 1, cap);
}

}  // namespace

LpFunction alternating_kernel(std::int64_t m, std::int64_t M, int depth, std::size_t vertex_cap) {
    GraphFamily tree = make_tree(AlternatingTreeSpec{m, M});
    auto trunc = tree_truncation(tree, depth, vertex_cap);

    // value (-M)^(-k) on level 2k, cached per level
    std::vector<Rational> by_level(static_cast<std::size_t>(depth) + 2, Rational(0));
    Rational v = 1;
    for (int lvl = 0; lvl <= depth + 1; lvl += 2) {
        by_level[static_cast<std::size_t>(lvl)] = v;
        v /= -M;
    }
    std::vector<Rational> values(trunc->size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = by_level[static_cast<std::size_t>(trunc->level(i))];
    return LpFunction(trunc, std::move(values));
}

LpFunction inductive_kernel(const GraphFamily& tree, int depth, std::size_t vertex_cap) {
    if (!tree.is_tree()) throw std::invalid_argument("inductive kernel needs a tree family");
    auto trunc = tree_truncation(tree, depth, vertex_cap);
    const auto& beta = tree.beta_of_level();

    std::vector<Rational> values(trunc->size());
    // BFS order lists parents before children, so one pass suffices.
    for (std::size_t i = 0; i < trunc->size(); ++i) {
        const int lvl = trunc->level(i);
        if (lvl == 0) {
            values[i] = 1;
            continue;
        }
        if (lvl % 2 == 1) {
            values[i] = 0;
            continue;
        }
        const auto& path = std::get<TreePath>(trunc->vertex(i)).path;
        TreePath grandparent{std::vector<std::uint32_t>(path.begin(), path.end() - 2)};
        const auto gp_index = trunc->index_of(VertexId(std::move(grandparent)));
        if (!gp_index) throw std::logic_error("grandparent missing from truncation");
        const std::int64_t parent_beta = beta(lvl - 1);
        if (parent_beta < 1) throw std::invalid_argument("leaf encountered: tree is not leafless");
        values[i] = -values[*gp_index] / parent_beta;
    }
    return LpFunction(trunc, std::move(values));
}

namespace {

void require_even_support(const LpFunction& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        const bool nonzero = f.exact() ? f.exact_value(i) != 0 : f.value(i) != 0.0;
        if (nonzero && f.truncation().level(i) % 2 == 1)
            throw std::invalid_argument("level power sums expect a function vanishing on odd levels");
    }
}

}  // namespace

LevelPowerSums level_power_sums(const LpFunction& f, Exponent p) {
    if (p.is_infinite())
        throw std::invalid_argument("level power sums are for finite p (use sup diagnostics)");
    require_even_support(f);
    const int max_even = std::max(0, f.support_radius() - (f.support_radius() % 2 == 1 ? 1 : 0));

    LevelPowerSums out;
    out.p = p.p();
    out.sums.assign(static_cast<std::size_t>(max_even / 2) + 1, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int lvl = f.truncation().level(i);
        if (lvl % 2 != 0 || lvl > max_even) continue;
        const double a = std::abs(f.value(i));
        if (a != 0.0) out.sums[static_cast<std::size_t>(lvl / 2)] += std::pow(a, p.p());
    }
    for (std::size_t k = 0; k + 1 < out.sums.size(); ++k)
        out.ratios.push_back(out.sums[k] > 0.0 ? out.sums[k + 1] / out.sums[k]
                                               : std::numeric_limits<double>::quiet_NaN());
    return out;
}

std::vector<Rational> level_power_sums_exact(const LpFunction& f, int p) {
    if (p < 1) throw std::invalid_argument("integer exponent must be >= 1");
    if (!f.exact()) throw std::invalid_argument("exact level sums need an exact-rational function");
    require_even_support(f);
    const int max_even = std::max(0, f.support_radius() - (f.support_radius() % 2 == 1 ? 1 : 0));

    std::vector<Rational> sums(static_cast<std::size_t>(max_even / 2) + 1, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int lvl = f.truncation().level(i);
        if (lvl % 2 != 0 || lvl > max_even) continue;
        const Rational& v = f.exact_value(i);
        if (v == 0) continue;
        Rational a = v < 0 ? Rational(-v) : v;
        sums[static_cast<std::size_t>(lvl / 2)] += rat_pow(a, static_cast<std::uint64_t>(p));
    }
    return sums;
}

std::vector<double> stretched_partial_sums(std::int64_t M, const TSequence& t, double p, int J) {
    if (M < 2) throw std::invalid_argument("stretched tree needs M >= 2");
    if (J < 1) throw std::invalid_argument("J must be >= 1");
    if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");

    auto t_double = [&t](std::int64_t j) -> double {
        switch (t.kind) {
            case TSequence::Kind::Squares:
                return std::ldexp(1.0, static_cast<int>(std::min<std::int64_t>((j - 1) * (j - 1), 1023)));
            case TSequence::Kind::SelfPow:
                return std::pow(static_cast<double>(j), static_cast<double>(j - 1));
            case TSequence::Kind::Explicit:
                return static_cast<double>(t.value(j));
        }
        throw std::logic_error("unreachable");
    };

    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(J));
    double acc = 0.0;
    for (int j = 1; j <= J; ++j) {
        acc += t_double(j) * std::pow(static_cast<double>(M), -static_cast<double>(j - 1) * p);
        sums.push_back(acc);
    }
    return sums;
}

}  // namespace shiftlab
