#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shiftlab/kernel.hpp"

using namespace shiftlab;

namespace {

// exact check that Sf vanishes at every interior vertex
bool shift_vanishes_on_interior(const LpFunction& f) {
    const auto image = apply_shift(f);
    const auto& trunc = f.truncation();
    const std::size_t end = trunc.first_index_above_level(trunc.interior_radius());
    for (std::size_t i = 0; i < end; ++i)
        if (image.function.exact_value(i) != 0) return false;
    return true;
}

Rational value_at_first_vertex_of_level(const LpFunction& f, int level) {
    const auto& trunc = f.truncation();
    for (std::size_t i = 0; i < trunc.size(); ++i)
        if (trunc.level(i) == level) return f.exact_value(i);
    throw std::out_of_range("no such level");
}

}  // namespace

TEST_CASE("alternating kernel values") {
    const auto f = alternating_kernel(2, 4, 6);
    CHECK(value_at_first_vertex_of_level(f, 0) == 1);
    CHECK(value_at_first_vertex_of_level(f, 2) == Rational(-1, 4));
    CHECK(value_at_first_vertex_of_level(f, 4) == Rational(1, 16));
    CHECK(value_at_first_vertex_of_level(f, 6) == Rational(-1, 64));
    for (int odd : {1, 3, 5}) CHECK(value_at_first_vertex_of_level(f, odd) == 0);
    // all vertices of one level share the value
    const auto& trunc = f.truncation();
    for (std::size_t i = 0; i < trunc.size(); ++i)
        CHECK(f.exact_value(i) == value_at_first_vertex_of_level(f, trunc.level(i)));

    CHECK_THROWS(alternating_kernel(2, 4, 7));  // odd depth
}

TEST_CASE("inductive kernel reproduces the closed form on alternating trees") {
    const auto closed = alternating_kernel(2, 4, 10);
    const auto inductive = inductive_kernel(make_tree(AlternatingTreeSpec{2, 4}), 10);
    REQUIRE(closed.size() == inductive.size());
    for (std::size_t i = 0; i < closed.size(); ++i)
        CHECK(closed.exact_value(i) == inductive.exact_value(i));
}

TEST_CASE("inductive kernel on the 3-regular tree") {
    const auto f = inductive_kernel(make_tree(AlmostRegularTreeSpec{3, 3}), 6);
    CHECK(value_at_first_vertex_of_level(f, 0) == 1);
    CHECK(value_at_first_vertex_of_level(f, 1) == 0);
    CHECK(value_at_first_vertex_of_level(f, 2) == Rational(-1, 2));
    CHECK(value_at_first_vertex_of_level(f, 4) == Rational(1, 4));
}

TEST_CASE("kernel constructions annihilate the shift exactly") {
    CHECK(shift_vanishes_on_interior(alternating_kernel(2, 4, 12)));
    CHECK(shift_vanishes_on_interior(alternating_kernel(1, 3, 12)));
    CHECK(shift_vanishes_on_interior(inductive_kernel(make_tree(AlternatingTreeSpec{2, 4}), 8)));
    CHECK(shift_vanishes_on_interior(inductive_kernel(make_tree(AlmostRegularTreeSpec{3, 3}), 12)));
    CHECK(shift_vanishes_on_interior(inductive_kernel(make_tree(AlmostRegularTreeSpec{4, 4}), 8)));
    CHECK(shift_vanishes_on_interior(
        inductive_kernel(make_tree(StretchedTreeSpec{2, TSequence::squares()}), 12)));
    CHECK(shift_vanishes_on_interior(
        inductive_kernel(make_tree(ExplicitBetaSpec{{3, 1, 2}, 2}), 12)));
}

TEST_CASE("floating mode: |Sf| stays under the zero test threshold") {
    const auto exact = inductive_kernel(make_tree(AlternatingTreeSpec{3, 5}), 8);
    const auto f = to_floating(exact);
    const auto image = apply_shift(f);
    const auto& trunc = f.truncation();
    const std::size_t end = trunc.first_index_above_level(trunc.interior_radius());
    for (std::size_t i = 0; i < end; ++i) CHECK(std::abs(image.function.value(i)) < 1e-12);
}

TEST_CASE("finite-support kernels exist between leaves: the even-path example") {
    // Documentation example, not an operation: on a path u_0 ~ u_1 ~ ... ~ u_m
    // between two degree-1 vertices with even m and degree-2 interior, the
    // alternating assignment f(u_0) = 1, f(u_2) = -1, f(u_4) = 1, ... lies in
    // the kernel of the shift and has finite support, for every p.
    const int m = 8;
    std::vector<std::vector<int>> adjacency(m + 1);
    for (int i = 0; i < m; ++i) {
        adjacency[static_cast<std::size_t>(i)].push_back(i + 1);
        adjacency[static_cast<std::size_t>(i) + 1].push_back(i);
    }
    std::vector<int> f(m + 1, 0);
    for (int i = 0; i <= m; i += 2) f[static_cast<std::size_t>(i)] = (i % 4 == 0) ? 1 : -1;
    for (int v = 0; v <= m; ++v) {
        int sum = 0;
        for (int u : adjacency[static_cast<std::size_t>(v)]) sum += f[static_cast<std::size_t>(u)];
        CHECK(sum == 0);
    }
}

TEST_CASE("level power sums of the alternating kernel") {
    const auto f = alternating_kernel(2, 4, 10);
    {
        const auto exact = level_power_sums_exact(f, 2);
        REQUIRE(exact.size() == 6);
        for (std::size_t k = 0; k < exact.size(); ++k)
            CHECK(exact[k] == Rational(1, std::int64_t(1) << k));  // sigma_k = 2^{-k}
        const auto sums = level_power_sums(f, Exponent::of(2.0));
        for (double r : sums.ratios) CHECK(r == doctest::Approx(0.5).epsilon(1e-12));
    }
    {
        // threshold case p = 1 + log_4(2): the level sums stall at ratio 1
        const auto sums = level_power_sums(f, Exponent::of(1.5));
        for (double r : sums.ratios) CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS(level_power_sums(f, Exponent::infinity()));
}

TEST_CASE("level sums of the inductive kernel on the 3-regular tree") {
    const auto f = inductive_kernel(make_tree(AlmostRegularTreeSpec{3, 3}), 10);
    const auto exact = level_power_sums_exact(f, 2);
    REQUIRE(exact.size() == 6);
    CHECK(exact[0] == 1);
    // sigma_k = 3/2 for k >= 1, so the ratio is exactly M/m^{p-1} = 1
    for (std::size_t k = 1; k < exact.size(); ++k) CHECK(exact[k] == Rational(3, 2));
}

TEST_CASE("sandwich: ratios obey the theorem bounds beyond the exceptional radius") {
    struct Case {
        TreeSpec spec;
        int depth;
    };
    const std::vector<Case> cases = {
        {AlternatingTreeSpec{2, 4}, 10},  {AlternatingTreeSpec{3, 5}, 8},
        {AlmostRegularTreeSpec{4, 2}, 8}, {ExplicitBetaSpec{{3, 1, 2}, 2}, 12},
    };
    for (const auto& [spec, depth] : cases) {
        const auto bounds = branching_bounds(spec);
        const auto f = inductive_kernel(make_tree(spec), depth);
        for (double p : {1.5, 2.0, 3.0}) {
            const auto sums = level_power_sums(f, Exponent::of(p));
            const double upper = static_cast<double>(bounds.essential_max) /
                                 std::pow(static_cast<double>(bounds.essential_min), p - 1.0);
            for (std::size_t k = static_cast<std::size_t>(bounds.exceptional_radius);
                 k < sums.ratios.size(); ++k) {
                CHECK(sums.ratios[k] <= upper * (1.0 + 1e-12));
            }
        }
    }

    // trivial-direction bound: sigma_k >= C (m / M^{p-1})^k, saturated exactly
    // by the alternating construction
    for (auto [m, M] : {std::pair<std::int64_t, std::int64_t>{2, 4}, {3, 3}, {2, 5}}) {
        const auto f = alternating_kernel(m, M, 10);
        const auto exact = level_power_sums_exact(f, 2);
        const Rational step = Rational(m, M);  // m / M^{p-1} at p = 2
        Rational expected = 1;
        for (std::size_t k = 0; k < exact.size(); ++k) {
            CHECK(exact[k] == expected);
            expected *= step;
        }
    }
}

TEST_CASE("branching bounds per tree kind") {
    {
        const auto b = branching_bounds(AlternatingTreeSpec{2, 4});
        CHECK(b.essential_min == 2);
        CHECK(b.essential_max == 4);
        CHECK(b.exceptional_radius == 0);
    }
    {
        const auto b = branching_bounds(AlmostRegularTreeSpec{3, 3});
        CHECK(b.essential_min == 2);
        CHECK(b.essential_max == 2);
        CHECK(b.exceptional_radius == 1);  // the root has 3 children, not k-1
    }
    {
        const auto b = branching_bounds(StretchedTreeSpec{2, TSequence::squares()});
        CHECK(b.essential_min == 1);
        CHECK(b.essential_max == 2);
    }
    {
        const auto b = branching_bounds(ExplicitBetaSpec{{3, 1, 2}, 2});
        CHECK(b.essential_min == 2);
        CHECK(b.essential_max == 2);
        CHECK(b.exceptional_radius == 1);  // last off-default level is 1
    }
}

TEST_CASE("classifier thresholds") {
    const BranchingBounds b24{2, 4, 0};
    CHECK(classify_kernel(b24, Exponent::of(1.4)).verdict == KernelVerdict::Trivial);
    CHECK(classify_kernel(b24, Exponent::of(1.5)).verdict == KernelVerdict::Trivial);  // boundary
    CHECK(classify_kernel(b24, Exponent::of(2.0)).verdict == KernelVerdict::Undetermined);
    CHECK(classify_kernel(b24, Exponent::of(3.0)).verdict == KernelVerdict::Undetermined);  // strict
    CHECK(classify_kernel(b24, Exponent::of(3.1)).verdict == KernelVerdict::Nontrivial);
    CHECK(classify_kernel(b24, Exponent::infinity()).verdict == KernelVerdict::Nontrivial);

    const BranchingBounds b33{3, 3, 0};
    CHECK(classify_kernel(b33, Exponent::of(2.0)).verdict == KernelVerdict::Trivial);
    CHECK(classify_kernel(b33, Exponent::of(2.01)).verdict == KernelVerdict::Nontrivial);

    const BranchingBounds path{1, 1, 0};
    CHECK(classify_kernel(path, Exponent::of(17.0)).verdict == KernelVerdict::Trivial);
    CHECK(classify_kernel(path, Exponent::infinity()).verdict == KernelVerdict::Nontrivial);

    const BranchingBounds stretched{1, 2, 0};
    CHECK(classify_kernel(stretched, Exponent::of(1.0)).verdict == KernelVerdict::Trivial);
    CHECK(classify_kernel(stretched, Exponent::of(2.0)).verdict == KernelVerdict::Undetermined);
    CHECK(classify_kernel(stretched, Exponent::infinity()).verdict == KernelVerdict::Nontrivial);

    CHECK_THROWS(classify_kernel(BranchingBounds{3, 2, 0}, Exponent::of(2.0)));
}

TEST_CASE("classifier never contradicts the alternating example") {
    // if the alternating tree's level-sum ratio m/M^{p-1} is < 1 the example
    // kernel is p-summable, so the classifier must not say Trivial
    for (std::int64_t m = 1; m <= 6; ++m) {
        for (std::int64_t M = m; M <= 6; ++M) {
            for (int quarter = 4; quarter <= 16; ++quarter) {
                const double p = quarter / 4.0;
                const auto verdict = classify_kernel({m, M, 0}, Exponent::of(p)).verdict;
                // exact comparison m^4 < M^{4(p-1)}
                const BigInt lhs = int_pow(BigInt(m), 4);
                const BigInt rhs = int_pow(BigInt(M), static_cast<std::uint64_t>(quarter - 4));
                if (lhs < rhs) CHECK(verdict != KernelVerdict::Trivial);
                if (verdict == KernelVerdict::Trivial) CHECK(lhs >= rhs);
            }
        }
    }
}

TEST_CASE("stretched tree partial sums") {
    const auto squares = TSequence::squares();
    {
        const auto sums = stretched_partial_sums(2, squares, 2.0, 5);
        const std::vector<double> expected = {1.0, 1.5, 2.5, 10.5, 266.5};
        REQUIRE(sums.size() == 5);
        for (std::size_t i = 0; i < 5; ++i) CHECK(sums[i] == doctest::Approx(expected[i]));
    }
    {
        const auto sums = stretched_partial_sums(2, squares, 4.0, 6);
        CHECK(sums[5] - sums[4] == doctest::Approx(32.0));  // t_6 / 2^20 = 2^25 / 2^20
        for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i] > sums[i - 1]);
    }
    {
        const auto sums = stretched_partial_sums(5, TSequence::selfpow(), 1.0, 1);
        CHECK(sums == std::vector<double>{1.0});
    }
    // both named sequences diverge for every p; the crossing of 1e6 happens
    // by J = 8 for the squares sequence and by J = 28 for j^(j-1)
    for (double p : {1.0, 2.0, 4.0}) {
        const auto sq = stretched_partial_sums(2, TSequence::squares(), p, 8);
        for (std::size_t i = 1; i < sq.size(); ++i) CHECK(sq[i] > sq[i - 1]);
        CHECK(sq.back() > 1e6);
    }
    struct Crossing {
        double p;
        int J;
    };
    for (auto [p, J] : {Crossing{1.0, 10}, Crossing{2.0, 13}, Crossing{4.0, 27}}) {
        const auto sums = stretched_partial_sums(2, TSequence::selfpow(), p, J);
        for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i] > sums[i - 1]);
        CHECK(sums.back() > 1e6);
        CHECK(sums[sums.size() - 2] <= 1e6);  // the crossing is exactly at J
    }
}
