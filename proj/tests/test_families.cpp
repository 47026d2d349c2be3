#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "shiftlab/errors.hpp"
#include "shiftlab/families.hpp"
#include "shiftlab/truncation.hpp"

using namespace shiftlab;

TEST_CASE("homogeneous constructors") {
    CHECK_THROWS(make_lattice(0));

    const auto line = make_lattice(1);
    const auto five = line.neighbors(LatticePoint{{5}});
    REQUIRE(five.size() == 2);
    CHECK(std::count(five.begin(), five.end(), VertexId(LatticePoint{{4}})) == 1);
    CHECK(std::count(five.begin(), five.end(), VertexId(LatticePoint{{6}})) == 1);

    // hexagonal: 3-regular on a sample of vertices
    const auto hex = make_hexagonal();
    const Truncation ball(hex, 12);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    for (int s = 0; s < 100; ++s) CHECK(hex.neighbors(ball.vertex(pick(rng))).size() == 3);

    const auto ray = make_ray();
    const auto u1 = ray.neighbors(TailVertex{TailRole::U, 1});
    REQUIRE(u1.size() == 1);
    CHECK(u1[0] == VertexId(TailVertex{TailRole::U, 2}));
}

TEST_CASE("tail graph shapes") {
    CHECK_THROWS(make_tail_graph(TailGraphKind::Kite, 1));

    const auto kite = make_tail_graph(TailGraphKind::Kite, 2);
    const auto ku1 = kite.neighbors(TailVertex{TailRole::U, 1});
    REQUIRE(ku1.size() == 2);
    CHECK(ku1[0] == VertexId(TailVertex{TailRole::V, 0}));
    CHECK(ku1[1] == VertexId(TailVertex{TailRole::U, 2}));

    const auto fly = make_tail_graph(TailGraphKind::FlySwatter, 3);
    CHECK(fly.neighbors(TailVertex{TailRole::V, 0}).size() == 4);

    const auto comb = make_tail_graph(TailGraphKind::CombWithTail, 4);
    const auto v4 = comb.neighbors(TailVertex{TailRole::V, 4});
    REQUIRE(v4.size() == 3);
    CHECK(v4[0] == VertexId(TailVertex{TailRole::V, 3}));
    CHECK(v4[1] == VertexId(TailVertex{TailRole::W, 4}));
    CHECK(v4[2] == VertexId(TailVertex{TailRole::U, 1}));
}

TEST_CASE("infinite comb adjacency") {
    const auto comb = make_infinite_comb();
    const auto v1 = comb.neighbors(TailVertex{TailRole::V, 1});
    REQUIRE(v1.size() == 2);
    CHECK(v1[0] == VertexId(TailVertex{TailRole::V, 2}));
    CHECK(v1[1] == VertexId(TailVertex{TailRole::W, 1}));
    CHECK(comb.neighbors(TailVertex{TailRole::W, 7}) ==
          std::vector<VertexId>{TailVertex{TailRole::V, 7}});
    for (std::int64_t j = 2; j <= 40; j += 7)
        CHECK(comb.neighbors(TailVertex{TailRole::V, j}).size() == 3);
}

TEST_CASE("removing the tail leaves the finite graph") {
    struct Case {
        TailGraphKind kind;
        int n;
    };
    for (auto [kind, n] : {Case{TailGraphKind::Kite, 5}, Case{TailGraphKind::FlySwatter, 4},
                           Case{TailGraphKind::CombWithTail, 5}}) {
        const auto family = make_tail_graph(kind, n);
        const Truncation t(family, n + 6);
        std::set<std::pair<std::int64_t, std::int64_t>> edges;  // between non-u vertices
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto& a = std::get<TailVertex>(t.vertex(i));
            if (a.role == TailRole::U) continue;
            for (std::int32_t j : t.neighbors_of(i)) {
                const auto& b = std::get<TailVertex>(t.vertex(static_cast<std::size_t>(j)));
                if (b.role == TailRole::U) continue;
                const auto ka = (a.role == TailRole::W ? 1000 : 0) + a.index;
                const auto kb = (b.role == TailRole::W ? 1000 : 0) + b.index;
                edges.insert({std::min(ka, kb), std::max(ka, kb)});
            }
        }
        std::set<std::pair<std::int64_t, std::int64_t>> expected;
        if (kind == TailGraphKind::Kite) {
            for (int j = 0; j < n; ++j) expected.insert({j, j + 1});
            expected.insert({0, n});
        } else if (kind == TailGraphKind::FlySwatter) {
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) expected.insert({i, j});
        } else {
            for (int j = 1; j < n; ++j) expected.insert({j, j + 1});
            for (int j = 1; j <= n; ++j) expected.insert({j, 1000 + j});
        }
        CHECK(edges == expected);
    }
}

TEST_CASE("alternating tree level counts: (mM)^k at level 2k") {
    for (auto [m, M] : {std::pair<std::int64_t, std::int64_t>{2, 4}, {1, 3}}) {
        const auto gamma = gamma_sequence(make_tree(AlternatingTreeSpec{m, M}), 12);
        std::int64_t product = 1;
        for (int k = 0; k <= 6; ++k) {
            CHECK(gamma.counts[2 * k] == product);
            product *= m * M;
        }
    }
    const auto gamma = gamma_sequence(make_tree(AlternatingTreeSpec{2, 4}), 4);
    CHECK(gamma.counts == std::vector<std::int64_t>{1, 2, 8, 16, 64});
}

TEST_CASE("almost regular tree: gamma(j) = k (k-1)^(j-1)") {
    const auto tree = make_tree(AlmostRegularTreeSpec{3, 3});
    const auto gamma = gamma_sequence(tree, 10);
    std::int64_t expected = 3;
    for (int j = 1; j <= 10; ++j) {
        CHECK(gamma.counts[j] == expected);
        expected *= 2;
    }
    // every non-root vertex has degree k
    const Truncation t(tree, 6);
    for (std::size_t i = 1; i < t.first_index_above_level(5); ++i) CHECK(t.degree(i) == 3);
}

TEST_CASE("stretched tree: paths between bifurcation nodes") {
    // t = squares gives t_1 = 1, t_2 = 2: bifurcation levels 0, 2, 6, ...
    const StretchedTreeSpec spec{2, TSequence::squares()};
    CHECK(tree_beta_at_level(spec, 0) == 2);
    CHECK(tree_beta_at_level(spec, 1) == 1);  // the child of the root heads a path
    CHECK(tree_beta_at_level(spec, 2) == 2);  // first bifurcation node
    for (int lvl : {3, 4, 5}) CHECK(tree_beta_at_level(spec, lvl) == 1);
    CHECK(tree_beta_at_level(spec, 6) == 2);

    const auto tree = make_tree(spec);
    const Truncation t(tree, 8);
    for (std::size_t i = 0; i < t.first_index_above_level(7); ++i) {
        const int lvl = t.level(i);
        const int deg = t.degree(i);
        const bool bifurcation = lvl == 0 || lvl == 2 || lvl == 6;
        if (lvl == 0)
            CHECK(deg == 2);  // root: M children, no parent
        else if (bifurcation)
            CHECK(deg == 3);  // M + 1
        else
            CHECK(deg == 2);  // path interior
    }

    // explicit prefixes repeat their last entry
    const TSequence explicit_t = TSequence::explicit_prefix({1, 3});
    CHECK(explicit_t.value(1) == 1);
    CHECK(explicit_t.value(2) == 3);
    CHECK(explicit_t.value(9) == 3);
}

TEST_CASE("every shipped tree is leafless on sampled vertices") {
    const std::vector<TreeSpec> specs = {
        AlternatingTreeSpec{2, 4},
        AlmostRegularTreeSpec{4, 2},
        StretchedTreeSpec{3, TSequence::selfpow()},
        ExplicitBetaSpec{{3, 1, 2}, 2},
    };
    for (const auto& spec : specs) {
        const auto tree = make_tree(spec);
        for (std::int64_t lvl = 0; lvl <= 40; ++lvl) CHECK(tree_beta_at_level(spec, lvl) >= 1);
        const Truncation t(tree, 5);
        for (std::size_t i = 0; i < t.first_index_above_level(4); ++i) {
            const int children = t.degree(i) - (t.level(i) == 0 ? 0 : 1);
            CHECK(children >= 1);
        }
    }
    CHECK_THROWS(make_tree(ExplicitBetaSpec{{2, 0}, 2}));
    CHECK_THROWS(make_tree(AlmostRegularTreeSpec{1, 1}));
}

TEST_CASE("tree spec JSON round-trips") {
    const std::vector<std::string> docs = {
        R"({"kind":"alternating","m":2,"M":4})",
        R"({"kind":"almost_regular","k":3,"root_children":3})",
        R"({"kind":"almost_regular","k":4})",
        R"({"kind":"stretched","M":2,"t":"squares"})",
        R"({"kind":"stretched","M":2,"t":[1,2,16]})",
        R"({"kind":"explicit_beta","levels":[3,1,2],"default":2})",
    };
    for (const auto& doc : docs) {
        const TreeSpec spec = parse_tree_spec(doc);
        const TreeSpec again = parse_tree_spec(tree_spec_to_json(spec));
        CHECK(tree_spec_name(spec) == tree_spec_name(again));
        for (int lvl = 0; lvl <= 12; ++lvl)
            CHECK(tree_beta_at_level(spec, lvl) == tree_beta_at_level(again, lvl));
    }
    // root_children defaults to k
    CHECK(tree_beta_at_level(parse_tree_spec(R"({"kind":"almost_regular","k":4})"), 0) == 4);

    CHECK_THROWS(parse_tree_spec("not json"));
    CHECK_THROWS(parse_tree_spec(R"({"kind":"mystery"})"));
    CHECK_THROWS(parse_tree_spec(R"({"kind":"stretched","M":2,"t":1.5})"));
    CHECK_THROWS(parse_tree_spec(R"({"kind":"stretched","M":1,"t":"squares"})"));
}
