#pragma once
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "shiftlab/family.hpp"

namespace shiftlab {

// --- homogeneous infinite graphs -------------------------------------------

GraphFamily make_lattice(int d);   // Z^d, 2d-regular
GraphFamily make_triangular();     // planar triangular tessellation, 6-regular
GraphFamily make_hexagonal();      // hexagonal tessellation (brick-wall model), 3-regular
GraphFamily make_ladder();         // semi-infinite ladder, degree <= 3
GraphFamily make_ray();            // infinite tail u_1 ~ u_2 ~ ..., degree <= 2

// --- finite graphs with an infinite tail ------------------------------------

enum class TailGraphKind { Kite, FlySwatter, CombWithTail };

// Kite: (n+1)-cycle v_0..v_n, tail at v_0.       distinguished: v_0
// FlySwatter: complete graph on v_0..v_n, tail at v_0.  distinguished: v_0
// CombWithTail: path v_1..v_n with teeth w_j ~ v_j, tail at v_n.  distinguished: v_1
GraphFamily make_tail_graph(TailGraphKind kind, int n);  // n >= 2

GraphFamily make_infinite_comb();  // v_j ~ v_{j+1}, v_j ~ w_j for all j >= 1

std::string tail_kind_name(TailGraphKind kind);

// --- rooted leafless trees ---------------------------------------------------

// t_j sequence of the stretched tree. Named choices diverge for every p;
// an explicit prefix is for tests and repeats its last entry past the end.
struct TSequence {
    enum class Kind { Squares, SelfPow, Explicit };
    Kind kind = Kind::Squares;
    std::vector<std::int64_t> prefix;

    static TSequence squares() { return {Kind::Squares, {}}; }
    static TSequence selfpow() { return {Kind::SelfPow, {}}; }
    static TSequence explicit_prefix(std::vector<std::int64_t> t);

    // t_j for j >= 1; saturates instead of overflowing.
    std::int64_t value(std::int64_t j) const;
    std::string name() const;
};

struct AlternatingTreeSpec {
    std::int64_t m = 1;  // children at even levels
    std::int64_t M = 1;  // children at odd levels
};

struct AlmostRegularTreeSpec {
    std::int64_t k = 2;              // every non-root vertex has k-1 children
    std::int64_t root_children = 2;  // finite exceptional set = the root
};

struct StretchedTreeSpec {
    std::int64_t M = 2;
    TSequence t;
};

struct ExplicitBetaSpec {
    std::vector<std::int64_t> levels;  // child count per level, then default_beta
    std::int64_t default_beta = 1;
};

using TreeSpec =
    std::variant<AlternatingTreeSpec, AlmostRegularTreeSpec, StretchedTreeSpec, ExplicitBetaSpec>;

// Child count at a given BFS level; all four kinds are level-determined.
std::int64_t tree_beta_at_level(const TreeSpec& spec, std::int64_t level);

GraphFamily make_tree(const TreeSpec& spec);  // validates leaflessness

// JSON document {"kind": "...", ...}; see README for the schema.
TreeSpec parse_tree_spec(const std::string& json_text);
std::string tree_spec_to_json(const TreeSpec& spec);
std::string tree_spec_name(const TreeSpec& spec);

}  // namespace shiftlab
