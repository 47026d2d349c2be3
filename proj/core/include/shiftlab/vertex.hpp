#pragma once
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace shiftlab {

// Vertex labels are structured per graph family. Canonical text forms:
//   z:(c1,...,cd)   lattice point of Z^d
//   p:(x,y)         planar tessellation site
//   lad:(i,s)       ladder rung i, side s in {0,1}
//   v:i / w:i / u:i finite part and tail of the tail-attached graphs
//   t:[i1,...,ik]   root-to-vertex child path; t:[] is the root
// parse_vertex(render(v)) == v for every valid vertex.

struct LatticePoint {
    std::vector<std::int64_t> coords;
    bool operator==(const LatticePoint&) const = default;
};

struct PlanarPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const PlanarPoint&) const = default;
};

struct LadderPoint {
    std::int64_t rung = 0;  // >= 0
    int side = 0;           // 0 | 1
    bool operator==(const LadderPoint&) const = default;
};

enum class TailRole { V, W, U };

struct TailVertex {
    TailRole role = TailRole::V;
    std::int64_t index = 0;  // u-vertices have index >= 1
    bool operator==(const TailVertex&) const = default;
};

struct TreePath {
    std::vector<std::uint32_t> path;  // child indices from the root; empty = root
    bool operator==(const TreePath&) const = default;
};

using VertexId = std::variant<LatticePoint, PlanarPoint, LadderPoint, TailVertex, TreePath>;

std::string render(const VertexId& v);
VertexId parse_vertex(const std::string& text);  // throws EncodingError

std::size_t hash_value(const VertexId& v);

struct VertexHash {
    std::size_t operator()(const VertexId& v) const { return hash_value(v); }
};

}  // namespace shiftlab
