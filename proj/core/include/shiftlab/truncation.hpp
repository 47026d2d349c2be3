#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shiftlab/family.hpp"

namespace shiftlab {

/// Counts of vertices per BFS level: counts[n] = #{ v : |v| = n }.
struct GammaSequence {
    std::string family;
    std::vector<std::int64_t> counts;

    int nmax() const { return static_cast<int>(counts.size()) - 1; }
};

/// Finite BFS ball of a given radius around the distinguished vertex.
///
/// Levels equal true graph distance. Every vertex with level <= radius-1
/// (the interior) carries its complete neighbor list; vertices on the
/// boundary level carry only the edges whose other endpoint is inside the
/// ball. The shift operator is therefore exact on the interior.
class Truncation {
public:
    static constexpr std::size_t kDefaultVertexCap = 5'000'000;

    Truncation(GraphFamily family, int radius, std::size_t vertex_cap = kDefaultVertexCap);

    const GraphFamily& family() const { return family_; }
    int radius() const { return radius_; }
    int interior_radius() const { return radius_ - 1; }
    std::size_t size() const { return vertices_.size(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }  // BFS order
    const VertexId& vertex(std::size_t index) const { return vertices_[index]; }
    int level(std::size_t index) const { return levels_[index]; }
    const std::vector<std::int32_t>& neighbors_of(std::size_t index) const { return adjacency_[index]; }
    int degree(std::size_t index) const { return static_cast<int>(adjacency_[index].size()); }

    std::optional<std::size_t> index_of(const VertexId& v) const;
    std::int64_t count_at_level(int n) const;
    std::size_t first_index_above_level(int n) const;  // vertices are level-sorted

private:
    GraphFamily family_;
    int radius_;
    std::vector<VertexId> vertices_;
    std::vector<int> levels_;
    std::vector<std::vector<std::int32_t>> adjacency_;
    std::unordered_map<VertexId, std::size_t, VertexHash> index_;
    std::vector<std::int64_t> level_counts_;
    std::vector<std::size_t> level_offsets_;
};

Truncation truncate(const GraphFamily& family, int radius,
                    std::size_t vertex_cap = Truncation::kDefaultVertexCap);

GammaSequence gamma_sequence(const GraphFamily& family, int nmax,
                             std::size_t vertex_cap = Truncation::kDefaultVertexCap);

/// (gamma(n) + gamma(n+1)) / sum_{j<=n} gamma(j); requires n+1 <= gamma.nmax().
double euclidean_ratio(const GammaSequence& gamma, int n);

/// Extrema of deg(v) over interior vertices (level <= radius-1); radius >= 1.
std::pair<int, int> degree_bounds(const Truncation& trunc);

}  // namespace shiftlab
