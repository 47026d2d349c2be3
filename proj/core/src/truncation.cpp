#include "shiftlab/truncation.hpp"

#include <algorithm>
#include <stdexcept>

#include "shiftlab/errors.hpp"

namespace shiftlab {

Truncation::Truncation(GraphFamily family, int radius, std::size_t vertex_cap)
    : family_(std::move(family)), radius_(radius) {
    if (radius < 0) throw std::invalid_argument("truncation radius must be >= 0");

    vertices_.push_back(family_.distinguished_vertex());
    levels_.push_back(0);
    index_.emplace(vertices_[0], 0);

    // Standard BFS; only vertices at level < radius are expanded, so the
    // frontier never grows past the requested ball.
    for (std::size_t head = 0; head < vertices_.size(); ++head) {
        const int lvl = levels_[head];
        if (lvl >= radius_) break;  // BFS order: all later vertices are boundary
        const VertexId v = vertices_[head];  // copy: vertices_ may reallocate
        auto nbrs = family_.neighbors(v);
        if (static_cast<int>(nbrs.size()) > family_.degree_bound())
            throw EncodingError("oracle for " + family_.name() + " exceeded its degree bound at " +
                                render(v));
        auto& adj = adjacency_.emplace_back();
        adj.reserve(nbrs.size());
        for (auto& u : nbrs) {
            auto [it, inserted] = index_.emplace(u, vertices_.size());
            if (inserted) {
                if (vertices_.size() >= vertex_cap)
                    throw ResourceError("truncation of " + family_.name() + " exceeds the vertex cap (" +
                                        std::to_string(vertex_cap) + ") at radius " +
                                        std::to_string(radius_));
                vertices_.push_back(std::move(u));
                levels_.push_back(lvl + 1);
            }
            adj.push_back(static_cast<std::int32_t>(it->second));
        }
    }

    // Boundary vertices: record the edges that stay inside the ball, so the
    // adjacency lists are mutually consistent across the whole truncation.
    adjacency_.resize(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (levels_[i] < radius_) continue;
        auto nbrs = family_.neighbors(vertices_[i]);
        auto& adj = adjacency_[i];
        for (const auto& u : nbrs) {
            auto it = index_.find(u);
            if (it != index_.end()) adj.push_back(static_cast<std::int32_t>(it->second));
        }
    }

    level_counts_.assign(radius_ + 1, 0);
    for (int lvl : levels_) ++level_counts_[lvl];
    level_offsets_.assign(radius_ + 2, 0);
    for (int n = 0; n <= radius_; ++n)
        level_offsets_[n + 1] = level_offsets_[n] + static_cast<std::size_t>(level_counts_[n]);
}

std::optional<std::size_t> Truncation::index_of(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t Truncation::count_at_level(int n) const {
    if (n < 0 || n > radius_) return 0;
    return level_counts_[n];
}

std::size_t Truncation::first_index_above_level(int n) const {
    if (n < 0) return 0;
    if (n >= radius_) return vertices_.size();
    return level_offsets_[n + 1];
}

Truncation truncate(const GraphFamily& family, int radius, std::size_t vertex_cap) {
    return Truncation(family, radius, vertex_cap);
}

GammaSequence gamma_sequence(const GraphFamily& family, int nmax, std::size_t vertex_cap) {
    if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
    Truncation t(family, nmax, vertex_cap);
    GammaSequence g;
    g.family = family.name();
    g.counts.resize(nmax + 1);
    for (int n = 0; n <= nmax; ++n) g.counts[n] = t.count_at_level(n);
    return g;
}

double euclidean_ratio(const GammaSequence& gamma, int n) {
    if (n < 0 || n + 1 > gamma.nmax())
        throw std::out_of_range("euclidean_ratio needs gamma up to index n+1");
    std::int64_t ball = 0;
    for (int j = 0; j <= n; ++j) ball += gamma.counts[j];
    const std::int64_t shell = gamma.counts[n] + gamma.counts[n + 1];
    return static_cast<double>(shell) / static_cast<double>(ball);
}

std::pair<int, int> degree_bounds(const Truncation& trunc) {
    if (trunc.radius() < 1) throw std::invalid_argument("degree_bounds needs a nonempty interior");
    int max_deg = 0;
    int min_deg = trunc.family().degree_bound() + 1;
    const std::size_t end = trunc.first_index_above_level(trunc.interior_radius());
    for (std::size_t i = 0; i < end; ++i) {
        const int d = trunc.degree(i);
        max_deg = std::max(max_deg, d);
        min_deg = std::min(min_deg, d);
    }
    return {max_deg, min_deg};
}

}  // namespace shiftlab
