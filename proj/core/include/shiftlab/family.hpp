#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/vertex.hpp"

namespace shiftlab {

/// An infinite graph, represented only through a pure neighbor oracle.
///
/// The oracle returns the same ordered neighbor list on every call for the
/// same vertex, never more than degree_bound entries, and is symmetric:
/// u appears in neighbors(v) exactly when v appears in neighbors(u).
class GraphFamily {
public:
    using Oracle = std::function<std::vector<VertexId>(const VertexId&)>;
    // Rooted trees expose their child count per BFS level; every family
    // shipped here has level-determined branching, which is what makes
    // deep witness sums computable without materializing the tree.
    using BetaOfLevel = std::function<std::int64_t(std::int64_t)>;

    GraphFamily(std::string name, VertexId distinguished, int degree_bound, Oracle oracle)
        : name_(std::move(name)),
          distinguished_(std::move(distinguished)),
          degree_bound_(degree_bound),
          oracle_(std::move(oracle)) {}

    const std::string& name() const { return name_; }
    const VertexId& distinguished_vertex() const { return distinguished_; }
    int degree_bound() const { return degree_bound_; }

    std::vector<VertexId> neighbors(const VertexId& v) const { return oracle_(v); }

    bool is_tree() const { return beta_of_level_.has_value(); }
    const BetaOfLevel& beta_of_level() const { return *beta_of_level_; }

    GraphFamily& with_tree_levels(BetaOfLevel beta) {
        beta_of_level_ = std::move(beta);
        return *this;
    }

private:
    std::string name_;
    VertexId distinguished_;
    int degree_bound_;
    Oracle oracle_;
    std::optional<BetaOfLevel> beta_of_level_;
};

}  // namespace shiftlab
