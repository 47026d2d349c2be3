#include "shiftlab/families.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

using nlohmann::json;

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max() / 4;

const LatticePoint& as_lattice(const VertexId& v, int d, const std::string& family) {
    const auto* p = std::get_if<LatticePoint>(&v);
    if (!p || static_cast<int>(p->coords.size()) != d)
        throw EncodingError("not a " + family + " vertex: " + render(v));
    return *p;
}

const PlanarPoint& as_planar(const VertexId& v, const std::string& family) {
    const auto* p = std::get_if<PlanarPoint>(&v);
    if (!p) throw EncodingError("not a " + family + " vertex: " + render(v));
    return *p;
}

TailVertex as_tail(const VertexId& v, const std::string& family) {
    const auto* p = std::get_if<TailVertex>(&v);
    if (!p) throw EncodingError("not a " + family + " vertex: " + render(v));
    return *p;
}

VertexId vv(std::int64_t i) { return TailVertex{TailRole::V, i}; }
VertexId wv(std::int64_t i) { return TailVertex{TailRole::W, i}; }
VertexId uv(std::int64_t i) { return TailVertex{TailRole::U, i}; }

}  // namespace

GraphFamily make_lattice(int d) {
    if (d < 1) throw std::invalid_argument("lattice dimension must be >= 1");
    const std::string name = "lattice(d=" + std::to_string(d) + ")";
    VertexId origin = LatticePoint{std::vector<std::int64_t>(d, 0)};
    auto oracle = [d, name](const VertexId& v) {
        const auto& p = as_lattice(v, d, name);
        std::vector<VertexId> out;
        out.reserve(2 * d);
        for (int a = 0; a < d; ++a) {
            for (int sign : {+1, -1}) {
                LatticePoint q = p;
                q.coords[a] += sign;
                out.push_back(std::move(q));
            }
        }
        return out;
    };
    return GraphFamily(name, std::move(origin), 2 * d, std::move(oracle));
}

GraphFamily make_triangular() {
    // Axial coordinates: each site touches six others.
    static constexpr std::int64_t kSteps[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    auto oracle = [](const VertexId& v) {
        const auto& p = as_planar(v, "triangular");
        std::vector<VertexId> out;
        out.reserve(6);
        for (const auto& s : kSteps) out.push_back(PlanarPoint{p.x + s[0], p.y + s[1]});
        return out;
    };
    return GraphFamily("triangular", PlanarPoint{0, 0}, 6, std::move(oracle));
}

GraphFamily make_hexagonal() {
    // Brick-wall model: horizontal edges everywhere, a vertical edge from
    // (x,y) up to (x,y+1) exactly when x+y is even. Every site has degree 3.
    auto oracle = [](const VertexId& v) {
        const auto& p = as_planar(v, "hexagonal");
        std::vector<VertexId> out;
        out.reserve(3);
        out.push_back(PlanarPoint{p.x + 1, p.y});
        out.push_back(PlanarPoint{p.x - 1, p.y});
        if (((p.x + p.y) % 2 + 2) % 2 == 0)
            out.push_back(PlanarPoint{p.x, p.y + 1});
        else
            out.push_back(PlanarPoint{p.x, p.y - 1});
        return out;
    };
    return GraphFamily("hexagonal", PlanarPoint{0, 0}, 3, std::move(oracle));
}

GraphFamily make_ladder() {
    auto oracle = [](const VertexId& v) {
        const auto* p = std::get_if<LadderPoint>(&v);
        if (!p || p->rung < 0 || (p->side != 0 && p->side != 1))
            throw EncodingError("not a ladder vertex: " + render(v));
        std::vector<VertexId> out;
        out.reserve(3);
        out.push_back(LadderPoint{p->rung + 1, p->side});
        if (p->rung > 0) out.push_back(LadderPoint{p->rung - 1, p->side});
        out.push_back(LadderPoint{p->rung, 1 - p->side});
        return out;
    };
    return GraphFamily("ladder", LadderPoint{0, 0}, 3, std::move(oracle));
}

GraphFamily make_ray() {
    auto oracle = [](const VertexId& v) {
        const auto t = as_tail(v, "ray");
        if (t.role != TailRole::U || t.index < 1) throw EncodingError("not a ray vertex: " + render(v));
        std::vector<VertexId> out;
        out.reserve(2);
        if (t.index > 1) out.push_back(uv(t.index - 1));
        out.push_back(uv(t.index + 1));
        return out;
    };
    return GraphFamily("ray", uv(1), 2, std::move(oracle));
}

std::string tail_kind_name(TailGraphKind kind) {
    switch (kind) {
        case TailGraphKind::Kite: return "kite";
        case TailGraphKind::FlySwatter: return "fly_swatter";
        case TailGraphKind::CombWithTail: return "comb";
    }
    throw std::logic_error("unreachable");
}

GraphFamily make_tail_graph(TailGraphKind kind, int n) {
    if (n < 2) throw std::invalid_argument("tail graphs need n >= 2");
    const std::string name = tail_kind_name(kind) + "(n=" + std::to_string(n) + ")";

    switch (kind) {
        case TailGraphKind::Kite: {
            auto oracle = [n, name](const VertexId& v) -> std::vector<VertexId> {
                const auto t = as_tail(v, name);
                if (t.role == TailRole::V) {
                    if (t.index < 0 || t.index > n) throw EncodingError("kite cycle index out of range");
                    if (t.index == 0) return {vv(1), vv(n), uv(1)};
                    if (t.index == n) return {vv(n - 1), vv(0)};
                    return {vv(t.index - 1), vv(t.index + 1)};
                }
                if (t.role == TailRole::U && t.index >= 1) {
                    if (t.index == 1) return {vv(0), uv(2)};
                    return {uv(t.index - 1), uv(t.index + 1)};
                }
                throw EncodingError("not a kite vertex: " + render(v));
            };
            return GraphFamily(name, vv(0), 3, std::move(oracle));
        }
        case TailGraphKind::FlySwatter: {
            auto oracle = [n, name](const VertexId& v) -> std::vector<VertexId> {
                const auto t = as_tail(v, name);
                if (t.role == TailRole::V) {
                    if (t.index < 0 || t.index > n) throw EncodingError("clique index out of range");
                    std::vector<VertexId> out;
                    out.reserve(n + 1);
                    for (std::int64_t j = 0; j <= n; ++j)
                        if (j != t.index) out.push_back(vv(j));
                    if (t.index == 0) out.push_back(uv(1));
                    return out;
                }
                if (t.role == TailRole::U && t.index >= 1) {
                    if (t.index == 1) return {vv(0), uv(2)};
                    return {uv(t.index - 1), uv(t.index + 1)};
                }
                throw EncodingError("not a fly-swatter vertex: " + render(v));
            };
            return GraphFamily(name, vv(0), n + 1, std::move(oracle));
        }
        case TailGraphKind::CombWithTail: {
            auto oracle = [n, name](const VertexId& v) -> std::vector<VertexId> {
                const auto t = as_tail(v, name);
                if (t.role == TailRole::V) {
                    if (t.index < 1 || t.index > n) throw EncodingError("comb spine index out of range");
                    std::vector<VertexId> out;
                    if (t.index > 1) out.push_back(vv(t.index - 1));
                    if (t.index < n) out.push_back(vv(t.index + 1));
                    out.push_back(wv(t.index));
                    if (t.index == n) out.push_back(uv(1));
                    return out;
                }
                if (t.role == TailRole::W) {
                    if (t.index < 1 || t.index > n) throw EncodingError("comb tooth index out of range");
                    return {vv(t.index)};
                }
                if (t.role == TailRole::U && t.index >= 1) {
                    if (t.index == 1) return {vv(n), uv(2)};
                    return {uv(t.index - 1), uv(t.index + 1)};
                }
                throw EncodingError("not a comb vertex: " + render(v));
            };
            return GraphFamily(name, vv(1), 3, std::move(oracle));
        }
    }
    throw std::logic_error("unreachable");
}

GraphFamily make_infinite_comb() {
    auto oracle = [](const VertexId& v) -> std::vector<VertexId> {
        const auto t = as_tail(v, "infinite_comb");
        if (t.index < 1) throw EncodingError("infinite comb indices start at 1");
        if (t.role == TailRole::V) {
            std::vector<VertexId> out;
            if (t.index > 1) out.push_back(vv(t.index - 1));
            out.push_back(vv(t.index + 1));
            out.push_back(wv(t.index));
            return out;
        }
        if (t.role == TailRole::W) return {vv(t.index)};
        throw EncodingError("not an infinite-comb vertex: " + render(v));
    };
    return GraphFamily("infinite_comb", vv(1), 3, std::move(oracle));
}

// --- trees -------------------------------------------------------------------

TSequence TSequence::explicit_prefix(std::vector<std::int64_t> t) {
    if (t.empty()) throw std::invalid_argument("explicit t-sequence needs at least one entry");
    for (auto x : t)
        if (x < 1) throw std::invalid_argument("t-sequence entries must be >= 1");
    return {Kind::Explicit, std::move(t)};
}

std::int64_t TSequence::value(std::int64_t j) const {
    if (j < 1) throw std::invalid_argument("t-sequence index starts at 1");
    switch (kind) {
        case Kind::Squares: {
            const std::int64_t e = (j - 1) * (j - 1);
            if (e >= 62) return kSaturated;
            return std::int64_t(1) << e;
        }
        case Kind::SelfPow: {
            std::int64_t r = 1;
            for (std::int64_t i = 0; i < j - 1; ++i) {
                if (r > kSaturated / j) return kSaturated;
                r *= j;
            }
            return r;
        }
        case Kind::Explicit:
            return prefix[std::min<std::int64_t>(j, static_cast<std::int64_t>(prefix.size())) - 1];
    }
    throw std::logic_error("unreachable");
}

std::string TSequence::name() const {
    switch (kind) {
        case Kind::Squares: return "squares";
        case Kind::SelfPow: return "selfpow";
        case Kind::Explicit: {
            std::string s = "[";
            for (std::size_t i = 0; i < prefix.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(prefix[i]);
            }
            return s + "]";
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// Bifurcation nodes of the stretched tree sit at levels 0, 2*t_1,
// 2*(t_1+t_2), ...; everything between is a path.
bool is_bifurcation_level(const TSequence& t, std::int64_t M_unused, std::int64_t level) {
    (void)M_unused;
    if (level == 0) return true;
    if (level % 2 != 0) return false;
    std::int64_t total = 0;
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t tj = t.value(j);
        if (total > kSaturated - tj) return false;
        total += tj;
        if (2 * total == level) return true;
        if (2 * total > level) return false;
    }
}

void validate_spec(const TreeSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AlternatingTreeSpec>) {
                if (s.m < 1 || s.M < 1) throw std::invalid_argument("alternating tree needs m, M >= 1");
            } else if constexpr (std::is_same_v<T, AlmostRegularTreeSpec>) {
                if (s.k < 2) throw std::invalid_argument("almost regular tree needs k >= 2");
                if (s.root_children < 1) throw std::invalid_argument("root child count must be >= 1");
            } else if constexpr (std::is_same_v<T, StretchedTreeSpec>) {
                if (s.M < 2) throw std::invalid_argument("stretched tree needs M >= 2");
                if (s.t.kind == TSequence::Kind::Explicit && s.t.prefix.empty())
                    throw std::invalid_argument("explicit t-sequence needs at least one entry");
            } else {
                if (s.default_beta < 1) throw std::invalid_argument("default child count must be >= 1");
                for (auto b : s.levels)
                    if (b < 1) throw std::invalid_argument("per-level child counts must be >= 1 (leafless)");
            }
        },
        spec);
}

}  // namespace

std::int64_t tree_beta_at_level(const TreeSpec& spec, std::int64_t level) {
    if (level < 0) throw std::invalid_argument("tree level must be >= 0");
    return std::visit(
        [level](const auto& s) -> std::int64_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AlternatingTreeSpec>) {
                return level % 2 == 0 ? s.m : s.M;
            } else if constexpr (std::is_same_v<T, AlmostRegularTreeSpec>) {
                return level == 0 ? s.root_children : s.k - 1;
            } else if constexpr (std::is_same_v<T, StretchedTreeSpec>) {
                return is_bifurcation_level(s.t, s.M, level) ? s.M : 1;
            } else {
                if (level < static_cast<std::int64_t>(s.levels.size()))
                    return s.levels[static_cast<std::size_t>(level)];
                return s.default_beta;
            }
        },
        spec);
}

std::string tree_spec_name(const TreeSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AlternatingTreeSpec>) {
                return "alternating_tree(m=" + std::to_string(s.m) + ",M=" + std::to_string(s.M) + ")";
            } else if constexpr (std::is_same_v<T, AlmostRegularTreeSpec>) {
                return "almost_regular_tree(k=" + std::to_string(s.k) +
                       ",root=" + std::to_string(s.root_children) + ")";
            } else if constexpr (std::is_same_v<T, StretchedTreeSpec>) {
                return "stretched_tree(M=" + std::to_string(s.M) + ",t=" + s.t.name() + ")";
            } else {
                std::string out = "explicit_beta_tree(levels=[";
                for (std::size_t i = 0; i < s.levels.size(); ++i) {
                    if (i) out += ',';
                    out += std::to_string(s.levels[i]);
                }
                return out + "],default=" + std::to_string(s.default_beta) + ")";
            }
        },
        spec);
}

GraphFamily make_tree(const TreeSpec& spec) {
    validate_spec(spec);

    std::int64_t bound = 0;
    std::visit(
        [&bound](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AlternatingTreeSpec>) {
                bound = std::max(s.m, s.M) + 1;
            } else if constexpr (std::is_same_v<T, AlmostRegularTreeSpec>) {
                bound = std::max(s.k, s.root_children);
            } else if constexpr (std::is_same_v<T, StretchedTreeSpec>) {
                bound = s.M + 1;
            } else {
                bound = s.default_beta;
                for (auto b : s.levels) bound = std::max(bound, b);
                bound += 1;
            }
        },
        spec);

    const std::string name = tree_spec_name(spec);
    auto oracle = [spec, name](const VertexId& v) {
        const auto* p = std::get_if<TreePath>(&v);
        if (!p) throw EncodingError("not a tree vertex: " + render(v));
        std::vector<VertexId> out;
        const std::int64_t level = static_cast<std::int64_t>(p->path.size());
        const std::int64_t beta = tree_beta_at_level(spec, level);
        out.reserve(static_cast<std::size_t>(beta) + 1);
        if (!p->path.empty()) {
            TreePath parent = *p;
            parent.path.pop_back();
            out.push_back(std::move(parent));
        }
        for (std::int64_t c = 0; c < beta; ++c) {
            TreePath child = *p;
            child.path.push_back(static_cast<std::uint32_t>(c));
            out.push_back(std::move(child));
        }
        return out;
    };

    GraphFamily family(name, TreePath{}, static_cast<int>(bound), std::move(oracle));
    family.with_tree_levels([spec](std::int64_t level) { return tree_beta_at_level(spec, level); });
    return family;
}

TreeSpec parse_tree_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("tree spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind"))
        throw std::invalid_argument("tree spec needs an object with a \"kind\" field");
    const std::string kind = doc.at("kind").get<std::string>();

    TreeSpec spec;
    if (kind == "alternating") {
        spec = AlternatingTreeSpec{doc.at("m").get<std::int64_t>(), doc.at("M").get<std::int64_t>()};
    } else if (kind == "almost_regular") {
        const auto k = doc.at("k").get<std::int64_t>();
        const auto root = doc.contains("root_children") ? doc.at("root_children").get<std::int64_t>() : k;
        spec = AlmostRegularTreeSpec{k, root};
    } else if (kind == "stretched") {
        StretchedTreeSpec s;
        s.M = doc.at("M").get<std::int64_t>();
        const auto& t = doc.at("t");
        if (t.is_string()) {
            const std::string tn = t.get<std::string>();
            if (tn == "squares")
                s.t = TSequence::squares();
            else if (tn == "selfpow")
                s.t = TSequence::selfpow();
            else
                throw std::invalid_argument("unknown t-sequence name: " + tn);
        } else if (t.is_array()) {
            s.t = TSequence::explicit_prefix(t.get<std::vector<std::int64_t>>());
        } else {
            throw std::invalid_argument("stretched tree \"t\" must be a name or an integer array");
        }
        spec = s;
    } else if (kind == "explicit_beta") {
        ExplicitBetaSpec s;
        if (doc.contains("levels")) s.levels = doc.at("levels").get<std::vector<std::int64_t>>();
        s.default_beta = doc.at("default").get<std::int64_t>();
        spec = s;
    } else {
        throw std::invalid_argument("unknown tree kind: " + kind);
    }
    validate_spec(spec);
    return spec;
}

std::string tree_spec_to_json(const TreeSpec& spec) {
    json doc;
    std::visit(
        [&doc](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AlternatingTreeSpec>) {
                doc = {{"kind", "alternating"}, {"m", s.m}, {"M", s.M}};
            } else if constexpr (std::is_same_v<T, AlmostRegularTreeSpec>) {
                doc = {{"kind", "almost_regular"}, {"k", s.k}, {"root_children", s.root_children}};
            } else if constexpr (std::is_same_v<T, StretchedTreeSpec>) {
                doc = {{"kind", "stretched"}, {"M", s.M}};
                if (s.t.kind == TSequence::Kind::Explicit)
                    doc["t"] = s.t.prefix;
                else
                    doc["t"] = s.t.name();
            } else {
                doc = {{"kind", "explicit_beta"}, {"levels", s.levels}, {"default", s.default_beta}};
            }
        },
        spec);
    return doc.dump();
}

}  // namespace shiftlab
