#include "shiftlab/vertex.hpp"

#include <charconv>
#include <sstream>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

void append_int_list(std::ostream& os, const char* open, const char* close,
                     const std::vector<std::int64_t>& xs) {
    os << open;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) os << ',';
        os << xs[i];
    }
    os << close;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw EncodingError("not an integer: '" + std::string(s) + "'");
    return value;
}

// Splits "a,b,c" into integers; empty input yields an empty list.
std::vector<std::int64_t> parse_int_list(std::string_view s) {
    std::vector<std::int64_t> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(parse_int(s.substr(start)));
            break;
        }
        out.push_back(parse_int(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

std::string_view expect_wrapped(std::string_view body, char open, char close) {
    if (body.size() < 2 || body.front() != open || body.back() != close)
        throw EncodingError("malformed vertex body: '" + std::string(body) + "'");
    return body.substr(1, body.size() - 2);
}

}  // namespace

std::string render(const VertexId& v) {
    std::ostringstream os;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, LatticePoint>) {
                os << "z:";
                append_int_list(os, "(", ")", x.coords);
            } else if constexpr (std::is_same_v<T, PlanarPoint>) {
                os << "p:(" << x.x << ',' << x.y << ')';
            } else if constexpr (std::is_same_v<T, LadderPoint>) {
                os << "lad:(" << x.rung << ',' << x.side << ')';
            } else if constexpr (std::is_same_v<T, TailVertex>) {
                const char* role = x.role == TailRole::V ? "v" : x.role == TailRole::W ? "w" : "u";
                os << role << ':' << x.index;
            } else {
                os << "t:[";
                for (std::size_t i = 0; i < x.path.size(); ++i) {
                    if (i != 0) os << ',';
                    os << x.path[i];
                }
                os << ']';
            }
        },
        v);
    return os.str();
}

VertexId parse_vertex(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw EncodingError("vertex text lacks a kind tag: '" + text + "'");
    const std::string_view tag(text.data(), colon);
    const std::string_view body(text.data() + colon + 1, text.size() - colon - 1);

    if (tag == "z") {
        LatticePoint p{parse_int_list(expect_wrapped(body, '(', ')'))};
        if (p.coords.empty()) throw EncodingError("lattice point needs at least one coordinate");
        return p;
    }
    if (tag == "p") {
        auto xs = parse_int_list(expect_wrapped(body, '(', ')'));
        if (xs.size() != 2) throw EncodingError("planar point needs exactly two coordinates");
        return PlanarPoint{xs[0], xs[1]};
    }
    if (tag == "lad") {
        auto xs = parse_int_list(expect_wrapped(body, '(', ')'));
        if (xs.size() != 2 || xs[0] < 0 || (xs[1] != 0 && xs[1] != 1))
            throw EncodingError("ladder point is lad:(i,s) with i >= 0 and s in {0,1}");
        return LadderPoint{xs[0], static_cast<int>(xs[1])};
    }
    if (tag == "v" || tag == "w" || tag == "u") {
        const TailRole role = tag == "v" ? TailRole::V : tag == "w" ? TailRole::W : TailRole::U;
        const std::int64_t index = parse_int(body);
        if (index < 0 || (role == TailRole::U && index < 1))
            throw EncodingError("tail vertex index out of range: '" + text + "'");
        return TailVertex{role, index};
    }
    if (tag == "t") {
        auto xs = parse_int_list(expect_wrapped(body, '[', ']'));
        TreePath p;
        p.path.reserve(xs.size());
        for (std::int64_t x : xs) {
            if (x < 0 || x > UINT32_MAX) throw EncodingError("tree child index out of range");
            p.path.push_back(static_cast<std::uint32_t>(x));
        }
        return p;
    }
    throw EncodingError("unknown vertex kind tag: '" + std::string(tag) + "'");
}

namespace {

inline std::size_t mix(std::size_t seed, std::size_t value) {
    // splitmix-style combine
    value += 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ull;
    value = (value ^ (value >> 27)) * 0x94d049bb133111ebull;
    return seed ^ (value ^ (value >> 31));
}

}  // namespace

std::size_t hash_value(const VertexId& v) {
    std::size_t h = mix(0, v.index());
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, LatticePoint>) {
                for (auto c : x.coords) h = mix(h, static_cast<std::size_t>(c));
            } else if constexpr (std::is_same_v<T, PlanarPoint>) {
                h = mix(h, static_cast<std::size_t>(x.x));
                h = mix(h, static_cast<std::size_t>(x.y));
            } else if constexpr (std::is_same_v<T, LadderPoint>) {
                h = mix(h, static_cast<std::size_t>(x.rung));
                h = mix(h, static_cast<std::size_t>(x.side));
            } else if constexpr (std::is_same_v<T, TailVertex>) {
                h = mix(h, static_cast<std::size_t>(x.role));
                h = mix(h, static_cast<std::size_t>(x.index));
            } else {
                for (auto c : x.path) h = mix(h, c);
            }
        },
        v);
    return h;
}

}  // namespace shiftlab
