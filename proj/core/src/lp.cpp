#include "shiftlab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace shiftlab {

Exponent Exponent::of(double p) {
    if (std::isnan(p) || p < 1.0) throw std::invalid_argument("exponent p must lie in [1, inf]");
    return Exponent(p);
}

Exponent Exponent::infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

bool Exponent::is_infinite() const { return std::isinf(p_); }

double Exponent::q() const {
    if (p_ == 1.0) return std::numeric_limits<double>::infinity();
    if (is_infinite()) return 1.0;
    return p_ / (p_ - 1.0);
}

LpFunction::LpFunction(std::shared_ptr<const Truncation> trunc, std::vector<double> values)
    : trunc_(std::move(trunc)), values_(std::move(values)) {
    if (size() != trunc_->size()) throw std::invalid_argument("value vector does not match truncation");
    compute_support();
}

LpFunction::LpFunction(std::shared_ptr<const Truncation> trunc, std::vector<Rational> values)
    : trunc_(std::move(trunc)), values_(std::move(values)) {
    if (size() != trunc_->size()) throw std::invalid_argument("value vector does not match truncation");
    compute_support();
}

std::size_t LpFunction::size() const {
    return exact() ? std::get<std::vector<Rational>>(values_).size()
                   : std::get<std::vector<double>>(values_).size();
}

void LpFunction::compute_support() {
    support_radius_ = -1;
    for (std::size_t i = 0; i < size(); ++i) {
        const bool nonzero = exact() ? exact_value(i) != 0 : value(i) != 0.0;
        if (nonzero) support_radius_ = std::max(support_radius_, trunc_->level(i));
    }
}

double LpFunction::value(std::size_t i) const {
    if (exact()) return to_double(std::get<std::vector<Rational>>(values_)[i]);
    return std::get<std::vector<double>>(values_)[i];
}

const Rational& LpFunction::exact_value(std::size_t i) const {
    return std::get<std::vector<Rational>>(values_)[i];
}

const std::vector<double>& LpFunction::floating_values() const {
    if (exact()) throw std::invalid_argument("function is in exact-rational mode");
    return std::get<std::vector<double>>(values_);
}

const std::vector<Rational>& LpFunction::exact_values() const {
    if (!exact()) throw std::invalid_argument("function is in floating mode");
    return std::get<std::vector<Rational>>(values_);
}

ShiftImage apply_shift(const LpFunction& f) {
    const Truncation& t = f.truncation();
    // Values are exact wherever the adjacency is complete relative to the
    // support: everywhere when the support stays inside the interior, and on
    // the interior otherwise.
    const int validity =
        f.support_radius() <= t.interior_radius() ? t.radius() : t.interior_radius();

    if (f.exact()) {
        std::vector<Rational> out(t.size());
        for (std::size_t u = 0; u < t.size(); ++u) {
            Rational acc = 0;
            for (std::int32_t v : t.neighbors_of(u)) acc += f.exact_value(static_cast<std::size_t>(v));
            out[u] = std::move(acc);
        }
        return {LpFunction(f.truncation_ptr(), std::move(out)), validity};
    }
    std::vector<double> out(t.size());
    for (std::size_t u = 0; u < t.size(); ++u) {
        double acc = 0.0;
        for (std::int32_t v : t.neighbors_of(u)) acc += f.value(static_cast<std::size_t>(v));
        out[u] = acc;
    }
    return {LpFunction(f.truncation_ptr(), std::move(out)), validity};
}

double lp_norm(const LpFunction& f, Exponent p) {
    if (p.is_infinite()) {
        double sup = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) sup = std::max(sup, std::abs(f.value(i)));
        return sup;
    }
    // Exact mode with integer p sums exactly and takes one root at the end.
    if (f.exact() && p.p() == std::floor(p.p()) && p.p() <= 64.0) {
        const Rational sum = lp_norm_pow_exact(f, static_cast<int>(p.p()));
        return std::pow(to_double(sum), 1.0 / p.p());
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double a = std::abs(f.value(i));
        if (a != 0.0) sum += std::pow(a, p.p());
    }
    return std::pow(sum, 1.0 / p.p());
}

Rational lp_norm_pow_exact(const LpFunction& f, int p) {
    if (!f.exact()) throw std::invalid_argument("exact norm needs an exact-rational function");
    if (p < 1) throw std::invalid_argument("integer exponent must be >= 1");
    Rational sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rational& v = f.exact_value(i);
        if (v == 0) continue;
        Rational a = v < 0 ? Rational(-v) : v;
        sum += rat_pow(a, static_cast<std::uint64_t>(p));
    }
    return sum;
}

namespace {

void require_same_truncation(const LpFunction& f, const LpFunction& g) {
    if (f.truncation_ptr().get() != g.truncation_ptr().get())
        throw std::invalid_argument("functions live on different truncations");
}

}  // namespace

LpFunction axpby(double a, const LpFunction& f, double b, const LpFunction& g) {
    require_same_truncation(f, g);
    if (f.exact() || g.exact())
        throw std::invalid_argument("mixed exact/floating combination; convert explicitly");
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * f.value(i) + b * g.value(i);
    return LpFunction(f.truncation_ptr(), std::move(out));
}

LpFunction axpby(const Rational& a, const LpFunction& f, const Rational& b, const LpFunction& g) {
    require_same_truncation(f, g);
    if (!f.exact() || !g.exact())
        throw std::invalid_argument("mixed exact/floating combination; convert explicitly");
    std::vector<Rational> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * f.exact_value(i) + b * g.exact_value(i);
    return LpFunction(f.truncation_ptr(), std::move(out));
}

LpFunction to_floating(const LpFunction& f) {
    if (!f.exact()) return f;
    std::vector<double> values(f.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = f.value(i);
    return LpFunction(f.truncation_ptr(), std::move(values));
}

LpFunction ball_indicator(std::shared_ptr<const Truncation> trunc, int n) {
    if (n < 0 || n > trunc->radius())
        throw std::invalid_argument("ball radius outside the truncation");
    std::vector<double> values(trunc->size(), 0.0);
    const std::size_t end = trunc->first_index_above_level(n);
    std::fill(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(end), 1.0);
    return LpFunction(std::move(trunc), std::move(values));
}

LpFunction tree_weight_witness(std::shared_ptr<const Truncation> trunc, std::int64_t k, double p,
                               int exceptional_radius, int n) {
    if (k < 2) throw std::invalid_argument("tree weight needs k >= 2");
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("tree weight needs 1 < p < inf");
    if (exceptional_radius >= n) throw std::invalid_argument("tree weight needs N < n");
    if (n > trunc->radius()) throw std::invalid_argument("witness support outside the truncation");
    std::vector<double> values(trunc->size(), 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int lvl = trunc->level(i);
        if (lvl > exceptional_radius && lvl <= n)
            values[i] = std::pow(static_cast<double>(k - 1), -static_cast<double>(lvl) / p);
    }
    return LpFunction(std::move(trunc), std::move(values));
}

double rayleigh_ratio(const LpFunction& f, Exponent p) {
    if (f.support_radius() < 0) throw std::invalid_argument("rayleigh ratio of the zero function");
    const auto image = apply_shift(f);
    if (image.function.support_radius() > image.validity_radius)
        throw std::invalid_argument(
            "truncation too small: the shifted support reaches contaminated levels (need radius >= "
            "support_radius + 1)");
    const double denom = lp_norm(f, p);
    return lp_norm(image.function, p) / denom;
}

double tree_level_rayleigh(const GraphFamily& tree, const std::vector<double>& level_values,
                           Exponent p) {
    if (!tree.is_tree()) throw std::invalid_argument("level calculus needs a tree family");
    if (level_values.empty()) throw std::invalid_argument("empty level function");
    const auto& beta = tree.beta_of_level();
    const std::int64_t top = static_cast<std::int64_t>(level_values.size()) - 1;

    auto value_at = [&](std::int64_t j) -> double {
        return (j >= 0 && j <= top) ? level_values[static_cast<std::size_t>(j)] : 0.0;
    };

    double norm_f = 0.0;
    double norm_sf = 0.0;
    double sup_f = 0.0;
    double sup_sf = 0.0;
    double gamma = 1.0;  // vertices at the current level
    for (std::int64_t j = 0; j <= top + 1; ++j) {
        if (!std::isfinite(gamma))
            throw std::invalid_argument("level counts overflow double at this depth; lower the budget");
        const double fj = value_at(j);
        const double parent_part = j >= 1 ? value_at(j - 1) : 0.0;
        const double sfj = parent_part + static_cast<double>(beta(j)) * value_at(j + 1);
        if (p.is_infinite()) {
            sup_f = std::max(sup_f, std::abs(fj));
            sup_sf = std::max(sup_sf, std::abs(sfj));
        } else {
            if (fj != 0.0) norm_f += gamma * std::pow(std::abs(fj), p.p());
            if (sfj != 0.0) norm_sf += gamma * std::pow(std::abs(sfj), p.p());
        }
        gamma *= static_cast<double>(beta(j));
    }
    if (p.is_infinite()) {
        if (sup_f == 0.0) throw std::invalid_argument("rayleigh ratio of the zero function");
        return sup_sf / sup_f;
    }
    if (norm_f == 0.0) throw std::invalid_argument("rayleigh ratio of the zero function");
    return std::pow(norm_sf / norm_f, 1.0 / p.p());
}

namespace {

// Lower bound on a level-regular tree: try the proof witnesses per level.
std::pair<double, std::pair<std::string, int>> best_tree_witness(const GraphFamily& family,
                                                                 Exponent p, int budget) {
    double best = 0.0;
    std::string kind = "ball_indicator";
    int used_n = 0;

    {
        std::vector<double> ball(static_cast<std::size_t>(budget) + 1, 1.0);
        const double r = tree_level_rayleigh(family, ball, p);
        best = r;
        used_n = budget;
    }

    if (!p.is_infinite() && p.p() > 1.0) {
        const std::int64_t k = family.degree_bound();
        if (k >= 2) {
            for (int except_n : {0, 1}) {
                if (except_n >= budget) continue;
                std::vector<double> w(static_cast<std::size_t>(budget) + 1, 0.0);
                for (int j = except_n + 1; j <= budget; ++j)
                    w[static_cast<std::size_t>(j)] =
                        std::pow(static_cast<double>(k - 1), -static_cast<double>(j) / p.p());
                const double r = tree_level_rayleigh(family, w, p);
                if (r > best) {
                    best = r;
                    kind = "tree_weight";
                    used_n = budget;
                }
            }
        }
    }
    return {best, {kind, used_n}};
}

}  // namespace

NormBracket norm_bounds(const GraphFamily& family, Exponent p, int budget, std::size_t vertex_cap) {
    if (budget < 1) throw std::invalid_argument("witness budget must be >= 1");
    NormBracket bracket;
    bracket.family = family.name();
    bracket.p = p.p();

    bracket.upper = static_cast<double>(family.degree_bound());
    if (family.is_tree() && !p.is_infinite() && p.p() > 1.0) {
        const double k = static_cast<double>(family.degree_bound());
        if (k >= 2.0) {
            const double tree_upper =
                std::pow(k - 1.0, 1.0 / p.p()) + std::pow(k - 1.0, 1.0 / p.q());
            bracket.upper = std::min(bracket.upper, tree_upper);
        }
    }

    if (family.is_tree()) {
        auto [lower, meta] = best_tree_witness(family, p, budget);
        bracket.lower = lower;
        bracket.witness_kind = meta.first;
        bracket.witness_n = meta.second;
    } else {
        auto trunc = std::make_shared<const Truncation>(family, budget + 1, vertex_cap);
        LpFunction f = ball_indicator(trunc, budget);
        bracket.lower = rayleigh_ratio(f, p);
        bracket.witness_kind = "ball_indicator";
        bracket.witness_n = budget;
    }
    return bracket;
}

double power_iteration_estimate(const Truncation& trunc, int iterations, std::uint64_t seed) {
    const std::size_t n = trunc.size();
    if (n == 0) return 0.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = uni(rng);
    std::vector<double> y(n);
    double estimate = 0.0;
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t u = 0; u < n; ++u) {
            double acc = 0.0;
            for (std::int32_t v : trunc.neighbors_of(u)) acc += x[static_cast<std::size_t>(v)];
            y[u] = acc;
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        estimate = norm;  // ||Ax|| for unit x
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    return estimate;
}

}  // namespace shiftlab
