#pragma once
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "shiftlab/rational.hpp"
#include "shiftlab/truncation.hpp"

namespace shiftlab {

/// Holder exponent p in [1, inf]; q = p/(p-1) with q = inf at p = 1 and
/// q = 1 at p = inf.
class Exponent {
public:
    static Exponent of(double p);
    static Exponent infinity();

    double p() const { return p_; }
    double q() const;
    bool is_infinite() const;

private:
    explicit Exponent(double p) : p_(p) {}
    double p_;
};

/// A finitely supported function on the vertices of a truncated family,
/// stored either in floating point or as exact rationals.
class LpFunction {
public:
    LpFunction(std::shared_ptr<const Truncation> trunc, std::vector<double> values);
    LpFunction(std::shared_ptr<const Truncation> trunc, std::vector<Rational> values);

    bool exact() const { return std::holds_alternative<std::vector<Rational>>(values_); }
    const Truncation& truncation() const { return *trunc_; }
    const std::shared_ptr<const Truncation>& truncation_ptr() const { return trunc_; }
    std::size_t size() const;
    int support_radius() const { return support_radius_; }  // -1 when identically zero

    double value(std::size_t i) const;
    const Rational& exact_value(std::size_t i) const;
    const std::vector<double>& floating_values() const;
    const std::vector<Rational>& exact_values() const;

private:
    std::shared_ptr<const Truncation> trunc_;
    std::variant<std::vector<double>, std::vector<Rational>> values_;
    int support_radius_ = -1;
    void compute_support();
};

/// Image of the shift together with the largest level up to which its values
/// agree with the true infinite-graph image. Values past the validity radius
/// may be missing boundary contributions.
struct ShiftImage {
    LpFunction function;
    int validity_radius;
};

ShiftImage apply_shift(const LpFunction& f);

double lp_norm(const LpFunction& f, Exponent p);
/// sum |f(v)|^p as an exact rational; requires exact mode and integer p >= 1.
Rational lp_norm_pow_exact(const LpFunction& f, int p);

LpFunction axpby(double a, const LpFunction& f, double b, const LpFunction& g);
LpFunction axpby(const Rational& a, const LpFunction& f, const Rational& b, const LpFunction& g);

/// Explicit demotion of an exact function to floating point (the reverse
/// conversion is never implicit).
LpFunction to_floating(const LpFunction& f);

// --- witnesses and certified norm brackets -----------------------------------

/// Indicator of the ball { |v| <= n }.
LpFunction ball_indicator(std::shared_ptr<const Truncation> trunc, int n);

/// (k-1)^(-|v|/p) on the shell N < |v| <= n, zero elsewhere; the tree witness.
LpFunction tree_weight_witness(std::shared_ptr<const Truncation> trunc, std::int64_t k, double p,
                               int exceptional_radius, int n);

/// ||Sf||_p / ||f||_p, evaluated only when the truncation is large enough
/// that no nonzero entry of Sf is boundary-contaminated; a certified lower
/// bound for the operator norm.
double rayleigh_ratio(const LpFunction& f, Exponent p);

struct NormBracket {
    std::string family;
    double p = 2.0;
    double lower = 0.0;          // certified by a witness ratio
    double upper = 0.0;          // from the degree / tree bounds
    std::string witness_kind;    // "ball_indicator" | "tree_weight"
    int witness_n = 0;
};

/// upper = min over the bounds whose hypotheses hold; lower = best witness
/// Rayleigh ratio with support parameter up to `budget`. On level-regular
/// trees the witness sums are evaluated per level, so the budget may far
/// exceed any materializable truncation.
NormBracket norm_bounds(const GraphFamily& family, Exponent p, int budget,
                        std::size_t vertex_cap = Truncation::kDefaultVertexCap);

/// Finite-section 2-norm estimate by power iteration; a cross-check utility
/// only, never part of a NormBracket.
double power_iteration_estimate(const Truncation& trunc, int iterations = 200,
                                std::uint64_t seed = 1);

/// Rayleigh ratio of a level function on a level-regular tree, computed from
/// the level counts alone. `level_values[j]` is the value on every vertex at
/// level j; entries past the end are zero.
double tree_level_rayleigh(const GraphFamily& tree, const std::vector<double>& level_values,
                           Exponent p);

}  // namespace shiftlab
