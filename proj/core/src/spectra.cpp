#include "shiftlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shiftlab/polynomial.hpp"

namespace shiftlab {

double tail_parameter(double lambda) {
    if (!(std::abs(lambda) > 2.0))
        throw std::domain_error("no decaying tail solution: |lambda| must exceed 2");
    const double disc = std::sqrt(lambda * lambda - 4.0);
    // 2/(lambda +- disc) is the small root of t^2 - lambda t + 1; this form
    // avoids cancellation for large |lambda|.
    return lambda > 0.0 ? 2.0 / (lambda + disc) : 2.0 / (lambda - disc);
}

std::vector<double> zero_branch_eigenvalues(TailGraphKind kind, int n) {
    if (n < 2) throw std::invalid_argument("tail graphs need n >= 2");
    switch (kind) {
        case TailGraphKind::Kite: {
            std::vector<double> out;
            for (int j = 1; j <= n / 2; ++j)
                out.push_back(2.0 * std::cos(2.0 * std::numbers::pi * j / (n + 1)));
            return out;
        }
        case TailGraphKind::FlySwatter: return {-1.0};
        case TailGraphKind::CombWithTail: return {};
    }
    throw std::logic_error("unreachable");
}

namespace {

TailEigenpair make_tail_pair(double b) {
    TailEigenpair pair;
    pair.b = b;
    pair.lambda = b + 1.0 / b;
    pair.branch = SpectralBranch::Tail;
    pair.embedded = std::abs(pair.lambda) <= 2.0;
    return pair;
}

}  // namespace

std::vector<TailEigenpair> tail_branch_eigenvalues(TailGraphKind kind, int n, int depth) {
    if (n < 2) throw std::invalid_argument("tail graphs need n >= 2");
    std::vector<TailEigenpair> out;
    switch (kind) {
        case TailGraphKind::Kite: {
            const Polynomial p = kite_polynomial(n);
            // 0 is excluded (lambda = b + 1/b needs b != 0) by splitting the
            // interval; +-1 are excluded by open-interval semantics.
            for (double b : roots_in_open_interval(p, -1.0, 0.0)) out.push_back(make_tail_pair(b));
            for (double b : roots_in_open_interval(p, 0.0, 1.0)) out.push_back(make_tail_pair(b));
            break;
        }
        case TailGraphKind::FlySwatter: {
            const double b = -0.5 + 0.5 * std::sqrt((n + 3.0) / (n - 1.0));
            out.push_back(make_tail_pair(b));
            break;
        }
        case TailGraphKind::CombWithTail: {
            const Polynomial h = comb_polynomial(n);
            for (double b : roots_in_open_interval(h, 0.0, 1.0)) {
                out.push_back(make_tail_pair(b));   // lambda > 2
                out.push_back(make_tail_pair(-b));  // the even family gives -b as well
            }
            break;
        }
    }
    for (auto& pair : out) pair.residual = synthesize_eigenvector(kind, n, pair, depth).residual;
    std::sort(out.begin(), out.end(),
              [](const TailEigenpair& a, const TailEigenpair& b) { return a.lambda < b.lambda; });
    return out;
}

namespace {

double max_interior_residual(const LpFunction& f, double lambda) {
    const Truncation& t = f.truncation();
    const auto image = apply_shift(f);
    double worst = 0.0;
    const std::size_t end = t.first_index_above_level(t.interior_radius());
    for (std::size_t i = 0; i < end; ++i)
        worst = std::max(worst, std::abs(image.function.value(i) - lambda * f.value(i)));
    return worst;
}

}  // namespace

SynthesizedEigenvector synthesize_eigenvector(TailGraphKind kind, int n, const TailEigenpair& pair,
                                              int depth) {
    if (n < 2) throw std::invalid_argument("tail graphs need n >= 2");
    if (depth < n + 5) throw std::invalid_argument("synthesis depth must be at least n + 5");
    if (pair.branch == SpectralBranch::Zero && kind == TailGraphKind::CombWithTail)
        throw std::invalid_argument("the comb has no zero-branch eigenvalues");
    if (pair.branch == SpectralBranch::Tail && !pair.b)
        throw std::invalid_argument("tail-branch pair lacks its decay parameter");

    const GraphFamily family = make_tail_graph(kind, n);
    const int radius = kind == TailGraphKind::CombWithTail ? n - 1 + depth : depth;
    auto trunc = std::make_shared<const Truncation>(family, radius);

    const double lambda = pair.lambda;
    std::vector<double> values(trunc->size(), 0.0);

    // finite-part values per vertex role
    std::vector<double> x;  // x[k] = f(v_k)
    std::vector<double> teeth;
    if (kind == TailGraphKind::Kite) {
        x.assign(static_cast<std::size_t>(n) + 1, 0.0);
        if (pair.branch == SpectralBranch::Tail) {
            const double b = *pair.b;
            const double denom = 1.0 + std::pow(b, n + 1);
            x[0] = 1.0;
            for (int k = 1; k <= n; ++k)
                x[static_cast<std::size_t>(k)] =
                    (std::pow(b, k) + std::pow(b, n - k + 1)) / denom;
        } else {
            if (!pair.cycle_mode) throw std::invalid_argument("kite zero-branch pair needs its mode");
            const double theta = 2.0 * std::numbers::pi * *pair.cycle_mode / (n + 1);
            for (int k = 0; k <= n; ++k) x[static_cast<std::size_t>(k)] = std::sin(theta * k);
        }
    } else if (kind == TailGraphKind::FlySwatter) {
        x.assign(static_cast<std::size_t>(n) + 1, 0.0);
        if (pair.branch == SpectralBranch::Tail) {
            x[0] = 1.0;
            const double interior = 1.0 / (lambda - (n - 1.0));
            for (int k = 1; k <= n; ++k) x[static_cast<std::size_t>(k)] = interior;
        } else {
            x[1] = 1.0;
            x[2] = -1.0;
        }
    } else {
        // comb: back-substitute the spine from x_n = 1, teeth are x_j / lambda
        const double b = *pair.b;
        const double mu = lambda - 1.0 / lambda;
        x.assign(static_cast<std::size_t>(n) + 1, 0.0);  // x[0] unused
        x[static_cast<std::size_t>(n)] = 1.0;
        if (n >= 2) x[static_cast<std::size_t>(n) - 1] = mu - b;
        for (int j = n - 1; j >= 2; --j)
            x[static_cast<std::size_t>(j) - 1] =
                mu * x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j) + 1];
        teeth.assign(static_cast<std::size_t>(n) + 1, 0.0);
        for (int j = 1; j <= n; ++j)
            teeth[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] / lambda;
    }

    const double b_tail = pair.branch == SpectralBranch::Tail ? *pair.b : 0.0;
    for (std::size_t i = 0; i < trunc->size(); ++i) {
        const auto& tv = std::get<TailVertex>(trunc->vertex(i));
        switch (tv.role) {
            case TailRole::V: values[i] = x[static_cast<std::size_t>(tv.index)]; break;
            case TailRole::W: values[i] = teeth[static_cast<std::size_t>(tv.index)]; break;
            case TailRole::U:
                values[i] = pair.branch == SpectralBranch::Tail
                                ? std::pow(b_tail, static_cast<double>(tv.index))
                                : 0.0;
                break;
        }
    }

    LpFunction f(trunc, std::move(values));
    const double residual = max_interior_residual(f, lambda);
    return {std::move(f), residual};
}

Spectrum full_spectrum(TailGraphKind kind, int n, int depth) {
    Spectrum spec;
    spec.essential.push_back({-2.0, 2.0});

    const auto zeros = zero_branch_eigenvalues(kind, n);
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        TailEigenpair pair;
        pair.lambda = zeros[j];
        pair.branch = SpectralBranch::Zero;
        pair.embedded = std::abs(pair.lambda) <= 2.0;
        if (kind == TailGraphKind::Kite) pair.cycle_mode = static_cast<int>(j) + 1;
        pair.residual = synthesize_eigenvector(kind, n, pair, depth).residual;
        spec.point.push_back(pair);
    }
    for (auto& pair : tail_branch_eigenvalues(kind, n, depth)) spec.point.push_back(pair);
    std::sort(spec.point.begin(), spec.point.end(),
              [](const TailEigenpair& a, const TailEigenpair& b) { return a.lambda < b.lambda; });
    return spec;
}

Spectrum infinite_comb_spectrum() {
    const double r2 = std::sqrt(2.0);
    Spectrum spec;
    spec.essential.push_back({-1.0 - r2, 1.0 - r2});
    spec.essential.push_back({-1.0 + r2, 1.0 + r2});
    return spec;
}

CombMembership infinite_comb_membership(double lambda) {
    CombMembership m;
    if (lambda != 0.0) {
        // exact: lambda is a binary rational, so lambda - 1/lambda compares
        // to +-2 without rounding (endpoint queries stay honest)
        const Rational l(lambda);
        const Rational t = l - 1 / l;
        m.by_criterion = t >= -2 && t <= 2;
    }
    const double r2 = std::sqrt(2.0);
    m.by_intervals = (lambda >= -1.0 - r2 && lambda <= 1.0 - r2) ||
                     (lambda >= r2 - 1.0 && lambda <= 1.0 + r2);
    m.in_spectrum = m.by_criterion;
    return m;
}

}  // namespace shiftlab
