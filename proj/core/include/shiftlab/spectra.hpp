#pragma once
#include <limits>
#include <optional>
#include <vector>

#include "shiftlab/families.hpp"
#include "shiftlab/lp.hpp"

namespace shiftlab {

enum class SpectralBranch { Zero, Tail };

/// One eigenvalue of a tail-attached graph. Tail-branch eigenvectors decay
/// like b^j along the tail with lambda = b + 1/b and |lambda| > 2;
/// zero-branch eigenvectors vanish on the tail entirely and their
/// eigenvalues are embedded in [-2, 2].
struct TailEigenpair {
    double lambda = 0.0;
    std::optional<double> b;  // tail decay parameter; absent on the zero branch
    SpectralBranch branch = SpectralBranch::Tail;
    double residual = std::numeric_limits<double>::quiet_NaN();
    bool embedded = false;          // |lambda| <= 2
    std::optional<int> cycle_mode;  // kite zero branch: eigenvalue 2cos(2*pi*j/(n+1))
};

struct SpectrumInterval {
    double lo = 0.0;
    double hi = 0.0;
};

struct Spectrum {
    std::vector<SpectrumInterval> essential;
    std::vector<TailEigenpair> point;  // sorted by lambda
};

/// The root of t^2 - lambda t + 1 with |t| < 1; requires |lambda| > 2.
double tail_parameter(double lambda);

/// Eigenvalues whose eigenvectors vanish on the tail: the cycle values
/// 2cos(2*pi*j/(n+1)), j = 1..floor(n/2), for the kite; {-1} for the
/// fly-swatter; none for the comb.
std::vector<double> zero_branch_eigenvalues(TailGraphKind kind, int n);

/// Eigenvalues with geometrically decaying tails, from the roots of the
/// family polynomial in (-1, 1) (kite, comb) or the closed form
/// b = -1/2 + sqrt((n+3)/(n-1))/2 (fly-swatter). Residuals are certified by
/// eigenvector synthesis.
std::vector<TailEigenpair> tail_branch_eigenvalues(TailGraphKind kind, int n, int depth = 60);

struct SynthesizedEigenvector {
    LpFunction function;
    double residual;  // max over interior vertices of |(Sf)(v) - lambda f(v)|
};

/// Materializes the eigenvector on a truncation with `depth` tail vertices
/// (depth >= n + 5) and checks the eigen-equation on the interior.
SynthesizedEigenvector synthesize_eigenvector(TailGraphKind kind, int n, const TailEigenpair& pair,
                                              int depth);

/// Essential spectrum [-2, 2] plus the certified point spectrum.
Spectrum full_spectrum(TailGraphKind kind, int n, int depth = 60);

/// The two closed intervals [-1-sqrt2, 1-sqrt2] and [-1+sqrt2, 1+sqrt2];
/// the infinite comb has no eigenvalues.
Spectrum infinite_comb_spectrum();

struct CombMembership {
    bool in_spectrum = false;
    bool by_criterion = false;  // lambda != 0 and lambda - 1/lambda in [-2, 2]
    bool by_intervals = false;  // membership in the two closed intervals
};

CombMembership infinite_comb_membership(double lambda);

}  // namespace shiftlab
