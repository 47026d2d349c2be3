#pragma once
#include <cstdint>
#include <vector>

#include "shiftlab/rational.hpp"

namespace shiftlab {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Sign evaluation at rational points is exact (integer arithmetic), which is
/// what keeps root isolation honest for the high-degree recurrence families
/// whose coefficients exceed double precision.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<Rational> ascending_coefficients);
    static Polynomial from_integers(const std::vector<std::int64_t>& ascending);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int k) const;
    bool is_even() const;  // all odd coefficients vanish

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    int sign_at(const Rational& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;

private:
    std::vector<Rational> coeffs_;
    std::vector<BigInt> integer_image_;  // coefficients scaled by a common denominator
    void normalize();
};

/// x^(n+1) + 2x^2 - 1, the tail-parameter relation of the cycle with a tail; n >= 2.
Polynomial kite_polynomial(int n);

/// The comb determinant family: h_1 = 1, h_2 = -x^6 - x^4 + 1, and
/// h_n = (x^4 + x^2 + 1) h_{n-1} - x^2 (x^2+1)^2 h_{n-2}; n >= 1.
Polynomial comb_polynomial(int n);

/// Roots in the open interval (a, b), isolated by a uniform sign-change scan
/// (4*degree + 64 points) and refined by bisection to width tol. Signs are
/// evaluated exactly, so scan decisions never suffer cancellation; roots of
/// even multiplicity may still be missed. Endpoint roots are excluded.
std::vector<double> roots_in_open_interval(const Polynomial& poly, double a, double b,
                                           double tol = 1e-12);

/// |poly(x)| via exact evaluation at the (exactly representable) double x.
double residual_at(const Polynomial& poly, double x);

}  // namespace shiftlab
