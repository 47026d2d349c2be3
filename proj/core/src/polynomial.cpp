#include "shiftlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shiftlab {

namespace mp = boost::multiprecision;

Polynomial::Polynomial(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
    normalize();
}

Polynomial Polynomial::from_integers(const std::vector<std::int64_t>& ascending) {
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (auto x : ascending) c.emplace_back(x);
    return Polynomial(std::move(c));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    integer_image_.clear();
    if (coeffs_.empty()) return;
    BigInt common_den = 1;
    for (const auto& c : coeffs_) common_den = mp::lcm(common_den, mp::denominator(c));
    integer_image_.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        integer_image_.push_back(mp::numerator(c) * (common_den / mp::denominator(c)));
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

bool Polynomial::is_even() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (coeffs_[k] != 0) return false;
    return true;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

int Polynomial::sign_at(const Rational& x) const {
    if (coeffs_.empty()) return 0;
    // sign(P(n/d)) = sign(sum C_k n^k d^(deg-k)) since d > 0
    const BigInt n = mp::numerator(x);
    const BigInt d = mp::denominator(x);
    BigInt acc = 0;
    BigInt dpow = 1;
    for (auto it = integer_image_.rbegin(); it != integer_image_.rend(); ++it) {
        acc = acc * n + *it * dpow;
        dpow *= d;
    }
    return acc == 0 ? 0 : acc < 0 ? -1 : 1;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial();
    std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial kite_polynomial(int n) {
    if (n < 2) throw std::invalid_argument("kite polynomial needs n >= 2");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 2, Rational(0));
    c[0] = -1;
    c[2] = 2;
    c[static_cast<std::size_t>(n) + 1] = 1;
    return Polynomial(std::move(c));
}

Polynomial comb_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("comb polynomial needs n >= 1");
    Polynomial prev = Polynomial::from_integers({1});                      // h_1
    if (n == 1) return prev;
    Polynomial cur = Polynomial::from_integers({1, 0, 0, 0, -1, 0, -1});   // h_2
    const Polynomial a = Polynomial::from_integers({1, 0, 1, 0, 1});       // x^4 + x^2 + 1
    const Polynomial b = Polynomial::from_integers({0, 0, 1, 0, 2, 0, 1}); // x^2 (x^2+1)^2
    for (int k = 3; k <= n; ++k) {
        Polynomial next = a * cur - b * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

double bisect(const Polynomial& poly, Rational lo, Rational hi, int sign_lo, double tol) {
    // invariant: sign(lo) = sign_lo != sign(hi), both nonzero
    while (to_double(Rational(hi - lo)) > tol) {
        Rational mid = (lo + hi) / 2;
        const int s = poly.sign_at(mid);
        if (s == 0) return to_double(mid);
        if (s == sign_lo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return to_double(Rational((lo + hi) / 2));
}

}  // namespace

std::vector<double> roots_in_open_interval(const Polynomial& poly, double a, double b, double tol) {
    if (!(a < b)) throw std::invalid_argument("roots_in_open_interval needs a < b");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (poly.is_zero()) throw std::invalid_argument("zero polynomial has no isolated roots");
    if (poly.degree() == 0) return {};

    // Inset by tol: the interval is open, so endpoint zeros are excluded.
    const Rational lo = Rational(a) + Rational(tol);
    const Rational hi = Rational(b) - Rational(tol);
    if (lo >= hi) return {};

    const int points = 4 * poly.degree() + 64;
    const Rational step = Rational(hi - lo) / points;

    std::vector<double> roots;
    Rational prev_x = lo;
    int prev_sign = poly.sign_at(lo);
    if (prev_sign == 0) roots.push_back(to_double(lo));
    for (int i = 1; i <= points; ++i) {
        Rational x = (i == points) ? hi : Rational(lo + step * i);
        const int s = poly.sign_at(x);
        if (s == 0) {
            roots.push_back(to_double(x));
        } else if (prev_sign != 0 && s != prev_sign) {
            roots.push_back(bisect(poly, prev_x, x, prev_sign, tol));
        }
        prev_x = std::move(x);
        prev_sign = s;
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double r : roots)
        if (merged.empty() || r - merged.back() >= 10.0 * tol) merged.push_back(r);
    return merged;
}

double residual_at(const Polynomial& poly, double x) {
    return std::abs(to_double(poly.eval(Rational(x))));
}

}  // namespace shiftlab
