#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyeuler/rational.hpp"

namespace polyeuler {

/// Exact-rational polynomial, ascending coefficients, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(const Rational& constant);
    Polynomial(int constant) : Polynomial(Rational(constant)) {}

    /// The polynomial x.
    static Polynomial identity();
    /// c0 + c1*t.
    static Polynomial linear(const Rational& c0, const Rational& c1);

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    bool is_zero() const { return coefficients_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }
    Rational coefficient(std::size_t i) const;
    const Rational& leading() const { return coefficients_.back(); }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division; throws InputError when dividing by zero.
    static void divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot,
                       Polynomial& rem);
    /// Monic greatest common divisor (zero if both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    /// Human-readable form in `var`, e.g. "1 + 4t + 3t^2".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

Polynomial pow(const Polynomial& base, std::uint64_t exp);

/// A truncated power series c_0 + c_1 t + ... + c_K t^K in a named grading variable.
class SeriesPrefix {
public:
    /// The single coefficient 0.
    SeriesPrefix() : coefficients_(1), grading_("t") {}
    explicit SeriesPrefix(std::vector<Rational> coefficients, std::string grading = "t");

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const std::string& grading() const { return grading_; }
    std::size_t size() const { return coefficients_.size(); }
    const Rational& operator[](std::size_t k) const { return coefficients_[k]; }

    friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;

private:
    std::vector<Rational> coefficients_;
    std::string grading_;
};

/// Coefficient-wise sum over the common length. Throws InputError on grading mismatch.
SeriesPrefix add(const SeriesPrefix& a, const SeriesPrefix& b);
SeriesPrefix scale(const SeriesPrefix& a, const Rational& c);
/// Product truncated to the shorter of the two lengths.
SeriesPrefix cauchy_multiply(const SeriesPrefix& a, const SeriesPrefix& b);
/// First min(length, size) coefficients; length must be >= 1.
SeriesPrefix truncate(const SeriesPrefix& a, std::size_t length);

/// num/den with den(0) = 1 and gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : numerator_(), denominator_(1) {}
    RationalFunction(const Polynomial& p) : numerator_(p), denominator_(1) {}
    /// Normalizes. Throws InputError when den is zero or vanishes at t=0
    /// after cancelling common factors (no power-series expansion).
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return numerator_; }
    const Polynomial& denominator() const { return denominator_; }
    bool is_polynomial() const { return denominator_.degree() == 0; }

    /// Taylor coefficients c_0..c_{terms-1} at t = 0.
    SeriesPrefix expand(std::size_t terms, const std::string& grading = "t") const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    Polynomial numerator_;
    Polynomial denominator_;
};

/// c_k = sum_{i=1..order} taps[i-1] * c_{k-i}, holding for every k >= order.
struct Recurrence {
    std::vector<Rational> taps;

    std::size_t order() const { return taps.size(); }
    friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

struct BinomialSeries {
    SeriesPrefix prefix;
    RationalFunction closed_form;
};

/// (1 + lam t)^m to order K (K+1 coefficients), generalized binomial for m < 0.
BinomialSeries binomial_prefix(std::int64_t m, const Rational& lam, std::size_t K,
                               const std::string& grading = "t");

/// Shortest linear recurrence of order <= max_order, fitted on the first
/// 2*max_order coefficients and confirmed on every remaining one. Empty when
/// none verifies.
/// Throws InputError when N < 2*max_order + 2.
std::optional<Recurrence> min_recurrence(const SeriesPrefix& prefix, std::size_t max_order);

/// The rational function generated by `rec` with initial terms from `prefix`.
/// Throws InternalError if it does not re-expand to the prefix.
RationalFunction to_rational_function(const SeriesPrefix& prefix, const Recurrence& rec);

/// Value at t = 1. Throws RegularizationError on a pole at t = 1.
Rational eval_at_one(const RationalFunction& rf);

/// Term-count and order policy for regularizing a prefix.
struct SeriesPolicy {
    std::size_t terms = 24;
    std::size_t max_order = 8;
};

struct Regularization {
    Recurrence recurrence;
    RationalFunction closed_form;
    Rational value;
};

/// A graded Euler series with its continuation and value at t = 1.
struct EulerSeries {
    SeriesPrefix prefix;
    std::optional<Recurrence> recurrence;
    RationalFunction closed_form;
    Rational value;
};

/// Smallest policy that can identify a recurrence of order `needed`, never
/// below the requested one.
SeriesPolicy widen(const SeriesPolicy& requested, std::size_t needed);

/// min_recurrence + to_rational_function + eval_at_one. Throws RegularizationError
/// when no recurrence verifies.
Regularization regularize(const SeriesPrefix& prefix, std::size_t max_order);

}  // namespace polyeuler
