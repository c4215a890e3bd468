#include "polyeuler/exact_series.hpp"

#include <algorithm>

#include "polyeuler/errors.hpp"

namespace polyeuler {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) coefficients_.push_back(constant);
}

Polynomial Polynomial::identity() {
    return Polynomial(std::vector<Rational>{0, 1});
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) {
    return Polynomial(std::vector<Rational>{c0, c1});
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] += o.coefficients_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] -= o.coefficients_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<Rational> out(coefficients_.size() + o.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < o.coefficients_.size(); ++j)
            out[i + j] += coefficients_[i] * o.coefficients_[j];
    coefficients_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coefficients_) x *= c;
    trim();
    return *this;
}

void Polynomial::divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot,
                        Polynomial& rem) {
    if (den.is_zero()) throw InputError("polynomial division by zero");
    std::vector<Rational> q;
    std::vector<Rational> r = num.coefficients_;
    const std::size_t dd = den.coefficients_.size();
    if (r.size() >= dd) {
        q.assign(r.size() - dd + 1, 0);
        for (std::size_t i = r.size() - 1;; --i) {
            const Rational factor = r[i] / den.leading();
            q[i - dd + 1] = factor;
            if (factor != 0)
                for (std::size_t j = 0; j < dd; ++j) r[i - dd + 1 + j] -= factor * den.coefficients_[j];
            if (i == dd - 1) break;
        }
    }
    quot = Polynomial(std::move(q));
    rem = Polynomial(std::move(r));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a *= Rational(1) / a.leading();
    return a;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const Rational& c = coefficients_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string power;
        if (i == 1) power = var;
        if (i > 1) power = var + "^" + std::to_string(i);
        if (power.empty()) {
            out += polyeuler::to_string(mag);
        } else if (mag != 1) {
            const bool integral = mag.get_den() == 1;
            out += integral ? polyeuler::to_string(mag) : "(" + polyeuler::to_string(mag) + ")";
            out += power;
        } else {
            out += power;
        }
    }
    return out;
}

Polynomial pow(const Polynomial& base, std::uint64_t exp) {
    Polynomial result(1);
    Polynomial b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1;
        if (exp != 0) b *= b;
    }
    return result;
}

// ---------------------------------------------------------------- SeriesPrefix

SeriesPrefix::SeriesPrefix(std::vector<Rational> coefficients, std::string grading)
    : coefficients_(std::move(coefficients)), grading_(std::move(grading)) {
    if (coefficients_.empty()) throw InputError("a series prefix needs at least one coefficient");
}

namespace {

void require_same_grading(const SeriesPrefix& a, const SeriesPrefix& b) {
    if (a.grading() != b.grading())
        throw InputError("grading mismatch: '" + a.grading() + "' vs '" + b.grading() + "'");
}

}  // namespace

SeriesPrefix add(const SeriesPrefix& a, const SeriesPrefix& b) {
    require_same_grading(a, b);
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] + b[k];
    return SeriesPrefix(std::move(out), a.grading());
}

SeriesPrefix scale(const SeriesPrefix& a, const Rational& c) {
    std::vector<Rational> out = a.coefficients();
    for (auto& x : out) x *= c;
    return SeriesPrefix(std::move(out), a.grading());
}

SeriesPrefix cauchy_multiply(const SeriesPrefix& a, const SeriesPrefix& b) {
    require_same_grading(a, b);
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= k; ++i) out[k] += a[i] * b[k - i];
    return SeriesPrefix(std::move(out), a.grading());
}

SeriesPrefix truncate(const SeriesPrefix& a, std::size_t length) {
    if (length == 0) throw InputError("cannot truncate a series to zero coefficients");
    const auto& c = a.coefficients();
    return SeriesPrefix(std::vector<Rational>(c.begin(), c.begin() + std::min(length, c.size())),
                        a.grading());
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw InputError("rational function with zero denominator");
    if (num.is_zero()) {
        denominator_ = Polynomial(1);
        return;
    }
    const Polynomial g = Polynomial::gcd(num, den);
    Polynomial rem;
    Polynomial::divmod(num, g, numerator_, rem);
    Polynomial::divmod(den, g, denominator_, rem);
    const Rational d0 = denominator_.coefficient(0);
    if (d0 == 0) throw InputError("rational function has a pole at t = 0: " + to_string());
    numerator_ *= Rational(1) / d0;
    denominator_ *= Rational(1) / d0;
}

SeriesPrefix RationalFunction::expand(std::size_t terms, const std::string& grading) const {
    // den(0) = 1, so c_k = num_k - sum_{i>=1} den_i c_{k-i}.
    std::vector<Rational> c(terms);
    const auto& den = denominator_.coefficients();
    for (std::size_t k = 0; k < terms; ++k) {
        Rational v = numerator_.coefficient(k);
        for (std::size_t i = 1; i < den.size() && i <= k; ++i) v -= den[i] * c[k - i];
        c[k] = v;
    }
    return SeriesPrefix(std::move(c), grading);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                            a.denominator_ * b.denominator_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.numerator_ * b.denominator_ - b.numerator_ * a.denominator_,
                            a.denominator_ * b.denominator_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_polynomial()) return numerator_.to_string(var);
    std::string num = numerator_.to_string(var);
    if (numerator_.coefficients().size() > 1 &&
        std::count_if(numerator_.coefficients().begin(), numerator_.coefficients().end(),
                      [](const Rational& c) { return c != 0; }) > 1)
        num = "(" + num + ")";
    return num + "/(" + denominator_.to_string(var) + ")";
}

// ---------------------------------------------------------------- series operations

BinomialSeries binomial_prefix(std::int64_t m, const Rational& lam, std::size_t K,
                               const std::string& grading) {
    std::vector<Rational> c(K + 1);
    c[0] = 1;
    for (std::size_t k = 0; k < K; ++k)
        c[k + 1] = c[k] * lam * Rational(m - static_cast<std::int64_t>(k)) /
                   Rational(static_cast<long>(k + 1));
    const Polynomial base = Polynomial::linear(1, lam);
    RationalFunction closed = m >= 0 ? RationalFunction(pow(base, static_cast<std::uint64_t>(m)))
                                     : RationalFunction(Polynomial(1),
                                                        pow(base, static_cast<std::uint64_t>(-m)));
    return {SeriesPrefix(std::move(c), grading), std::move(closed)};
}

namespace {

// Berlekamp-Massey over Q: shortest LFSR generating s[0..n).
Recurrence berlekamp_massey(const std::vector<Rational>& s, std::size_t n) {
    std::vector<Rational> conn{1};  // C(x) = 1 + C_1 x + ... ; recurrence taps are -C_i
    std::vector<Rational> prev{1};
    std::size_t length = 0;
    std::size_t shift = 1;
    Rational prev_discrepancy = 1;

    for (std::size_t i = 0; i < n; ++i) {
        Rational d = s[i];
        for (std::size_t j = 1; j <= length && j < conn.size(); ++j) d += conn[j] * s[i - j];
        if (d == 0) {
            ++shift;
            continue;
        }
        const Rational factor = d / prev_discrepancy;
        std::vector<Rational> updated = conn;
        if (updated.size() < prev.size() + shift) updated.resize(prev.size() + shift);
        for (std::size_t j = 0; j < prev.size(); ++j) updated[j + shift] -= factor * prev[j];
        if (2 * length <= i) {
            prev = conn;
            length = i + 1 - length;
            prev_discrepancy = d;
            shift = 1;
        } else {
            ++shift;
        }
        conn = std::move(updated);
    }

    Recurrence rec;
    rec.taps.assign(length, 0);
    for (std::size_t j = 1; j <= length && j < conn.size(); ++j) rec.taps[j - 1] = -conn[j];
    return rec;
}

bool predicts(const Recurrence& rec, const std::vector<Rational>& c) {
    const std::size_t L = rec.order();
    for (std::size_t k = L; k < c.size(); ++k) {
        Rational v = 0;
        for (std::size_t i = 1; i <= L; ++i) v += rec.taps[i - 1] * c[k - i];
        if (v != c[k]) return false;
    }
    return true;
}

}  // namespace

std::optional<Recurrence> min_recurrence(const SeriesPrefix& prefix, std::size_t max_order) {
    const std::size_t n = prefix.size();
    if (n < 2 * max_order + 2)
        throw InputError("series prefix of length " + std::to_string(n) +
                         " is too short for max order " + std::to_string(max_order) + " (need " +
                         std::to_string(2 * max_order + 2) + ")");
    // 2*max_order terms pin down any recurrence of order <= max_order; the
    // remaining n - 2*max_order >= 2 terms are held out for verification.
    Recurrence rec = berlekamp_massey(prefix.coefficients(), std::max<std::size_t>(2 * max_order, 1));
    if (rec.order() > max_order) return std::nullopt;
    if (!predicts(rec, prefix.coefficients())) return std::nullopt;
    return rec;
}

RationalFunction to_rational_function(const SeriesPrefix& prefix, const Recurrence& rec) {
    const std::size_t L = rec.order();
    if (prefix.size() < L) throw InternalError("series prefix shorter than its recurrence");
    std::vector<Rational> den(L + 1);
    den[0] = 1;
    for (std::size_t i = 1; i <= L; ++i) den[i] = -rec.taps[i - 1];
    // num = den * series mod t^L; higher terms vanish by the recurrence.
    std::vector<Rational> num(L);
    for (std::size_t k = 0; k < L; ++k)
        for (std::size_t i = 0; i <= k; ++i) num[k] += den[i] * prefix[k - i];
    RationalFunction rf(Polynomial(std::move(num)), Polynomial(std::move(den)));
    if (rf.expand(prefix.size(), prefix.grading()) != prefix)
        throw InternalError("recurrence of order " + std::to_string(L) +
                            " does not reproduce the series prefix");
    return rf;
}

Rational eval_at_one(const RationalFunction& rf) {
    Polynomial num = rf.numerator();
    Polynomial den = rf.denominator();
    const Polynomial one_minus_t = Polynomial::linear(1, -1);
    // Normalized functions never share the root t = 1; cancel it anyway if present.
    while (den(1) == 0 && num(1) == 0 && !num.is_zero()) {
        Polynomial q, r;
        Polynomial::divmod(num, one_minus_t, q, r);
        num = q;
        Polynomial::divmod(den, one_minus_t, q, r);
        den = q;
    }
    if (num.is_zero()) return 0;
    const Rational d = den(1);
    if (d == 0)
        throw RegularizationError("no regularized value (pole at t=1) for " + rf.to_string());
    return num(1) / d;
}

SeriesPolicy widen(const SeriesPolicy& requested, std::size_t needed) {
    SeriesPolicy out = requested;
    out.max_order = std::max(out.max_order, needed);
    out.terms = std::max(out.terms, 2 * out.max_order + 1);
    return out;
}

Regularization regularize(const SeriesPrefix& prefix, std::size_t max_order) {
    auto rec = min_recurrence(prefix, max_order);
    if (!rec)
        throw RegularizationError("no linear recurrence of order <= " + std::to_string(max_order) +
                                  " verifies on the " + std::to_string(prefix.size()) +
                                  "-term prefix");
    RationalFunction rf = to_rational_function(prefix, *rec);
    Rational value = eval_at_one(rf);
    return {std::move(*rec), std::move(rf), std::move(value)};
}

}  // namespace polyeuler
