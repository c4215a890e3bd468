#include "polyeuler/rational.hpp"

#include <cctype>

#include "polyeuler/errors.hpp"

namespace polyeuler {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::input: return "input";
        case ErrorKind::resource: return "resource";
        case ErrorKind::regularization: return "regularization-failure";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Integer& z) {
    return z.get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                            : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InputError("malformed rational literal '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw InputError("division by zero in rational literal '" + std::string(text) + "'");
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& base, std::int64_t exp) {
    if (exp < 0) {
        if (base == 0) throw InputError("zero raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exp);
    }
    Rational result = 1;
    Rational b = base;
    auto e = static_cast<std::uint64_t>(exp);
    while (e != 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

Integer pow(const Integer& base, std::uint64_t exp) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Integer factorial(std::uint64_t n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

}  // namespace polyeuler
