#include "polyeuler/set_parser.hpp"

#include <cctype>
#include <string>

#include "polyeuler/errors.hpp"
#include "polyeuler/rational.hpp"

namespace polyeuler {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PolyhedralSet1D parse() {
        auto out = expr();
        skip();
        if (pos_ != text_.size()) fail("'u', '|', '&', '\\' or end of input");
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw InputError("parse error at column " + std::to_string(pos_ + 1) + ": expected " +
                         expected + ", found " + found);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    // 'u' as a union keyword: not followed by a letter.
    bool accept_union() {
        const char c = peek();
        if (c == '|') {
            ++pos_;
            return true;
        }
        if (c == 'u' && (pos_ + 1 == text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            return true;
        }
        return false;
    }

    PolyhedralSet1D expr() {
        auto out = diff();
        while (accept_union()) out = unite(out, diff());
        return out;
    }

    PolyhedralSet1D diff() {
        auto out = meet();
        while (accept('\\')) out = difference(out, meet());
        return out;
    }

    PolyhedralSet1D meet() {
        auto out = unary();
        while (accept('&')) out = intersect(out, unary());
        return out;
    }

    PolyhedralSet1D unary() {
        if (accept('!')) return complement(unary());
        return atom();
    }

    bool starts_value() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == 'i';
    }

    PolyhedralSet1D atom() {
        const char c = peek();
        if (c == '{') return finite_set();
        if (c == '[') return interval();
        if (c == '(') {
            const std::size_t open = pos_++;
            const bool literal = starts_value();
            pos_ = open;
            if (literal) return interval();
            ++pos_;
            auto inner = expr();
            expect(')');
            return inner;
        }
        fail("'(', '[', '{' or '!'");
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("a digit");
        return std::string(text_.substr(start, pos_ - start));
    }

    ExtendedRational value() {
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        skip();
        if (text_.substr(pos_, 3) == "inf") {
            pos_ += 3;
            return negative ? ExtendedRational::neg_inf() : ExtendedRational::pos_inf();
        }
        std::string literal = digits();
        if (accept('/')) {
            const std::size_t den_at = pos_;
            const std::string den = digits();
            if (den.find_first_not_of('0') == std::string::npos) {
                pos_ = den_at;
                skip();
                throw InputError("parse error at column " + std::to_string(pos_ + 1) +
                                 ": division by zero in rational literal");
            }
            literal += "/" + den;
        }
        Rational q = parse_rational(literal);
        return negative ? Rational(-q) : q;
    }

    Rational finite_value() {
        const std::size_t at = (skip(), pos_);
        auto v = value();
        if (!v.is_finite()) {
            pos_ = at;
            fail("a finite rational");
        }
        return v.value();
    }

    PolyhedralSet1D finite_set() {
        expect('{');
        std::vector<Rational> pts;
        if (accept('}')) return PolyhedralSet1D::empty();
        pts.push_back(finite_value());
        while (accept(',')) pts.push_back(finite_value());
        if (!accept('}')) fail("',' or '}'");
        return PolyhedralSet1D::points(pts);
    }

    PolyhedralSet1D interval() {
        const std::size_t start = (skip(), pos_);
        const bool lo_closed = text_[pos_++] == '[';
        if (!starts_value()) fail("a rational or inf");
        const auto lo = value();
        expect(',');
        if (!starts_value()) fail("a rational or inf");
        const auto hi = value();
        bool hi_closed;
        if (accept(']')) hi_closed = true;
        else if (accept(')')) hi_closed = false;
        else fail("')' or ']'");

        auto at_start = [&](const std::string& what) {
            throw InputError("malformed interval at column " + std::to_string(start + 1) + ": " + what);
        };
        if (!(lo < hi)) at_start("lower end " + lo.to_string() + " is not below upper end " + hi.to_string());
        if ((lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite()))
            at_start("an infinite end cannot be closed");
        auto out = PolyhedralSet1D::open(lo, hi);
        if (lo_closed) out = unite(out, PolyhedralSet1D::point(lo.value()));
        if (hi_closed) out = unite(out, PolyhedralSet1D::point(hi.value()));
        return out;
    }
};

}  // namespace

PolyhedralSet1D parse_set_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace polyeuler
