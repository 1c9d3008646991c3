#ifndef HOMALG_PARSE_HPP
#define HOMALG_PARSE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& what, std::string_view text, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos) + " in \"" +
                                std::string(text) + "\"") {}
};

namespace detail {

// Recursive-descent reader for sparse sums of products shared by every text
// form in the library:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*          juxtaposition multiplies
//   factor  := primary ['^' ['-'] integer]
//   primary := integer ['/' integer] | letter | '(' expr ')'
//
// Every letter is its own atom, so "xy" reads as x*y.  Atoms receive their
// exponent directly, which lets the caller accept q^-1 while refusing x^-1.
// Products are formed left to right, so noncommutative rings parse correctly.
template <class Ring>
class ExprReader {
   public:
    using AtomFn = std::function<Ring(char name, long exponent)>;
    using ScalarFn = std::function<Ring(const Rational&)>;

    ExprReader(std::string_view text, AtomFn atom, ScalarFn scalar)
        : text_(text), atom_(std::move(atom)), scalar_(std::move(scalar)) {}

    Ring parse() {
        Ring value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return value;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, text_, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const auto c = static_cast<unsigned char>(text_[pos_]);
        return std::isdigit(c) || std::isalpha(c) || c == '(';
    }

    BigInt integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    long exponent() {
        bool negative = false;
        bool paren = false;
        if (peek('(')) {
            ++pos_;
            paren = true;
        }
        if (peek('-')) {
            ++pos_;
            negative = true;
        } else if (peek('+')) {
            ++pos_;
        }
        const BigInt e = integer();
        if (e > 100000) fail("exponent too large");
        if (paren) {
            if (!peek(')')) fail("expected ')'");
            ++pos_;
        }
        const long v = e.convert_to<long>();
        return negative ? -v : v;
    }

    Ring power(const Ring& base, long e) {
        if (e < 0) fail("negative exponent on a non-invertible factor");
        Ring result = scalar_(Rational(1));
        for (long i = 0; i < e; ++i) result = result * base;
        return result;
    }

    Ring factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            long e = 1;
            if (peek('^')) {
                ++pos_;
                e = exponent();
            }
            try {
                return atom_(c, e);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& ex) {
                fail(ex.what());
            }
        }
        Ring base;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = integer();
            BigInt den = 1;
            if (peek('/')) {
                ++pos_;
                den = integer();
                if (den == 0) fail("zero denominator");
            }
            base = scalar_(Rational(num, den));
        } else if (c == '(') {
            ++pos_;
            base = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        if (peek('^')) {
            ++pos_;
            return power(base, exponent());
        }
        return base;
    }

    Ring term() {
        Ring value = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                value = value * factor();
            } else if (starts_factor()) {
                value = value * factor();
            } else {
                return value;
            }
        }
    }

    Ring expr() {
        bool negative = false;
        if (peek('-')) {
            ++pos_;
            negative = true;
        } else if (peek('+')) {
            ++pos_;
        }
        Ring value = term();
        if (negative) value = -value;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                value = value + term();
            } else if (peek('-')) {
                ++pos_;
                value = value - term();
            } else {
                return value;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    AtomFn atom_;
    ScalarFn scalar_;
};

}  // namespace detail
}  // namespace homalg

#endif
