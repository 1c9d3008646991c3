#ifndef HOMALG_SCALARS_HPP
#define HOMALG_SCALARS_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "homalg/parse.hpp"

namespace homalg {

/// Raised when a Laurent polynomial is evaluated at q = 0.
class InvalidSpecialization : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

/// Laurent polynomial in one formal parameter q with exact rational
/// coefficients.  Zero coefficients are never stored, so two values are equal
/// exactly when their term maps are equal.
class QLaurent {
   public:
    using Terms = std::map<int, Rational>;

    QLaurent() = default;
    QLaurent(int c) : QLaurent(Rational(c)) {}  // NOLINT: scalars embed implicitly
    QLaurent(const Rational& c) {               // NOLINT
        if (c != 0) terms_.emplace(0, c);
    }

    /// c * q^k
    static QLaurent q_power(int k, const Rational& c = Rational(1)) {
        QLaurent r;
        if (c != 0) r.terms_.emplace(k, c);
        return r;
    }
    static QLaurent q() { return q_power(1); }

    const Terms& terms() const& noexcept { return terms_; }
    // by value on temporaries, so `for (... : f().terms())` does not dangle
    Terms terms() && noexcept { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Value of a constant Laurent polynomial; throws if q occurs.
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("scalar depends on q: " + to_string());
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    Rational coefficient(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    QLaurent& operator+=(const QLaurent& rhs) {
        for (const auto& [k, c] : rhs.terms_) add(k, c);
        return *this;
    }
    QLaurent& operator-=(const QLaurent& rhs) {
        for (const auto& [k, c] : rhs.terms_) add(k, -c);
        return *this;
    }
    QLaurent& operator*=(const QLaurent& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend QLaurent operator+(QLaurent lhs, const QLaurent& rhs) { return lhs += rhs; }
    friend QLaurent operator-(QLaurent lhs, const QLaurent& rhs) { return lhs -= rhs; }
    friend QLaurent operator-(QLaurent v) {
        for (auto& [k, c] : v.terms_) c = -c;
        return v;
    }
    friend QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        QLaurent r;
        for (const auto& [i, a] : lhs.terms_)
            for (const auto& [j, b] : rhs.terms_) r.add(i + j, a * b);
        return r;
    }
    friend bool operator==(const QLaurent& lhs, const QLaurent& rhs) { return lhs.terms_ == rhs.terms_; }

    QLaurent pow(unsigned n) const {
        QLaurent result(1);
        QLaurent base = *this;
        while (n != 0) {
            if (n & 1U) result *= base;
            n >>= 1U;
            if (n != 0) base *= base;
        }
        return result;
    }

    /// Exact evaluation at q = q0.
    Rational specialize(const Rational& q0) const {
        if (q0 == 0) throw InvalidSpecialization("cannot specialize a Laurent polynomial at q = 0");
        Rational sum = 0;
        for (const auto& [k, c] : terms_) {
            Rational p = 1;
            const Rational base = k < 0 ? Rational(1) / q0 : q0;
            for (int i = 0; i < (k < 0 ? -k : k); ++i) p *= base;
            sum += c * p;
        }
        return sum;
    }

    /// Sparse text form, exponent ascending: "3*q^-1 + 1/2*q^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (first) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string qpart;
            if (k == 1) {
                qpart = "q";
            } else if (k != 0) {
                qpart = "q^" + std::to_string(k);
            }
            if (qpart.empty()) {
                out += homalg::to_string(mag);
            } else if (mag == 1) {
                out += qpart;
            } else {
                out += homalg::to_string(mag) + "*" + qpart;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const QLaurent& v) { return os << v.to_string(); }

   private:
    void add(int k, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline std::string to_string(const QLaurent& v) { return v.to_string(); }

inline Rational specialize(const QLaurent& v, const Rational& q0) { return v.specialize(q0); }

/// Parses the text form produced by QLaurent::to_string (and any sum of
/// products of rationals and powers of q).
inline QLaurent parse_qlaurent(std::string_view text) {
    detail::ExprReader<QLaurent> reader(
        text,
        [](char name, long e) -> QLaurent {
            if (name != 'q') throw std::invalid_argument(std::string("unknown symbol '") + name + "'");
            return QLaurent::q_power(static_cast<int>(e));
        },
        [](const Rational& r) { return QLaurent(r); });
    return reader.parse();
}

/// Parses a rational literal such as "-3/4".
inline Rational parse_rational(std::string_view text) {
    const QLaurent v = parse_qlaurent(text);
    if (!v.is_constant()) throw ParseError("expected a rational number", text, 0);
    return v.constant_value();
}

}  // namespace homalg

#endif
