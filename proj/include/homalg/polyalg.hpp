#ifndef HOMALG_POLYALG_HPP
#define HOMALG_POLYALG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "homalg/lincomb.hpp"

namespace homalg {

/// x^i y^j in the affine plane k[x,y].
///
/// The variable set is fixed to {x, y}.  Growing it to n variables means
/// replacing the two exponents with an exponent array; every algorithm below
/// only touches the fields through degree(), the ordering and the generator
/// helpers.
struct Monomial {
    unsigned x = 0;
    unsigned y = 0;

    unsigned degree() const noexcept { return x + y; }

    // Term order: higher total degree first, then higher power of x.  Sums
    // therefore print as "x^2 + 2*x*y + y^2 + x".
    friend bool operator<(const Monomial& a, const Monomial& b) noexcept {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.x > b.x;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

using Poly = LinComb<Monomial>;

enum class Var { x, y };

inline std::string to_string(const Monomial& m) {
    if (m.degree() == 0) return "1";
    std::string out;
    auto put = [&](char v, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
    };
    put('x', m.x);
    put('y', m.y);
    return out;
}

inline std::string to_string(const Poly& p) {
    return render(p, [](const Monomial& m) { return to_string(m); });
}

inline Poly monomial(unsigned i, unsigned j, const QLaurent& c = QLaurent(1)) { return Poly({i, j}, c); }
inline Poly poly_x() { return monomial(1, 0); }
inline Poly poly_y() { return monomial(0, 1); }
inline Poly poly_const(const QLaurent& c) { return monomial(0, 0, c); }

inline Poly operator*(const Poly& a, const Poly& b) {
    return bilinear_extend(a, b, [](const Monomial& u, const Monomial& v) {
        return Poly({u.x + v.x, u.y + v.y});
    });
}

inline Poly partial_derivative(const Poly& p, Var var) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = var == Var::x ? m.x : m.y;
        if (e == 0) continue;
        Monomial d = m;
        (var == Var::x ? d.x : d.y) -= 1;
        r.add_term(d, c * QLaurent(static_cast<int>(e)));
    }
    return r;
}

/// Terms of p of total degree n.
inline Poly graded_component(const Poly& p, unsigned n) {
    Poly r;
    for (const auto& [m, c] : p.terms())
        if (m.degree() == n) r.add_term(m, c);
    return r;
}

/// All x^i y^j with i + j <= d: by degree, and within a degree by
/// decreasing power of x.  (d+1)(d+2)/2 entries.
inline std::vector<Monomial> enumerate_monomials(unsigned max_total_degree) {
    std::vector<Monomial> out;
    out.reserve((max_total_degree + 1) * (max_total_degree + 2) / 2);
    for (unsigned n = 0; n <= max_total_degree; ++n)
        for (unsigned i = n + 1; i-- > 0;) out.push_back({i, n - i});
    return out;
}

/// Unital algebra endomorphism of k[x,y], given by the images of x and y.
class PolyEndo {
   public:
    PolyEndo(Poly image_of_x, Poly image_of_y) : image_x_(std::move(image_of_x)), image_y_(std::move(image_of_y)) {}

    static PolyEndo identity() { return {poly_x(), poly_y()}; }
    /// x -> cx * x, y -> cy * y
    static PolyEndo diagonal(const QLaurent& cx, const QLaurent& cy) { return {cx * poly_x(), cy * poly_y()}; }

    const Poly& image_of_x() const noexcept { return image_x_; }
    const Poly& image_of_y() const noexcept { return image_y_; }

    Poly apply(const Monomial& m) const { return pow(image_x_, m.x) * pow(image_y_, m.y); }
    Poly apply(const Poly& p) const {
        return linear_extend(p, [this](const Monomial& m) { return apply(m); });
    }

    PolyEndo compose(const PolyEndo& inner) const { return {apply(inner.image_x_), apply(inner.image_y_)}; }

   private:
    static Poly pow(const Poly& base, unsigned e) {
        Poly r = poly_const(1);
        for (unsigned i = 0; i < e; ++i) r = r * base;
        return r;
    }

    Poly image_x_;
    Poly image_y_;
};

inline Poly apply_endo(const PolyEndo& e, const Poly& p) { return e.apply(p); }

/// Reads "q^2*x^2*y + 3*x"-style text; q may carry negative exponents.
inline Poly parse_poly(std::string_view text) {
    detail::ExprReader<Poly> reader(
        text,
        [](char name, long e) -> Poly {
            if (name == 'q') return poly_const(QLaurent::q_power(static_cast<int>(e)));
            if (name != 'x' && name != 'y')
                throw std::invalid_argument(std::string("unknown symbol '") + name + "'");
            if (e < 0) throw std::invalid_argument("negative exponent on a polynomial variable");
            const auto u = static_cast<unsigned>(e);
            return name == 'x' ? monomial(u, 0) : monomial(0, u);
        },
        [](const Rational& r) { return poly_const(r); });
    return reader.parse();
}

}  // namespace homalg

#endif
