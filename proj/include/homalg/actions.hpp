#ifndef HOMALG_ACTIONS_HPP
#define HOMALG_ACTIONS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "homalg/homcore.hpp"
#include "homalg/polyalg.hpp"
#include "homalg/uea_sl2.hpp"

namespace homalg {

// U(sl(2)) acting on k[x,y] by
//   X = x d/dy,   Y = y d/dx,   Z = x d/dx - y d/dy,
// extended to PBW monomials by composition: (X^aY^bZ^c)P = X^a(Y^b(Z^c P)).

inline Poly act_generator(Gen g, const Poly& p) {
    switch (g) {
        case Gen::X: return poly_x() * partial_derivative(p, Var::y);
        case Gen::Y: return poly_y() * partial_derivative(p, Var::x);
        case Gen::Z: break;
    }
    return poly_x() * partial_derivative(p, Var::x) - poly_y() * partial_derivative(p, Var::y);
}

inline Poly act(const PBWMonomial& z, const Poly& p) {
    Poly r = p;
    for (unsigned i = 0; i < z.c && !r.is_zero(); ++i) r = act_generator(Gen::Z, r);
    for (unsigned i = 0; i < z.b && !r.is_zero(); ++i) r = act_generator(Gen::Y, r);
    for (unsigned i = 0; i < z.a && !r.is_zero(); ++i) r = act_generator(Gen::X, r);
    return r;
}

inline Poly act(const PBWMonomial& z, const Monomial& m) { return act(z, Poly(m)); }

inline Poly act(const UElem& z, const Poly& p) {
    return bilinear_extend(z, p, [](const PBWMonomial& u, const Monomial& m) { return act(u, m); });
}

/// The q-deformed structure map ρ_α = α_A∘ρ together with the maps that
/// produce it.
struct DeformedAction {
    PolyEndo alpha_A;
    UAlgebraMap alpha_U;

    /// α_A(x) = q²x, α_A(y) = qy;  α_L(X) = qX, α_L(Y) = q⁻¹Y, α_L(Z) = Z.
    static DeformedAction q_example() {
        return {PolyEndo::diagonal(QLaurent::q_power(2), QLaurent::q()), extend_lie_endo(UEndo::q_example())};
    }
    static DeformedAction identity() { return {PolyEndo::identity(), extend_lie_endo(UEndo::identity())}; }
};

inline Poly deformed_act(const DeformedAction& d, const UElem& z, const Poly& p) {
    return d.alpha_A.apply(act(z, p));
}

namespace detail {

inline std::string bounds_text(unsigned bound_H, unsigned bound_A) {
    return "PBW degree <= " + std::to_string(bound_H) + ", polynomial degree <= " + std::to_string(bound_A);
}

}  // namespace detail

/// x(ab) = Σ(x'a)(x''b) for PBW monomials x of degree <= bound_H and
/// monomial pairs of degree <= bound_A, the Sweedler sum taken from comul.
inline CheckReport check_classical_module_algebra(unsigned bound_H, unsigned bound_A) {
    CheckReport r{"classical-module-algebra", "x(ab) = sum (x'a)(x''b)", detail::bounds_text(bound_H, bound_A), 0, 0,
                  {}};
    const auto mons = enumerate_monomials(bound_A);
    for (const PBWMonomial& x : enumerate_pbw(bound_H)) {
        const Tensor2U dx = comul(x);
        for (const Monomial& a : mons)
            for (const Monomial& b : mons) {
                const Poly lhs = act(x, Poly(a) * Poly(b));
                Poly rhs;
                for (const auto& [split, c] : dx.terms()) rhs.add_scaled(act(split.first, a) * act(split.second, b), c);
                ++r.tested;
                if (!(lhs == rhs))
                    r.record({"", {to_string(x), to_string(a), to_string(b)}, to_string(lhs), to_string(rhs)});
            }
    }
    return r;
}

/// α_A(WP) = α_L(W)α_A(P) for W in {X, Y, Z} and monomials P of degree <=
/// bound.
inline CheckReport check_alphaWP(const DeformedAction& d, unsigned bound) {
    CheckReport r{"alpha-generator-compat", "alpha_A(WP) = alpha_L(W)alpha_A(P)",
                  "W in {X, Y, Z}, polynomial degree <= " + std::to_string(bound), 0, 0, {}};
    for (Gen w : all_generators)
        for (const Monomial& p : enumerate_monomials(bound)) {
            const Poly lhs = d.alpha_A.apply(act_generator(w, Poly(p)));
            const Poly rhs = act(d.alpha_U.generators().image(w), d.alpha_A.apply(Poly(p)));
            ++r.tested;
            if (!(lhs == rhs))
                r.record({"", {std::string(1, generator_name(w)), to_string(p)}, to_string(lhs), to_string(rhs)});
        }
    return r;
}

/// α_A(za) = α_U(z)α_A(a) for PBW monomials z of degree <= bound_H and
/// monomials a of degree <= bound_A.
inline CheckReport check_alphaza(const DeformedAction& d, unsigned bound_H, unsigned bound_A) {
    CheckReport r{"alpha-enveloping-compat", "alpha_A(za) = alpha_U(z)alpha_A(a)",
                  detail::bounds_text(bound_H, bound_A), 0, 0, {}};
    const auto mons = enumerate_monomials(bound_A);
    for (const PBWMonomial& z : enumerate_pbw(bound_H)) {
        const UElem az = d.alpha_U.apply(z);
        for (const Monomial& a : mons) {
            const Poly lhs = d.alpha_A.apply(act(z, a));
            const Poly rhs = act(az, d.alpha_A.apply(Poly(a)));
            ++r.tested;
            if (!(lhs == rhs)) r.record({"", {to_string(z), to_string(a)}, to_string(lhs), to_string(rhs)});
        }
    }
    return r;
}

/// Z-weights of the degree-n slice A_n, read off by acting with Z on each
/// monomial, together with the structural facts identifying A_n with V(n).
struct WeightSpectrum {
    std::vector<int> weights;             // sorted, highest first
    bool closed_under_generators = true;  // X, Y, Z map A_n into A_n
    bool monomials_are_eigenvectors = true;
    bool highest_weight_killed_by_X = false;  // X x^n = 0
    bool lowest_weight_killed_by_Y = false;   // Y y^n = 0
};

inline WeightSpectrum weight_spectrum(unsigned n) {
    WeightSpectrum s;
    for (unsigned i = n + 1; i-- > 0;) {
        const Poly p = monomial(i, n - i);
        for (Gen g : all_generators) {
            const Poly image = act_generator(g, p);
            if (!(graded_component(image, n) == image)) s.closed_under_generators = false;
        }
        const Poly zp = act_generator(Gen::Z, p);
        if (zp.is_zero()) {
            s.weights.push_back(0);
            continue;
        }
        if (zp.size() != 1 || !(zp.terms().begin()->first == Monomial{i, n - i}) ||
            !zp.terms().begin()->second.is_constant()) {
            s.monomials_are_eigenvectors = false;
            continue;
        }
        const Rational w = zp.terms().begin()->second.constant_value();
        s.weights.push_back(w.convert_to<int>());
    }
    std::sort(s.weights.rbegin(), s.weights.rend());
    s.highest_weight_killed_by_X = act_generator(Gen::X, monomial(n, 0)).is_zero();
    s.lowest_weight_killed_by_Y = act_generator(Gen::Y, monomial(0, n)).is_zero();
    return s;
}

// Carriers for the sl(2) scenario.  Test bases are degree-bounded; every map
// involved preserves degree, so the bound is also the in-range predicate.

inline BialgCarrier<PBWMonomial> enveloping_carrier(unsigned bound_H) {
    BialgCarrier<PBWMonomial> H;
    H.name = "U(sl2)";
    H.basis = enumerate_pbw(bound_H);
    H.mul = [](const PBWMonomial& a, const PBWMonomial& b) { return pbw_mul(a, b); };
    H.alpha = identity_map<PBWMonomial>();
    H.show = [](const PBWMonomial& m) { return to_string(m); };
    H.in_range = [bound_H](const PBWMonomial& m) { return m.degree() <= bound_H; };
    H.comul = memoize(std::function<Tensor2U(const PBWMonomial&)>([](const PBWMonomial& m) { return comul(m); }));
    return H;
}

inline AlgCarrier<Monomial> plane_carrier(unsigned bound_A) {
    AlgCarrier<Monomial> A;
    A.name = "k[x,y]";
    A.basis = enumerate_monomials(bound_A);
    A.mul = [](const Monomial& a, const Monomial& b) { return Poly(Monomial{a.x + b.x, a.y + b.y}); };
    A.alpha = identity_map<Monomial>();
    A.show = [](const Monomial& m) { return to_string(m); };
    A.in_range = [bound_A](const Monomial& m) { return m.degree() <= bound_A; };
    return A;
}

/// k[x,y] as a U(sl(2))-module via the differential-operator action.
inline ModCarrier<PBWMonomial, Monomial> plane_module(unsigned bound_A) {
    ModCarrier<PBWMonomial, Monomial> M;
    M.name = "k[x,y]";
    M.basis = enumerate_monomials(bound_A);
    M.alpha = identity_map<Monomial>();
    M.rho = memoize(std::function<Poly(const PBWMonomial&, const Monomial&)>(
        [](const PBWMonomial& z, const Monomial& m) { return act(z, m); }));
    M.show = [](const Monomial& m) { return to_string(m); };
    M.in_range = [bound_A](const Monomial& m) { return m.degree() <= bound_A; };
    return M;
}

inline LinearMap<PBWMonomial> as_linear_map(const UAlgebraMap& h) {
    return memoize(LinearMap<PBWMonomial>([h](const PBWMonomial& m) { return h.apply(m); }));
}

inline LinearMap<Monomial> as_linear_map(const PolyEndo& e) {
    return memoize(LinearMap<Monomial>([e](const Monomial& m) { return e.apply(m); }));
}

/// sl(2) itself, with the commutator bracket of U(sl(2)).
inline LieCarrier<PBWMonomial> sl2_lie_carrier() {
    LieCarrier<PBWMonomial> L;
    L.name = "sl2";
    for (Gen g : all_generators) L.basis.push_back(generator_monomial(g));
    L.bracket = [](const PBWMonomial& a, const PBWMonomial& b) { return commutator(UElem(a), UElem(b)); };
    L.alpha = identity_map<PBWMonomial>();
    L.show = [](const PBWMonomial& m) { return to_string(m); };
    return L;
}

}  // namespace homalg

#endif
