#include <gtest/gtest.h>

#include "homalg/scenario.hpp"

using namespace homalg;

namespace {

const DeformedAction q_ex = DeformedAction::q_example();

UElem gen(Gen g) { return generator(g); }

}  // namespace

TEST(Act, GeneratorRules) {
    EXPECT_EQ(act(gen(Gen::X), poly_y()), poly_x());
    EXPECT_EQ(act(gen(Gen::Y), poly_x()), poly_y());
    EXPECT_TRUE(act(gen(Gen::X), poly_x()).is_zero());
    EXPECT_EQ(act(gen(Gen::Z), parse_poly("x^2*y")), parse_poly("x^2*y"));
    EXPECT_EQ(act(u_unit(), parse_poly("x^2")), parse_poly("x^2"));
    EXPECT_EQ(act(gen(Gen::X), parse_poly("y^3")), parse_poly("3*x*y^2"));
}

TEST(Act, PbwMonomialActsRightmostFirst) {
    // XY on x: Y x = y, then X y = x
    EXPECT_EQ(act(PBWMonomial{1, 1, 0}, poly_x()), poly_x());
    // YX on x is XY - Z: x - x = 0
    EXPECT_TRUE(act(gen(Gen::Y) * gen(Gen::X), poly_x()).is_zero());
}

TEST(Act, IsRepresentation) {
    for (const auto& u : enumerate_pbw(2))
        for (const auto& v : enumerate_pbw(2))
            for (const auto& m : enumerate_monomials(3))
                EXPECT_EQ(act(pbw_mul(u, v), Poly(m)), act(UElem(u), act(UElem(v), Poly(m))));
}

TEST(DeformedAct, GeneratorFormulas) {
    // ρ_α on generators, as operators on monomials x^i y^j:
    //   X -> j q^(2i+j+1) x^(i+1) y^(j-1)
    //   Y -> i q^(2i+j-1) x^(i-1) y^(j+1)
    //   Z -> (i-j) q^(2i+j) x^i y^j
    for (const auto& m : enumerate_monomials(5)) {
        const int i = static_cast<int>(m.x), j = static_cast<int>(m.y), w = 2 * i + j;
        const Poly P(m);
        const Poly ex = j ? monomial(m.x + 1, m.y - 1, QLaurent::q_power(w + 1, j)) : Poly();
        const Poly ey = i ? monomial(m.x - 1, m.y + 1, QLaurent::q_power(w - 1, i)) : Poly();
        const Poly ez = monomial(m.x, m.y, QLaurent::q_power(w, i - j));
        EXPECT_EQ(deformed_act(q_ex, gen(Gen::X), P), ex) << to_string(m);
        EXPECT_EQ(deformed_act(q_ex, gen(Gen::Y), P), ey) << to_string(m);
        EXPECT_EQ(deformed_act(q_ex, gen(Gen::Z), P), ez) << to_string(m);
    }
    EXPECT_EQ(to_string(deformed_act(q_ex, gen(Gen::X), poly_y())), "q^2*x");
}

TEST(DeformedAct, ClassicalLimit) {
    for (const auto& z : enumerate_pbw(3))
        for (const auto& m : enumerate_monomials(4)) {
            const Poly deformed = specialize(deformed_act(q_ex, UElem(z), Poly(m)), 1);
            EXPECT_EQ(deformed, act(z, m));
            EXPECT_EQ(deformed_act(DeformedAction::identity(), UElem(z), Poly(m)), act(z, m));
        }
}

TEST(DeformedAct, SpotValueXxy) {
    // α_H²(X)·(x·y) in the twisted structures, assembled by hand:
    // α_U²(X) = q²X,  x·_α y = q³xy,  ρ_α(X, xy) = α_A(x²) = q⁴x²
    const auto s = make_sl2_scenario({});
    const UElem a2X = s.U_alpha.apply_alpha(gen(Gen::X), 2);
    EXPECT_EQ(a2X, QLaurent::q_power(2) * gen(Gen::X));
    const Poly xy = s.A_alpha.mul({1, 0}, {0, 1});
    EXPECT_EQ(xy, parse_poly("q^3*x*y"));
    EXPECT_EQ(s.rho_alpha.act(a2X, xy), parse_poly("q^9*x^2"));
    // Σ (X'x)(X''y) = (Xx)·_α y + x·_α (Xy) with the twisted comultiplication
    Poly rhs;
    for (const auto& [split, c] : s.U_alpha.comul({1, 0, 0}).terms())
        rhs.add_scaled(s.A_alpha.multiply(s.rho_alpha.rho(split.first, {1, 0}), s.rho_alpha.rho(split.second, {0, 1})),
                       c);
    EXPECT_EQ(rhs, parse_poly("q^9*x^2"));
    // one power of α_H too few
    EXPECT_EQ(s.rho_alpha.act(s.U_alpha.apply_alpha(gen(Gen::X), 1), xy), parse_poly("q^8*x^2"));
}

TEST(Compat, GeneratorAndEnvelopingChecks) {
    EXPECT_TRUE(check_alphaWP(q_ex, 5).passed());
    const CheckReport r = check_alphaza(q_ex, 3, 4);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.tested, 20u * 15u);
}

TEST(Compat, WrongAlphaAFails) {
    const DeformedAction bad{PolyEndo::diagonal(QLaurent::q(), QLaurent::q()), extend_lie_endo(UEndo::q_example())};
    const CheckReport r = check_alphaWP(bad, 2);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(r.has_counterexample({"X", "y"}));
}

TEST(ClassicalModuleAlgebra, Passes) {
    const CheckReport r = check_classical_module_algebra(3, 3);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.tested, 20u * 10u * 10u);
}

TEST(WeightSpectrum, IrreducibleSlices) {
    for (unsigned n = 0; n <= 5; ++n) {
        const WeightSpectrum s = weight_spectrum(n);
        std::vector<int> expected;
        for (unsigned k = 0; k <= n; ++k) expected.push_back(static_cast<int>(n) - 2 * static_cast<int>(k));
        EXPECT_EQ(s.weights, expected) << n;
        EXPECT_TRUE(s.closed_under_generators);
        EXPECT_TRUE(s.monomials_are_eigenvectors);
        EXPECT_TRUE(s.highest_weight_killed_by_X);
        EXPECT_TRUE(s.lowest_weight_killed_by_Y);
    }
}
