#ifndef HOMALG_SCENARIO_HPP
#define HOMALG_SCENARIO_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "homalg/actions.hpp"
#include "homalg/finalg.hpp"

namespace homalg {

/// Options for the q-deformed sl(2) scenario.
struct Sl2Options {
    unsigned bound_h = 3;
    unsigned bound_a = 4;
    // Degree bound for the factors of A⊗A when re-verifying the ρ² module
    // structure; the tensor basis grows quadratically.
    unsigned bound_tensor = 2;
    bool classical = false;         // α = Id everywhere (q = 1)
    bool negative_control = false;  // α_H in place of α_H² in the axiom
};

/// U(sl(2))_α acting on A_α = (k[x,y], α_A∘μ, α_A) through ρ_α = α_A∘ρ.
struct Sl2Scenario {
    Sl2Options options;
    DeformedAction deformation;
    BialgCarrier<PBWMonomial> U;        // classical bialgebra
    BialgCarrier<PBWMonomial> U_alpha;  // (U, α_U∘μ, Δ∘α_U, α_U)
    AlgCarrier<Monomial> A;
    AlgCarrier<Monomial> A_alpha;
    ModCarrier<PBWMonomial, Monomial> rho;
    ModCarrier<PBWMonomial, Monomial> rho_alpha;
};

inline Sl2Scenario make_sl2_scenario(const Sl2Options& opt) {
    if (opt.bound_h < 1 || opt.bound_a < 1) throw std::invalid_argument("degree bounds must be at least 1");
    DeformedAction d = opt.classical ? DeformedAction::identity() : DeformedAction::q_example();
    Sl2Scenario s{opt, d, enveloping_carrier(opt.bound_h), {}, plane_carrier(opt.bound_a), {}, plane_module(opt.bound_a), {}};
    s.U_alpha = twist_bialgebra(s.U, as_linear_map(d.alpha_U));
    s.A_alpha = twist_algebra(s.A, as_linear_map(d.alpha_A));
    s.rho_alpha = deform_module_structure(s.rho, as_linear_map(d.alpha_A));
    return s;
}

/// One named, selectable check.
template <class Scenario>
struct SuiteEntry {
    std::string id;
    std::string description;
    std::function<CheckReport(const Scenario&)> run;
};

inline std::vector<SuiteEntry<Sl2Scenario>> sl2_suites() {
    using S = Sl2Scenario;
    return {
        {"multiplicativity", "alpha_A multiplicative for mu_alpha",
         [](const S& s) { return check_multiplicativity(s.A_alpha); }},
        {"hom-associativity", "A_alpha is Hom-associative", [](const S& s) { return check_hom_associativity(s.A_alpha); }},
        {"hom-coassociativity", "Delta_alpha is Hom-coassociative",
         [](const S& s) { return check_hom_coassociativity(s.U_alpha); }},
        {"comul-morphism", "Delta_alpha is a morphism of Hom-associative algebras",
         [](const S& s) { return check_comul_morphism(s.U_alpha); }},
        {"bialgebra-endomorphism", "alpha_U is a bialgebra endomorphism of U(sl2)",
         [](const S& s) {
             auto plain = s.U;
             plain.alpha = s.U_alpha.alpha;
             CheckReport r = check_comul_morphism(plain);
             r.axiom = "bialgebra-endomorphism";
             return r;
         }},
        {"lie-endomorphism", "alpha_L is a Lie algebra endomorphism",
         [](const S& s) { return is_lie_endo(s.deformation.alpha_U.generators()); }},
        {"hom-jacobi", "twisted sl2 bracket satisfies Hom-Jacobi",
         [](const S& s) {
             return check_hom_jacobi(twist_lie(sl2_lie_carrier(), as_linear_map(s.deformation.alpha_U)));
         }},
        {"compatibility", "alpha_A(za) = alpha_U(z)alpha_A(a) on the test bases",
         [](const S& s) {
             return check_compat(s.U, s.rho, s.U_alpha.alpha, s.A_alpha.alpha);
         }},
        {"alpha-generator-compat", "alpha_A(WP) = alpha_L(W)alpha_A(P)",
         [](const S& s) { return check_alphaWP(s.deformation, s.options.bound_a); }},
        {"alpha-enveloping-compat", "alpha_A(za) = alpha_U(z)alpha_A(a)",
         [](const S& s) { return check_alphaza(s.deformation, s.options.bound_h, s.options.bound_a); }},
        {"classical-module-algebra", "x(ab) = sum (x'a)(x''b) for the undeformed action",
         [](const S& s) { return check_classical_module_algebra(s.options.bound_h, s.options.bound_a); }},
        {"module-axiom", "rho_alpha is a U_alpha-module structure",
         [](const S& s) { return check_module_axiom(s.U_alpha, s.rho_alpha); }},
        {"rho-tilde-module", "rho~ = rho_alpha(alpha_U^2 x Id) is a module structure",
         [](const S& s) {
             CheckReport r = check_module_axiom(s.U_alpha, build_rho_tilde(s.U_alpha, s.rho_alpha));
             r.axiom = "rho-tilde-module";
             return r;
         }},
        {"rho2-module", "rho2 on A⊗A is a module structure",
         [](const S& s) {
             CheckReport r =
                 check_module_axiom(s.U_alpha, build_rho2(s.U_alpha, s.rho_alpha, enumerate_monomials(s.options.bound_tensor)));
             r.axiom = "rho2-module";
             return r;
         }},
        {"module-hom-algebra", "alpha_H^2(x)(ab) = sum (x'a)(x''b)",
         [](const S& s) {
             return check_module_hom_algebra(s.U_alpha, s.A_alpha, s.rho_alpha, s.options.negative_control ? 1 : 2);
         }},
        {"mu-module-morphism", "mu_alpha is a morphism of U_alpha-modules",
         [](const S& s) {
             return check_mu_module_morphism(s.U_alpha, s.A_alpha, s.rho_alpha, s.options.negative_control ? 1 : 2);
         }},
    };
}

struct FinalgRun {
    FinalgScenario scenario;
    GroupTwist package;
};

inline FinalgRun make_finalg_run(FinalgScenario sc) {
    GroupTwist pkg = build_group_twist(sc.algebra, sc.group, sc.twist);
    return {std::move(sc), std::move(pkg)};
}

inline std::vector<SuiteEntry<FinalgRun>> finalg_suites() {
    using S = FinalgRun;
    return {
        {"multiplicativity", "alpha multiplicative for mu_alpha",
         [](const S& s) { return check_multiplicativity(s.package.A_alpha); }},
        {"hom-associativity", "A_alpha is Hom-associative",
         [](const S& s) { return check_hom_associativity(s.package.A_alpha); }},
        {"hom-coassociativity", "k[G] is Hom-coassociative", [](const S& s) { return check_hom_coassociativity(s.package.H); }},
        {"comul-morphism", "Delta is a morphism on k[G]", [](const S& s) { return check_comul_morphism(s.package.H); }},
        {"compatibility", "alpha is k[G]-linear",
         [](const S& s) {
             return check_compat(s.package.H, s.package.rho, identity_map<std::size_t>(), s.package.alpha.as_map());
         }},
        {"classical-module-algebra", "phi(ab) = phi(a)phi(b) for the undeformed action",
         [](const S& s) {
             CheckReport r = check_module_hom_algebra(s.package.H, s.package.A, s.package.rho);
             r.axiom = "classical-module-algebra";
             return r;
         }},
        {"module-axiom", "rho_alpha is a k[G]-module structure",
         [](const S& s) { return check_module_axiom(s.package.H, s.package.rho_alpha); }},
        {"rho-tilde-module", "rho~ is a module structure",
         [](const S& s) {
             CheckReport r = check_module_axiom(s.package.H, build_rho_tilde(s.package.H, s.package.rho_alpha));
             r.axiom = "rho-tilde-module";
             return r;
         }},
        {"rho2-module", "rho2 on A⊗A is a module structure",
         [](const S& s) {
             CheckReport r = check_module_axiom(s.package.H, build_rho2(s.package.H, s.package.rho_alpha));
             r.axiom = "rho2-module";
             return r;
         }},
        {"module-hom-algebra", "alpha_H^2(x)(ab) = sum (x'a)(x''b)",
         [](const S& s) { return check_module_hom_algebra(s.package.H, s.package.A_alpha, s.package.rho_alpha); }},
        {"mu-module-morphism", "mu_alpha is a morphism of k[G]-modules",
         [](const S& s) { return check_mu_module_morphism(s.package.H, s.package.A_alpha, s.package.rho_alpha); }},
    };
}

/// Runs the entries whose ids are in `selected` (all when empty).  Unknown
/// ids throw std::invalid_argument before anything runs.
template <class Scenario>
std::vector<CheckReport> run_suites(const Scenario& s, const std::vector<SuiteEntry<Scenario>>& suites,
                                    const std::vector<std::string>& selected = {}) {
    for (const auto& id : selected)
        if (std::none_of(suites.begin(), suites.end(), [&](const auto& e) { return e.id == id; }))
            throw std::invalid_argument("unknown suite '" + id + "'");
    std::vector<CheckReport> out;
    for (const auto& e : suites)
        if (selected.empty() || std::find(selected.begin(), selected.end(), e.id) != selected.end())
            out.push_back(e.run(s));
    return out;
}

}  // namespace homalg

#endif
