#ifndef HOMALG_HOMCORE_HPP
#define HOMALG_HOMCORE_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "homalg/lincomb.hpp"
#include "homalg/report.hpp"

namespace homalg {

/// Hom-structures, twisting by a structure map, and exhaustive axiom
/// checkers, generic over the carrier's basis key type.
///
/// Every structure map is given on basis keys and extended (bi)linearly, so
/// linearity holds by construction.  A checker sweeps all tuples drawn from
/// the declared test bases; since both sides of each identity are
/// multilinear, agreement on basis tuples is agreement on the spanned
/// truncation.  Failures are recorded in the returned CheckReport; only a
/// structure map that leaves the declared range raises (RangeEscape).

template <class Key>
using LinearMap = std::function<LinComb<Key>(const Key&)>;

template <class Key>
using KeyPrinter = std::function<std::string(const Key&)>;

template <class Key>
LinearMap<Key> identity_map() {
    return [](const Key& k) { return LinComb<Key>(k); };
}

/// Wraps a pure function of basis keys with a shared, thread-safe cache.
template <class Result, class... Keys>
std::function<Result(const Keys&...)> memoize(std::function<Result(const Keys&...)> f) {
    struct Cache {
        std::mutex mutex;
        std::map<std::tuple<Keys...>, Result> table;
    };
    auto cache = std::make_shared<Cache>();
    return [f = std::move(f), cache](const Keys&... keys) {
        auto key = std::make_tuple(keys...);
        {
            std::lock_guard lock(cache->mutex);
            if (auto it = cache->table.find(key); it != cache->table.end()) return it->second;
        }
        Result r = f(keys...);
        std::lock_guard lock(cache->mutex);
        cache->table.emplace(std::move(key), r);
        return r;
    };
}

/// Composite f ∘ g of maps given on basis keys.
template <class Key>
LinearMap<Key> compose(LinearMap<Key> f, LinearMap<Key> g) {
    return [f = std::move(f), g = std::move(g)](const Key& k) { return linear_extend(g(k), f); };
}

/// (A, μ, α) with a finite test basis.
template <class Key>
struct AlgCarrier {
    using Elem = LinComb<Key>;

    std::string name;
    std::vector<Key> basis;
    std::function<Elem(const Key&, const Key&)> mul;
    LinearMap<Key> alpha;
    KeyPrinter<Key> show;
    std::function<bool(const Key&)> in_range;  // empty: unrestricted

    Elem multiply(const Elem& a, const Elem& b) const { return bilinear_extend(a, b, mul); }
    Elem apply_alpha(const Elem& a, unsigned power = 1) const {
        Elem r = a;
        for (unsigned i = 0; i < power; ++i) r = linear_extend(r, alpha);
        return r;
    }
    std::string render(const Elem& a) const { return homalg::render(a, show); }
};

/// (H, μ, Δ, α).
template <class Key>
struct BialgCarrier : AlgCarrier<Key> {
    using Elem = LinComb<Key>;
    using Tensor = Tensor2<Key, Key>;

    std::function<Tensor(const Key&)> comul;

    Tensor coproduct(const Elem& x) const { return linear_extend(x, comul); }

    /// Product on H⊗H: μ⊗μ after swapping the middle two factors.
    Tensor multiply_tensor(const Tensor& s, const Tensor& t) const {
        Tensor r;
        for (const auto& [k1, c1] : s.terms())
            for (const auto& [k2, c2] : t.terms()) {
                const auto& [a, b] = k1;
                const auto& [c, d] = k2;
                // (a, b, c, d) -> (a, c, b, d)
                r.add_scaled(tensor(this->mul(a, c), this->mul(b, d)), c1 * c2);
            }
        return r;
    }

    std::string render_tensor(const Tensor& t) const { return homalg::render_tensor(t, this->show, this->show); }
};

/// A Hom-module (M, α_M) with an action of H given on basis keys.
template <class HKey, class MKey>
struct ModCarrier {
    using Elem = LinComb<MKey>;

    std::string name;
    std::vector<MKey> basis;
    LinearMap<MKey> alpha;
    std::function<Elem(const HKey&, const MKey&)> rho;
    KeyPrinter<MKey> show;
    std::function<bool(const MKey&)> in_range;

    Elem act(const LinComb<HKey>& x, const Elem& m) const { return bilinear_extend(x, m, rho); }
    Elem apply_alpha(const Elem& m) const { return linear_extend(m, alpha); }
    std::string render(const Elem& m) const { return homalg::render(m, show); }
};

/// (L, [,], α).
template <class Key>
struct LieCarrier {
    using Elem = LinComb<Key>;

    std::string name;
    std::vector<Key> basis;
    std::function<Elem(const Key&, const Key&)> bracket;
    LinearMap<Key> alpha;
    KeyPrinter<Key> show;

    Elem br(const Elem& a, const Elem& b) const { return bilinear_extend(a, b, bracket); }
    Elem apply_alpha(const Elem& a) const { return linear_extend(a, alpha); }
    std::string render(const Elem& a) const { return homalg::render(a, show); }
};

enum class Verify { yes, no };

namespace detail {

template <class Key>
void require_in_range(const std::function<bool(const Key&)>& in_range, const LinComb<Key>& v,
                      const KeyPrinter<Key>& show, const std::string& carrier, const std::string& what) {
    if (!in_range) return;
    for (const auto& [k, c] : v.terms())
        if (!in_range(k))
            throw RangeEscape(what + " on carrier '" + carrier + "' produced " + show(k) +
                              ", outside the enumerated range; raise the degree bound or restrict the test basis");
}

template <class Key>
void require_alpha_in_range(const AlgCarrier<Key>& A, unsigned power = 1) {
    for (const Key& k : A.basis)
        require_in_range(A.in_range, A.apply_alpha(LinComb<Key>(k), power), A.show, A.name, "structure map");
}

template <class HKey, class MKey>
void require_alpha_in_range(const ModCarrier<HKey, MKey>& M) {
    for (const MKey& k : M.basis)
        require_in_range(M.in_range, M.alpha(k), M.show, M.name, "structure map");
}

template <class Key>
std::string bound_text(const std::string& name, const std::vector<Key>& basis) {
    return name + " basis of " + std::to_string(basis.size());
}

}  // namespace detail

/// α(ab) = α(a)α(b) on all basis pairs.
template <class Key>
CheckReport check_multiplicativity(const AlgCarrier<Key>& A) {
    detail::require_alpha_in_range(A);
    CheckReport r{"multiplicativity", "alpha(ab) = alpha(a) alpha(b)", detail::bound_text(A.name, A.basis), 0, 0, {}};
    for (const Key& a : A.basis) {
        const auto alpha_a = A.alpha(a);
        for (const Key& b : A.basis) {
            const auto lhs = A.apply_alpha(A.mul(a, b));
            const auto rhs = A.multiply(alpha_a, A.alpha(b));
            ++r.tested;
            if (!(lhs == rhs)) r.record({"", {A.show(a), A.show(b)}, A.render(lhs), A.render(rhs)});
        }
    }
    return r;
}

/// α(a)(bc) = (ab)α(c) on all basis triples.
template <class Key>
CheckReport check_hom_associativity(const AlgCarrier<Key>& A) {
    detail::require_alpha_in_range(A);
    CheckReport r{"hom-associativity", "alpha(a)(bc) = (ab)alpha(c)", detail::bound_text(A.name, A.basis), 0, 0, {}};
    for (const Key& a : A.basis) {
        const auto alpha_a = A.alpha(a);
        for (const Key& b : A.basis) {
            const auto ab = A.mul(a, b);
            for (const Key& c : A.basis) {
                const auto lhs = A.multiply(alpha_a, A.mul(b, c));
                const auto rhs = A.multiply(ab, A.alpha(c));
                ++r.tested;
                if (!(lhs == rhs)) r.record({"", {A.show(a), A.show(b), A.show(c)}, A.render(lhs), A.render(rhs)});
            }
        }
    }
    return r;
}

/// (Δ⊗α)Δ = (α⊗Δ)Δ on every basis element.
template <class Key>
CheckReport check_hom_coassociativity(const BialgCarrier<Key>& H) {
    detail::require_alpha_in_range(H);
    using T3 = Tensor3<Key, Key, Key>;
    auto show3 = [&](const T3& t) { return render_tensor3(t, H.show); };
    CheckReport r{"hom-coassociativity", "(Delta x alpha)Delta = (alpha x Delta)Delta",
                  detail::bound_text(H.name, H.basis), 0, 0, {}};
    for (const Key& x : H.basis) {
        T3 lhs;
        T3 rhs;
        for (const auto dx = H.comul(x); const auto& [k, c] : dx.terms()) {
            const auto& [x1, x2] = k;
            for (const auto d1 = H.comul(x1); const auto& [k1, c1] : d1.terms())
                for (const auto a2 = H.alpha(x2); const auto& [k2, c2] : a2.terms())
                    lhs.add_term({k1.first, k1.second, k2}, c * c1 * c2);
            for (const auto a1 = H.alpha(x1); const auto& [k1, c1] : a1.terms())
                for (const auto d2 = H.comul(x2); const auto& [k2, c2] : d2.terms())
                    rhs.add_term({k1, k2.first, k2.second}, c * c1 * c2);
        }
        ++r.tested;
        if (!(lhs == rhs)) r.record({"", {H.show(x)}, show3(lhs), show3(rhs)});
    }
    return r;
}

/// Δ∘α = α⊗α∘Δ on basis elements and Δ(xy) = Δ(x)Δ(y) on basis pairs, the
/// product on H⊗H being μ⊗μ after the middle-two interchange.
template <class Key>
CheckReport check_comul_morphism(const BialgCarrier<Key>& H) {
    detail::require_alpha_in_range(H);
    CheckReport r{"comul-morphism", "Delta alpha = (alpha x alpha)Delta; Delta(xy) = Delta(x)Delta(y)",
                  detail::bound_text(H.name, H.basis), 0, 0, {}};
    for (const Key& x : H.basis) {
        const auto lhs = H.coproduct(H.alpha(x));
        const auto rhs = tensor_map(H.comul(x), H.alpha, H.alpha);
        ++r.tested;
        if (!(lhs == rhs)) r.record({"comul-alpha", {H.show(x)}, H.render_tensor(lhs), H.render_tensor(rhs)});
    }
    for (const Key& x : H.basis) {
        const auto dx = H.comul(x);
        for (const Key& y : H.basis) {
            const auto lhs = H.coproduct(H.mul(x, y));
            const auto rhs = H.multiply_tensor(dx, H.comul(y));
            ++r.tested;
            if (!(lhs == rhs))
                r.record({"comul-product", {H.show(x), H.show(y)}, H.render_tensor(lhs), H.render_tensor(rhs)});
        }
    }
    return r;
}

/// ρ is a Hom-module morphism, α_M(am) = α(a)α_M(m), and satisfies the
/// module axiom α(a)(bm) = (ab)α_M(m).
template <class HKey, class MKey>
CheckReport check_module_axiom(const AlgCarrier<HKey>& H, const ModCarrier<HKey, MKey>& M) {
    detail::require_alpha_in_range(H);
    detail::require_alpha_in_range(M);
    CheckReport r{"module-axiom", "alpha_M(am) = alpha(a)alpha_M(m); alpha(a)(bm) = (ab)alpha_M(m)",
                  detail::bound_text(H.name, H.basis) + ", " + detail::bound_text(M.name, M.basis), 0, 0, {}};
    for (const HKey& a : H.basis) {
        const auto alpha_a = H.alpha(a);
        for (const MKey& m : M.basis) {
            const auto lhs = M.apply_alpha(M.rho(a, m));
            const auto rhs = M.act(alpha_a, M.alpha(m));
            ++r.tested;
            if (!(lhs == rhs))
                r.record({"hom-module-morphism", {H.show(a), M.show(m)}, M.render(lhs), M.render(rhs)});
        }
    }
    for (const HKey& a : H.basis) {
        const auto alpha_a = H.alpha(a);
        for (const HKey& b : H.basis) {
            const auto ab = H.mul(a, b);
            for (const MKey& m : M.basis) {
                const auto lhs = M.act(alpha_a, M.rho(b, m));
                const auto rhs = M.act(ab, M.alpha(m));
                ++r.tested;
                if (!(lhs == rhs))
                    r.record({"module-axiom", {H.show(a), H.show(b), M.show(m)}, M.render(lhs), M.render(rhs)});
            }
        }
    }
    return r;
}

/// α_A∘ρ = ρ∘(α_H⊗α_A) on basis pairs.  With α_H = Id this is H-linearity
/// of α_A.
template <class HKey, class MKey>
CheckReport check_compat(const AlgCarrier<HKey>& H, const ModCarrier<HKey, MKey>& M, const LinearMap<HKey>& alpha_H,
                         const LinearMap<MKey>& alpha_A) {
    CheckReport r{"compatibility", "alpha_A(xa) = alpha_H(x)alpha_A(a)",
                  detail::bound_text(H.name, H.basis) + ", " + detail::bound_text(M.name, M.basis), 0, 0, {}};
    for (const HKey& x : H.basis) {
        const auto ax = alpha_H(x);
        for (const MKey& a : M.basis) {
            const auto lhs = linear_extend(M.rho(x, a), alpha_A);
            const auto rhs = M.act(ax, alpha_A(a));
            ++r.tested;
            if (!(lhs == rhs)) r.record({"", {H.show(x), M.show(a)}, M.render(lhs), M.render(rhs)});
        }
    }
    return r;
}

/// ρ̃ = ρ∘(α_H^power ⊗ Id), without checking the input.  power = 2 is the
/// action used to characterize module Hom-algebras.
template <class HKey, class MKey>
ModCarrier<HKey, MKey> rho_tilde_unchecked(const AlgCarrier<HKey>& H, const ModCarrier<HKey, MKey>& M,
                                           unsigned power = 2) {
    ModCarrier<HKey, MKey> out = M;
    out.name = M.name + "~";
    out.rho = [H, rho = M.rho, power](const HKey& x, const MKey& m) {
        return bilinear_extend(H.apply_alpha(LinComb<HKey>(x), power), LinComb<MKey>(m), rho);
    };
    return out;
}

/// The second module structure ρ̃ = ρ∘(α_H²⊗Id) on M.  Requires M to pass
/// check_module_axiom over H.
template <class HKey, class MKey>
ModCarrier<HKey, MKey> build_rho_tilde(const AlgCarrier<HKey>& H, const ModCarrier<HKey, MKey>& M) {
    CheckReport pre = check_module_axiom(H, M);
    if (!pre.passed()) throw PreconditionError("input is not an H-module", std::move(pre));
    return rho_tilde_unchecked(H, M, 2);
}

/// ρ²(x ⊗ m⊗n) = Σ (x'm)⊗(x''n) on M⊗M, without checking the input.  The
/// tensor basis is built from `factor_basis` (default: M's basis).
template <class HKey, class MKey>
ModCarrier<HKey, std::pair<MKey, MKey>> rho2_unchecked(const BialgCarrier<HKey>& H, const ModCarrier<HKey, MKey>& M,
                                                       std::type_identity_t<std::optional<std::vector<MKey>>> factor_basis = std::nullopt) {
    using Pair = std::pair<MKey, MKey>;
    ModCarrier<HKey, Pair> out;
    out.name = M.name + "⊗" + M.name;
    const auto& fb = factor_basis ? *factor_basis : M.basis;
    for (const MKey& m : fb)
        for (const MKey& n : fb) out.basis.push_back({m, n});
    out.alpha = [alpha = M.alpha](const Pair& k) { return tensor(alpha(k.first), alpha(k.second)); };
    out.rho = [comul = H.comul, rho = M.rho](const HKey& x, const Pair& k) {
        Tensor2<MKey, MKey> r;
        for (const auto dx = comul(x); const auto& [split, c] : dx.terms()) r.add_scaled(tensor(rho(split.first, k.first), rho(split.second, k.second)), c);
        return r;
    };
    out.show = [show = M.show](const Pair& k) { return show(k.first) + "⊗" + show(k.second); };
    if (M.in_range)
        out.in_range = [in = M.in_range](const Pair& k) { return in(k.first) && in(k.second); };
    return out;
}

/// The H-module structure ρ² on M⊗M.  Requires M to pass check_module_axiom.
template <class HKey, class MKey>
ModCarrier<HKey, std::pair<MKey, MKey>> build_rho2(const BialgCarrier<HKey>& H, const ModCarrier<HKey, MKey>& M,
                                                   std::type_identity_t<std::optional<std::vector<MKey>>> factor_basis = std::nullopt) {
    CheckReport pre = check_module_axiom(H, M);
    if (!pre.passed()) throw PreconditionError("input is not an H-module", std::move(pre));
    return rho2_unchecked(H, M, std::move(factor_basis));
}

/// α_H^power(x)(ab) = Σ (x'a)(x''b) over basis triples (x, a, b), where M
/// is the action of H on A's underlying space.  power = 2 is the module
/// Hom-algebra axiom; other powers exist to build negative controls.
template <class HKey, class AKey>
CheckReport check_module_hom_algebra(const BialgCarrier<HKey>& H, const AlgCarrier<AKey>& A,
                                     const ModCarrier<HKey, AKey>& M, unsigned power = 2) {
    detail::require_alpha_in_range(H, power);
    CheckReport r{"module-hom-algebra",
                  power == 2 ? "alpha_H^2(x)(ab) = sum (x'a)(x''b)"
                             : "alpha_H^" + std::to_string(power) + "(x)(ab) = sum (x'a)(x''b)",
                  detail::bound_text(H.name, H.basis) + ", " + detail::bound_text(A.name, A.basis) + " squared", 0, 0,
                  {}};
    for (const HKey& x : H.basis) {
        const auto ax = H.apply_alpha(LinComb<HKey>(x), power);
        const auto dx = H.comul(x);
        for (const AKey& a : A.basis)
            for (const AKey& b : A.basis) {
                const auto lhs = M.act(ax, A.mul(a, b));
                LinComb<AKey> rhs;
                for (const auto& [split, c] : dx.terms())
                    rhs.add_scaled(A.multiply(M.rho(split.first, a), M.rho(split.second, b)), c);
                ++r.tested;
                if (!(lhs == rhs)) r.record({"", {H.show(x), A.show(a), A.show(b)}, A.render(lhs), A.render(rhs)});
            }
    }
    return r;
}

/// μ_A : A⊗A → A is a morphism of H-modules when A⊗A carries ρ² and A
/// carries ρ̃ = ρ∘(α_H^power⊗Id): μ_A(ρ²(x ⊗ a⊗b)) = ρ̃(x ⊗ ab).  Its verdict
/// and counterexample triples coincide with check_module_hom_algebra.
template <class HKey, class AKey>
CheckReport check_mu_module_morphism(const BialgCarrier<HKey>& H, const AlgCarrier<AKey>& A,
                                     const ModCarrier<HKey, AKey>& M, unsigned power = 2) {
    detail::require_alpha_in_range(H, power);
    const auto tilde = rho_tilde_unchecked(H, M, power);
    const auto square = rho2_unchecked(H, M, A.basis);
    CheckReport r{"mu-module-morphism", "mu_A(rho2(x, a⊗b)) = rho~(x, ab)",
                  detail::bound_text(H.name, H.basis) + ", " + detail::bound_text(A.name, A.basis) + " squared", 0, 0,
                  {}};
    for (const HKey& x : H.basis)
        for (const AKey& a : A.basis)
            for (const AKey& b : A.basis) {
                LinComb<AKey> lhs;
                for (const auto sq = square.rho(x, {a, b}); const auto& [k, c] : sq.terms()) lhs.add_scaled(A.mul(k.first, k.second), c);
                const auto rhs = tilde.act(LinComb<HKey>(x), A.mul(a, b));
                ++r.tested;
                if (!(lhs == rhs)) r.record({"", {H.show(x), A.show(a), A.show(b)}, A.render(lhs), A.render(rhs)});
            }
    return r;
}

/// A_α = (A, α∘μ, α).  Requires μ associative and α multiplicative on the
/// test basis unless `verify` is Verify::no.
template <class Key>
AlgCarrier<Key> twist_algebra(const AlgCarrier<Key>& A, LinearMap<Key> alpha, Verify verify = Verify::yes) {
    if (verify == Verify::yes) {
        AlgCarrier<Key> plain = A;
        plain.alpha = identity_map<Key>();
        CheckReport assoc = check_hom_associativity(plain);
        if (!assoc.passed()) throw PreconditionError("product is not associative", std::move(assoc));
        plain.alpha = alpha;
        CheckReport mult = check_multiplicativity(plain);
        if (!mult.passed()) throw PreconditionError("twisting map is not multiplicative", std::move(mult));
    }
    AlgCarrier<Key> out = A;
    out.name = A.name + "_alpha";
    out.mul = [mul = A.mul, alpha](const Key& a, const Key& b) { return linear_extend(mul(a, b), alpha); };
    out.alpha = std::move(alpha);
    return out;
}

/// H_α = (H, α∘μ, Δ∘α, α).  Requires α to be a bialgebra endomorphism of
/// (H, μ, Δ) on the test basis unless `verify` is Verify::no.
template <class Key>
BialgCarrier<Key> twist_bialgebra(const BialgCarrier<Key>& H, LinearMap<Key> alpha, Verify verify = Verify::yes) {
    if (verify == Verify::yes) {
        BialgCarrier<Key> plain = H;
        plain.alpha = alpha;
        CheckReport mult = check_multiplicativity<Key>(plain);
        if (!mult.passed()) throw PreconditionError("twisting map is not multiplicative", std::move(mult));
        CheckReport morph = check_comul_morphism(plain);
        if (!morph.passed()) throw PreconditionError("twisting map is not a bialgebra endomorphism", std::move(morph));
    }
    BialgCarrier<Key> out = H;
    out.name = H.name + "_alpha";
    out.mul = [mul = H.mul, alpha](const Key& a, const Key& b) { return linear_extend(mul(a, b), alpha); };
    out.comul = [comul = H.comul, alpha](const Key& x) { return linear_extend(alpha(x), comul); };
    out.alpha = std::move(alpha);
    return out;
}

/// ρ_α = α_A∘ρ, with α_A as the new structure map of the module.  The
/// intertwining condition is checked separately by check_compat.
template <class HKey, class MKey>
ModCarrier<HKey, MKey> deform_module_structure(const ModCarrier<HKey, MKey>& M, LinearMap<MKey> alpha_A) {
    ModCarrier<HKey, MKey> out = M;
    out.name = M.name + "_alpha";
    out.rho = [rho = M.rho, alpha_A](const HKey& x, const MKey& m) { return linear_extend(rho(x, m), alpha_A); };
    out.alpha = std::move(alpha_A);
    return out;
}

/// Commutator bracket [a,b] = ab - ba with the algebra's structure map.
template <class Key>
LieCarrier<Key> commutator_hom_lie(const AlgCarrier<Key>& A) {
    LieCarrier<Key> L;
    L.name = "[" + A.name + "]";
    L.basis = A.basis;
    L.bracket = [mul = A.mul](const Key& a, const Key& b) { return mul(a, b) - mul(b, a); };
    L.alpha = A.alpha;
    L.show = A.show;
    return L;
}

/// Skew-symmetry, multiplicativity of α and the Hom-Jacobi identity
/// [[a,b],α(c)] + [[c,a],α(b)] + [[b,c],α(a)] = 0 on basis tuples.
template <class Key>
CheckReport check_hom_jacobi(const LieCarrier<Key>& L) {
    CheckReport r{"hom-jacobi", "[[a,b],alpha(c)] + [[c,a],alpha(b)] + [[b,c],alpha(a)] = 0",
                  detail::bound_text(L.name, L.basis), 0, 0, {}};
    for (const Key& a : L.basis)
        for (const Key& b : L.basis) {
            const auto ab = L.bracket(a, b);
            const auto skew = -L.bracket(b, a);
            ++r.tested;
            if (!(ab == skew)) r.record({"skew-symmetry", {L.show(a), L.show(b)}, L.render(ab), L.render(skew)});
            const auto lhs = L.apply_alpha(ab);
            const auto rhs = L.br(L.alpha(a), L.alpha(b));
            ++r.tested;
            if (!(lhs == rhs)) r.record({"multiplicativity", {L.show(a), L.show(b)}, L.render(lhs), L.render(rhs)});
        }
    for (const Key& a : L.basis)
        for (const Key& b : L.basis)
            for (const Key& c : L.basis) {
                const auto sum = L.br(L.bracket(a, b), L.alpha(c)) + L.br(L.bracket(c, a), L.alpha(b)) +
                                 L.br(L.bracket(b, c), L.alpha(a));
                ++r.tested;
                if (!sum.is_zero())
                    r.record({"hom-jacobi", {L.show(a), L.show(b), L.show(c)}, L.render(sum), "0"});
            }
    return r;
}

/// α([a,b]) = [α(a), α(b)] for the carrier's own bracket.
template <class Key>
CheckReport check_lie_endo(const LieCarrier<Key>& L, const LinearMap<Key>& alpha) {
    CheckReport r{"lie-endomorphism", "alpha([a,b]) = [alpha(a), alpha(b)]", detail::bound_text(L.name, L.basis), 0,
                  0, {}};
    for (const Key& a : L.basis)
        for (const Key& b : L.basis) {
            const auto lhs = linear_extend(L.bracket(a, b), alpha);
            const auto rhs = L.br(alpha(a), alpha(b));
            ++r.tested;
            if (!(lhs == rhs)) r.record({"", {L.show(a), L.show(b)}, L.render(lhs), L.render(rhs)});
        }
    return r;
}

/// [a,b]_α = α([a,b]) with structure map α.  Requires α to be a Lie
/// endomorphism of L on the basis.
template <class Key>
LieCarrier<Key> twist_lie(const LieCarrier<Key>& L, LinearMap<Key> alpha) {
    CheckReport pre = check_lie_endo(L, alpha);
    if (!pre.passed()) throw PreconditionError("twisting map is not a Lie algebra endomorphism", std::move(pre));
    LieCarrier<Key> out = L;
    out.name = L.name + "_alpha";
    out.bracket = [br = L.bracket, alpha](const Key& a, const Key& b) { return linear_extend(br(a, b), alpha); };
    out.alpha = std::move(alpha);
    return out;
}

}  // namespace homalg

#endif
