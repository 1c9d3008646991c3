#ifndef HOMALG_UEA_SL2_HPP
#define HOMALG_UEA_SL2_HPP

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homalg/lincomb.hpp"
#include "homalg/report.hpp"

namespace homalg {

/// PBW basis element X^a Y^b Z^c of U(sl(2)), always in the order X, Y, Z.
struct PBWMonomial {
    unsigned a = 0;
    unsigned b = 0;
    unsigned c = 0;

    unsigned degree() const noexcept { return a + b + c; }

    // Higher degree first, then by exponent of X, then of Y.
    friend bool operator<(const PBWMonomial& u, const PBWMonomial& v) noexcept {
        if (u.degree() != v.degree()) return u.degree() > v.degree();
        if (u.a != v.a) return u.a > v.a;
        return u.b > v.b;
    }
    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

using UElem = LinComb<PBWMonomial>;
using Tensor2U = Tensor2<PBWMonomial, PBWMonomial>;

enum class Gen : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Gen, 3> all_generators{Gen::X, Gen::Y, Gen::Z};

inline PBWMonomial generator_monomial(Gen g) {
    switch (g) {
        case Gen::X: return {1, 0, 0};
        case Gen::Y: return {0, 1, 0};
        case Gen::Z: return {0, 0, 1};
    }
    return {};
}

inline UElem generator(Gen g) { return UElem(generator_monomial(g)); }
inline UElem u_unit(const QLaurent& c = QLaurent(1)) { return UElem(PBWMonomial{}, c); }

inline char generator_name(Gen g) { return "XYZ"[static_cast<int>(g)]; }

inline std::string to_string(const PBWMonomial& m) {
    if (m.degree() == 0) return "1";
    std::string out;
    auto put = [&](char v, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
    };
    put('X', m.a);
    put('Y', m.b);
    put('Z', m.c);
    return out;
}

inline std::string to_string(const UElem& u) {
    return render(u, [](const PBWMonomial& m) { return to_string(m); });
}

inline std::string to_string(const Tensor2U& t) {
    auto show = [](const PBWMonomial& m) { return to_string(m); };
    return render_tensor(t, show, show);
}

namespace detail {

using Word = std::vector<std::uint8_t>;

inline Word to_word(const PBWMonomial& m) {
    Word w;
    w.insert(w.end(), m.a, 0);
    w.insert(w.end(), m.b, 1);
    w.insert(w.end(), m.c, 2);
    return w;
}

// Reduces a linear combination of words to PBW normal form.  Each step
// rewrites the leftmost descent of some word with one of
//   YX -> XY - Z,   ZX -> XZ + 2X,   ZY -> YZ - 2Y,
// which follow from [X,Y] = Z, [X,Z] = -2X, [Y,Z] = 2Y.  A swap lowers the
// inversion count and a replacement shortens the word, so this terminates.
inline UElem normalize_words(std::map<Word, QLaurent> pending) {
    UElem result;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const QLaurent& coeff = node.mapped();
        std::size_t i = 0;
        while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
        if (i + 1 >= w.size()) {
            PBWMonomial m;
            for (auto g : w) (g == 0 ? m.a : g == 1 ? m.b : m.c) += 1;
            result.add_term(m, coeff);
            continue;
        }
        const std::uint8_t hi = w[i];
        const std::uint8_t lo = w[i + 1];
        auto push = [&](Word nw, const QLaurent& c) {
            if (c.is_zero()) return;
            auto [it, inserted] = pending.try_emplace(std::move(nw), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) pending.erase(it);
            }
        };
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        push(std::move(swapped), coeff);

        Word contracted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        QLaurent factor;
        if (hi == 1 && lo == 0) {  // YX = XY - Z
            contracted.push_back(2);
            factor = QLaurent(-1);
        } else if (hi == 2 && lo == 0) {  // ZX = XZ + 2X
            contracted.push_back(0);
            factor = QLaurent(2);
        } else {  // ZY = YZ - 2Y
            contracted.push_back(1);
            factor = QLaurent(-2);
        }
        contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        push(std::move(contracted), coeff * factor);
    }
    return result;
}

class PbwProductCache {
   public:
    static PbwProductCache& instance() {
        static PbwProductCache cache;
        return cache;
    }

    UElem product(const PBWMonomial& u, const PBWMonomial& v) {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find({u, v});
            if (it != table_.end()) return it->second;
        }
        Word w = to_word(u);
        const Word wv = to_word(v);
        w.insert(w.end(), wv.begin(), wv.end());
        UElem r = normalize_words({{std::move(w), QLaurent(1)}});
        std::lock_guard lock(mutex_);
        table_.emplace(std::pair{u, v}, r);
        return r;
    }

   private:
    std::mutex mutex_;
    std::map<std::pair<PBWMonomial, PBWMonomial>, UElem> table_;
};

}  // namespace detail

/// Product of two PBW monomials, in normal form.
inline UElem pbw_mul(const PBWMonomial& u, const PBWMonomial& v) {
    if (u.degree() == 0) return UElem(v);
    if (v.degree() == 0) return UElem(u);
    const int last = u.c ? 2 : u.b ? 1 : 0;
    const int first = v.a ? 0 : v.b ? 1 : 2;
    if (last <= first) return UElem(PBWMonomial{u.a + v.a, u.b + v.b, u.c + v.c});
    return detail::PbwProductCache::instance().product(u, v);
}

inline UElem pbw_mul(const UElem& u, const UElem& v) {
    return bilinear_extend(u, v, [](const PBWMonomial& a, const PBWMonomial& b) { return pbw_mul(a, b); });
}

inline UElem operator*(const UElem& u, const UElem& v) { return pbw_mul(u, v); }

inline UElem commutator(const UElem& u, const UElem& v) { return u * v - v * u; }

/// Componentwise product on U ⊗ U: (a⊗b)(c⊗d) = ac ⊗ bd.
inline Tensor2U tensor_mul(const Tensor2U& s, const Tensor2U& t) {
    Tensor2U r;
    for (const auto& [k1, c1] : s.terms())
        for (const auto& [k2, c2] : t.terms())
            r.add_scaled(tensor(pbw_mul(k1.first, k2.first), pbw_mul(k1.second, k2.second)), c1 * c2);
    return r;
}

namespace detail {

inline BigInt binomial(unsigned n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// Coproduct of a PBW monomial.  Generators are primitive and Δ is
/// multiplicative; since W⊗1 and 1⊗W commute, Δ(W^n) is a binomial sum and
/// Δ(X^aY^bZ^c) is already normal in each tensor factor.
inline Tensor2U comul(const PBWMonomial& m) {
    Tensor2U r;
    for (unsigned i = 0; i <= m.a; ++i)
        for (unsigned j = 0; j <= m.b; ++j)
            for (unsigned k = 0; k <= m.c; ++k) {
                const BigInt coeff =
                    detail::binomial(m.a, i) * detail::binomial(m.b, j) * detail::binomial(m.c, k);
                r.add_term({PBWMonomial{i, j, k}, PBWMonomial{m.a - i, m.b - j, m.c - k}}, QLaurent(Rational(coeff)));
            }
    return r;
}

inline Tensor2U comul(const UElem& u) {
    return linear_extend(u, [](const PBWMonomial& m) { return comul(m); });
}

/// All X^aY^bZ^c with a+b+c <= d: by degree, then decreasing a, then
/// decreasing b.  C(d+3, 3) entries.
inline std::vector<PBWMonomial> enumerate_pbw(unsigned max_total_degree) {
    std::vector<PBWMonomial> out;
    for (unsigned n = 0; n <= max_total_degree; ++n)
        for (unsigned a = n + 1; a-- > 0;)
            for (unsigned b = n - a + 1; b-- > 0;) out.push_back({a, b, n - a - b});
    return out;
}

inline bool in_lie_span(const UElem& u) {
    for (const auto& [m, c] : u.terms())
        if (m.degree() != 1) return false;
    return true;
}

/// Linear self-map of sl(2) (or, after extension, of U(sl(2))) given by the
/// images of X, Y and Z.
struct UEndo {
    UElem image_x = generator(Gen::X);
    UElem image_y = generator(Gen::Y);
    UElem image_z = generator(Gen::Z);

    static UEndo identity() { return {}; }

    /// X -> qX, Y -> q^-1 Y, Z -> Z
    static UEndo q_example() {
        return {QLaurent::q() * generator(Gen::X), QLaurent::q_power(-1) * generator(Gen::Y), generator(Gen::Z)};
    }

    const UElem& image(Gen g) const {
        switch (g) {
            case Gen::X: return image_x;
            case Gen::Y: return image_y;
            case Gen::Z: break;
        }
        return image_z;
    }

    /// Linear action on the Lie span.
    UElem apply_linear(const UElem& u) const {
        return linear_extend(u, [this](const PBWMonomial& m) -> UElem {
            if (m.degree() != 1) throw std::invalid_argument("element outside the span of X, Y, Z: " + to_string(m));
            return image(m.a ? Gen::X : m.b ? Gen::Y : Gen::Z);
        });
    }
};

/// Checks α([u,v]) = [α(u), α(v)] on the pairs (X,Y), (X,Z), (Y,Z).
inline CheckReport is_lie_endo(const UEndo& e) {
    for (Gen g : all_generators)
        if (!in_lie_span(e.image(g)))
            throw std::invalid_argument(std::string("image of ") + generator_name(g) + " is not in the span of X, Y, Z");
    CheckReport report{"lie-endomorphism", "alpha([u,v]) = [alpha(u), alpha(v)]", "u, v in {X, Y, Z}", 0, 0, {}};
    for (std::size_t i = 0; i < all_generators.size(); ++i)
        for (std::size_t j = i + 1; j < all_generators.size(); ++j) {
            const Gen u = all_generators[i];
            const Gen v = all_generators[j];
            const UElem lhs = e.apply_linear(commutator(generator(u), generator(v)));
            const UElem rhs = commutator(e.image(u), e.image(v));
            ++report.tested;
            if (!(lhs == rhs))
                report.record({"", {std::string(1, generator_name(u)), std::string(1, generator_name(v))},
                               to_string(lhs), to_string(rhs)});
        }
    return report;
}

/// The algebra endomorphism of U(sl(2)) extending a Lie endomorphism, with
/// 1 -> 1.  Only obtainable through extend_lie_endo.
class UAlgebraMap {
   public:
    const UEndo& generators() const noexcept { return gens_; }

    UElem apply(const PBWMonomial& m) const {
        UElem r = u_unit();
        for (unsigned i = 0; i < m.a; ++i) r = r * gens_.image_x;
        for (unsigned i = 0; i < m.b; ++i) r = r * gens_.image_y;
        for (unsigned i = 0; i < m.c; ++i) r = r * gens_.image_z;
        return r;
    }
    UElem apply(const UElem& u) const {
        return linear_extend(u, [this](const PBWMonomial& m) { return apply(m); });
    }

   private:
    friend UAlgebraMap extend_lie_endo(const UEndo& e);
    explicit UAlgebraMap(UEndo gens) : gens_(std::move(gens)) {}

    UEndo gens_;
};

/// Extends α_L multiplicatively; refuses maps that are not Lie
/// endomorphisms, for which the extension is not defined on U(sl(2)).
inline UAlgebraMap extend_lie_endo(const UEndo& e) {
    CheckReport report = is_lie_endo(e);
    if (!report.passed()) throw PreconditionError("not a Lie algebra endomorphism", std::move(report));
    return UAlgebraMap(e);
}

inline UElem apply_uendo(const UAlgebraMap& h, const UElem& u) { return h.apply(u); }

/// Reads "X^a Y^b Z^c"-style text with '*' or juxtaposition as the product;
/// products are reduced to PBW normal form as they are read.
inline UElem parse_uelem(std::string_view text) {
    detail::ExprReader<UElem> reader(
        text,
        [](char name, long e) -> UElem {
            if (name == 'q') return u_unit(QLaurent::q_power(static_cast<int>(e)));
            if (name != 'X' && name != 'Y' && name != 'Z')
                throw std::invalid_argument(std::string("unknown symbol '") + name + "'");
            if (e < 0) throw std::invalid_argument("negative exponent on a generator");
            const Gen g = name == 'X' ? Gen::X : name == 'Y' ? Gen::Y : Gen::Z;
            UElem r = u_unit();
            for (long i = 0; i < e; ++i) r = r * generator(g);
            return r;
        },
        [](const Rational& r) { return u_unit(QLaurent(r)); });
    return reader.parse();
}

}  // namespace homalg

#endif
