#ifndef HOMALG_LINCOMB_HPP
#define HOMALG_LINCOMB_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>

#include "homalg/scalars.hpp"

namespace homalg {

/// Finite linear combination of basis keys with QLaurent coefficients.
///
/// This is the common element type of every carrier in the library: Poly,
/// UElem, tensors over them and finite-dimensional vectors are all LinComb
/// instances over different key types.  Zero coefficients are never stored,
/// and iteration follows `Key`'s `operator<`, which therefore fixes the
/// canonical term order used in comparisons and rendered output.
template <class Key>
class LinComb {
   public:
    using key_type = Key;
    using Terms = std::map<Key, QLaurent>;

    LinComb() = default;
    explicit LinComb(const Key& k, const QLaurent& c = QLaurent(1)) { add_term(k, c); }

    const Terms& terms() const& noexcept { return terms_; }
    // by value on temporaries, so `for (... : f().terms())` does not dangle
    Terms terms() && noexcept { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    QLaurent coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? QLaurent() : it->second;
    }

    void add_term(const Key& k, const QLaurent& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& rhs) {
        for (const auto& [k, c] : rhs.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& rhs) {
        for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
        return *this;
    }
    LinComb& operator*=(const QLaurent& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    /// Adds s * rhs without building the scaled temporary.
    void add_scaled(const LinComb& rhs, const QLaurent& s) {
        if (s.is_zero()) return;
        for (const auto& [k, c] : rhs.terms_) add_term(k, c * s);
    }

    friend LinComb operator+(LinComb lhs, const LinComb& rhs) { return lhs += rhs; }
    friend LinComb operator-(LinComb lhs, const LinComb& rhs) { return lhs -= rhs; }
    friend LinComb operator-(LinComb v) {
        for (auto& [k, c] : v.terms_) c = -c;
        return v;
    }
    friend LinComb operator*(const QLaurent& s, LinComb v) { return v *= s; }
    friend LinComb operator*(LinComb v, const QLaurent& s) { return v *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    /// Applies `f` to every coefficient and drops terms that vanish.
    template <class F>
    LinComb map_coefficients(F&& f) const {
        LinComb r;
        for (const auto& [k, c] : terms_) r.add_term(k, f(c));
        return r;
    }

   private:
    Terms terms_;
};

/// Evaluates every coefficient at q = q0.
template <class Key>
LinComb<Key> specialize(const LinComb<Key>& v, const Rational& q0) {
    return v.map_coefficients([&](const QLaurent& c) { return QLaurent(c.specialize(q0)); });
}

template <class K1, class K2>
using Tensor2 = LinComb<std::pair<K1, K2>>;

template <class K1, class K2, class K3>
using Tensor3 = LinComb<std::tuple<K1, K2, K3>>;

/// Linear extension of a map given on basis keys.
template <class K, class F>
auto linear_extend(const LinComb<K>& v, F&& f) {
    using Out = std::decay_t<std::invoke_result_t<F&, const K&>>;
    Out r;
    for (const auto& [k, c] : v.terms()) r.add_scaled(f(k), c);
    return r;
}

/// Bilinear extension of a map given on pairs of basis keys.
template <class K1, class K2, class F>
auto bilinear_extend(const LinComb<K1>& a, const LinComb<K2>& b, F&& f) {
    using Out = std::decay_t<std::invoke_result_t<F&, const K1&, const K2&>>;
    Out r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add_scaled(f(ka, kb), ca * cb);
    return r;
}

template <class K1, class K2>
Tensor2<K1, K2> tensor(const LinComb<K1>& a, const LinComb<K2>& b) {
    Tensor2<K1, K2> r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add_term({ka, kb}, ca * cb);
    return r;
}

/// f ⊗ g applied to a two-fold tensor, with f and g given on basis keys.
template <class K1, class K2, class F, class G>
auto tensor_map(const Tensor2<K1, K2>& t, F&& f, G&& g) {
    using O1 = typename std::decay_t<std::invoke_result_t<F&, const K1&>>::key_type;
    using O2 = typename std::decay_t<std::invoke_result_t<G&, const K2&>>::key_type;
    Tensor2<O1, O2> r;
    for (const auto& [k, c] : t.terms()) r.add_scaled(tensor(f(k.first), g(k.second)), c);
    return r;
}

namespace detail {

// A key rendered as "1" is the unit and is omitted after its coefficient.
inline std::string render_term(const QLaurent& c, const std::string& key, bool first) {
    const bool unit = key == "1";
    std::string out;
    if (c.is_monomial()) {
        const auto& [k, v] = *c.terms().begin();
        const bool negative = v < 0;
        const QLaurent mag = QLaurent::q_power(k, negative ? Rational(-v) : v);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        if (unit) {
            out += mag.to_string();
        } else if (mag == QLaurent(1)) {
            out += key;
        } else {
            out += mag.to_string() + "*" + key;
        }
        return out;
    }
    if (!first) out += " + ";
    out += "(" + c.to_string() + ")";
    if (!unit) out += "*" + key;
    return out;
}

}  // namespace detail

/// Sparse text form of a linear combination in canonical term order.
template <class K, class Show>
std::string render(const LinComb<K>& v, Show&& show) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : v.terms()) {
        out += detail::render_term(c, show(k), first);
        first = false;
    }
    return out;
}

/// As render, but a power of q shared by every term is pulled out front:
/// q*X⊗1 + q*1⊗X prints as q*(X⊗1 + 1⊗X).
template <class K, class Show>
std::string render_factored(const LinComb<K>& v, Show&& show) {
    if (v.size() < 2) return render(v, show);
    std::optional<int> shared;
    for (const auto& [k, c] : v.terms()) {
        if (!c.is_monomial()) return render(v, show);
        const int e = c.terms().begin()->first;
        if (shared && *shared != e) return render(v, show);
        shared = e;
    }
    if (*shared == 0) return render(v, show);
    const LinComb<K> rest = v * QLaurent::q_power(-*shared);
    return QLaurent::q_power(*shared).to_string() + "*(" + render(rest, show) + ")";
}

template <class K1, class K2, class S1, class S2>
std::string render_tensor(const Tensor2<K1, K2>& t, S1&& s1, S2&& s2) {
    return render(t, [&](const std::pair<K1, K2>& k) { return s1(k.first) + "⊗" + s2(k.second); });
}

template <class K, class S>
std::string render_tensor3(const Tensor3<K, K, K>& t, S&& s) {
    return render(t, [&](const std::tuple<K, K, K>& k) {
        return s(std::get<0>(k)) + "⊗" + s(std::get<1>(k)) + "⊗" + s(std::get<2>(k));
    });
}

}  // namespace homalg

#endif
