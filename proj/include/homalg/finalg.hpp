#ifndef HOMALG_FINALG_HPP
#define HOMALG_FINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/homcore.hpp"

namespace homalg {

/// Vectors of a finite-dimensional algebra, keyed by basis index.
using Vec = LinComb<std::size_t>;

/// Associative algebra given by structure constants e_i e_j = Σ_k c_ijk e_k.
class StructAlgebra {
   public:
    /// `table[i][j]` is the product e_i e_j.  Throws PreconditionError when the
    /// product is not associative on basis triples or `unit` is not a two-sided
    /// unit.
    StructAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> table,
                  std::optional<Vec> unit = std::nullopt)
        : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
        const std::size_t n = labels_.size();
        if (table_.size() != n || std::any_of(table_.begin(), table_.end(), [n](const auto& row) { return row.size() != n; }))
            throw std::invalid_argument("structure-constant table does not match the dimension");
        for (const auto& row : table_)
            for (const Vec& v : row) check_indices(v);
        if (unit_) check_indices(*unit_);
        AlgCarrier<std::size_t> plain = carrier();
        CheckReport assoc = check_hom_associativity(plain);
        if (!assoc.passed()) throw PreconditionError("structure constants are not associative", std::move(assoc));
        if (unit_) {
            for (std::size_t i = 0; i < n; ++i)
                if (!(multiply(*unit_, basis_vector(i)) == basis_vector(i)) ||
                    !(multiply(basis_vector(i), *unit_) == basis_vector(i)))
                    throw std::invalid_argument("declared unit is not a two-sided unit");
        }
    }

    /// Full matrix algebra M_n with basis e_ij (row-major) and the identity as unit.
    static StructAlgebra matrix_algebra(std::size_t n) {
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) labels.push_back("e" + std::to_string(i) + std::to_string(j));
        const std::size_t dim = n * n;
        std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) table[i * n + j][j * n + l] = Vec(i * n + l);
        Vec unit;
        for (std::size_t i = 0; i < n; ++i) unit.add_term(i * n + i, 1);
        return StructAlgebra(std::move(labels), std::move(table), unit);
    }

    std::size_t dimension() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::optional<Vec>& unit() const noexcept { return unit_; }

    std::size_t index_of(std::string_view label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw std::invalid_argument("unknown basis label '" + std::string(label) + "'");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    Vec basis_vector(std::size_t i) const { return Vec(i); }
    const Vec& product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
    Vec multiply(const Vec& a, const Vec& b) const {
        return bilinear_extend(a, b, [this](std::size_t i, std::size_t j) { return table_[i][j]; });
    }

    std::string show(std::size_t i) const { return labels_.at(i); }
    std::string render(const Vec& v) const {
        return homalg::render(v, [this](std::size_t i) { return labels_.at(i); });
    }

    /// (A, μ, Id) over the full basis.
    AlgCarrier<std::size_t> carrier() const {
        AlgCarrier<std::size_t> c;
        c.name = "A";
        for (std::size_t i = 0; i < dimension(); ++i) c.basis.push_back(i);
        c.mul = [table = table_](std::size_t i, std::size_t j) { return table[i][j]; };
        c.alpha = identity_map<std::size_t>();
        c.show = [labels = labels_](std::size_t i) { return labels.at(i); };
        return c;
    }

   private:
    void check_indices(const Vec& v) const {
        for (const auto& [k, c] : v.terms())
            if (k >= labels_.size()) throw std::invalid_argument("basis index out of range");
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<Vec>> table_;
    std::optional<Vec> unit_;
};

/// Square matrix acting on coordinate vectors; column j is the image of e_j.
class LinOp {
   public:
    explicit LinOp(std::size_t n) : n_(n), m_(n * n) {}

    static LinOp identity(std::size_t n) {
        LinOp r(n);
        for (std::size_t i = 0; i < n; ++i) r.at(i, i) = 1;
        return r;
    }

    /// Matrix of a linear map given on basis indices.
    template <class F>
    static LinOp from_images(std::size_t n, F&& image) {
        LinOp r(n);
        for (std::size_t j = 0; j < n; ++j)
            for (const auto img = image(j); const auto& [i, c] : img.terms()) r.at(i, j) = c;
        return r;
    }

    std::size_t dimension() const noexcept { return n_; }
    QLaurent& at(std::size_t row, std::size_t col) { return m_.at(row * n_ + col); }
    const QLaurent& at(std::size_t row, std::size_t col) const { return m_.at(row * n_ + col); }

    Vec apply(std::size_t j) const {
        Vec r;
        for (std::size_t i = 0; i < n_; ++i) r.add_term(i, at(i, j));
        return r;
    }
    Vec apply(const Vec& v) const {
        return linear_extend(v, [this](std::size_t j) { return apply(j); });
    }

    /// this ∘ inner
    LinOp compose(const LinOp& inner) const {
        return from_images(n_, [&](std::size_t j) { return apply(inner.apply(j)); });
    }

    LinearMap<std::size_t> as_map() const {
        return [op = *this](std::size_t j) { return op.apply(j); };
    }

    friend bool operator==(const LinOp& a, const LinOp& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

   private:
    std::size_t n_;
    std::vector<QLaurent> m_;
};

namespace detail {

// Solves M x = rhs over the rationals by Gauss-Jordan elimination; nullopt
// when M is singular.  Entries depending on q are refused.
inline std::optional<std::vector<Rational>> solve_rational(const LinOp& m, const std::vector<Rational>& rhs) {
    const std::size_t n = m.dimension();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!m.at(i, j).is_constant())
                throw std::invalid_argument("exact inversion needs q-free entries; got " + m.at(i, j).to_string());
            a[i][j] = m.at(i, j).constant_value();
        }
        a[i][n] = rhs[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

}  // namespace detail

/// Two-sided inverse of `a` in a unital algebra, found by solving a·x = 1.
inline Vec algebra_inverse(const StructAlgebra& A, const Vec& a) {
    if (!A.unit()) throw std::invalid_argument("algebra has no unit");
    const std::size_t n = A.dimension();
    const LinOp left = LinOp::from_images(n, [&](std::size_t j) { return A.multiply(a, A.basis_vector(j)); });
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!A.unit()->coefficient(i).is_zero()) rhs[i] = A.unit()->coefficient(i).constant_value();
    const auto x = detail::solve_rational(left, rhs);
    if (!x) throw std::invalid_argument("element " + A.render(a) + " is not invertible");
    Vec inv;
    for (std::size_t i = 0; i < n; ++i) inv.add_term(i, QLaurent((*x)[i]));
    if (!(A.multiply(inv, a) == *A.unit())) throw std::invalid_argument("element " + A.render(a) + " has no two-sided inverse");
    return inv;
}

/// i_a(b) = a b a⁻¹.
inline LinOp inner_automorphism(const StructAlgebra& A, const Vec& a) {
    const Vec inv = algebra_inverse(A, a);
    return LinOp::from_images(A.dimension(), [&](std::size_t j) { return A.multiply(A.multiply(a, A.basis_vector(j)), inv); });
}

/// φ(ab) = φ(a)φ(b) on basis pairs and φ invertible.
inline CheckReport check_automorphism(const StructAlgebra& A, const LinOp& op, const std::string& name = "phi") {
    AlgCarrier<std::size_t> c = A.carrier();
    c.alpha = op.as_map();
    CheckReport r = check_multiplicativity(c);
    r.axiom = "automorphism";
    r.bound = name + " on " + r.bound;
    ++r.tested;
    std::vector<Rational> zero(A.dimension());
    bool invertible = false;
    try {
        // Elimination fails exactly when some column has no pivot.
        invertible = detail::solve_rational(op, zero).has_value();
    } catch (const std::invalid_argument&) {
        invertible = false;
    }
    if (!invertible) r.record({"invertible", {name}, "singular", "invertible"});
    return r;
}

/// k[G] for a finite group G of algebra automorphisms listed extensionally.
/// Elements are grouplike: Δ(φ) = φ⊗φ.
class GroupBialgebra {
   public:
    /// Verifies that every operator is an automorphism of A and that the list
    /// is closed under composition and contains the identity.
    GroupBialgebra(const StructAlgebra& A, std::vector<std::string> names, std::vector<LinOp> ops)
        : names_(std::move(names)), ops_(std::move(ops)) {
        if (names_.size() != ops_.size()) throw std::invalid_argument("group element names and operators differ in number");
        if (ops_.empty()) throw std::invalid_argument("group is empty");
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            if (ops_[i].dimension() != A.dimension()) throw std::invalid_argument("operator " + names_[i] + " has wrong dimension");
            CheckReport r = check_automorphism(A, ops_[i], names_[i]);
            if (!r.passed()) throw PreconditionError("operator " + names_[i] + " is not an algebra automorphism", std::move(r));
        }
        const LinOp id = LinOp::identity(A.dimension());
        if (std::none_of(ops_.begin(), ops_.end(), [&](const LinOp& op) { return op == id; }))
            throw std::invalid_argument("group does not contain the identity");
        table_.assign(ops_.size(), std::vector<std::size_t>(ops_.size()));
        for (std::size_t i = 0; i < ops_.size(); ++i)
            for (std::size_t j = 0; j < ops_.size(); ++j) {
                const LinOp prod = ops_[i].compose(ops_[j]);
                auto it = std::find(ops_.begin(), ops_.end(), prod);
                if (it == ops_.end())
                    throw std::invalid_argument("group not closed: " + names_[i] + " o " + names_[j] + " is not listed");
                table_[i][j] = static_cast<std::size_t>(it - ops_.begin());
            }
        // Finite and closed under composition, so inverses are present.
    }

    std::size_t order() const noexcept { return ops_.size(); }
    const std::vector<LinOp>& operators() const noexcept { return ops_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

    /// (k[G], μ, Δ, Id).
    BialgCarrier<std::size_t> carrier() const {
        BialgCarrier<std::size_t> H;
        H.name = "k[G]";
        for (std::size_t i = 0; i < ops_.size(); ++i) H.basis.push_back(i);
        H.mul = [table = table_](std::size_t i, std::size_t j) { return Vec(table[i][j]); };
        H.alpha = identity_map<std::size_t>();
        H.show = [names = names_](std::size_t i) { return names.at(i); };
        H.comul = [](std::size_t i) { return Tensor2<std::size_t, std::size_t>({i, i}); };
        return H;
    }

   private:
    std::vector<std::string> names_;
    std::vector<LinOp> ops_;
    std::vector<std::vector<std::size_t>> table_;
};

/// ρ(φ ⊗ a) = φ(a).  Operators were verified as automorphisms when G was built.
inline ModCarrier<std::size_t, std::size_t> automorphism_action(const GroupBialgebra& G, const StructAlgebra& A) {
    ModCarrier<std::size_t, std::size_t> M;
    M.name = "A";
    for (std::size_t i = 0; i < A.dimension(); ++i) M.basis.push_back(i);
    M.alpha = identity_map<std::size_t>();
    M.rho = [ops = G.operators()](std::size_t g, std::size_t j) { return ops.at(g).apply(j); };
    M.show = [labels = A.labels()](std::size_t i) { return labels.at(i); };
    return M;
}

/// The deformed package: k[G] with Id structure map, A_α = (A, α∘μ, α) and
/// ρ_α = α∘ρ.
struct GroupTwist {
    BialgCarrier<std::size_t> H;
    AlgCarrier<std::size_t> A;        // classical (A, μ, Id)
    AlgCarrier<std::size_t> A_alpha;  // (A, α∘μ, α)
    ModCarrier<std::size_t, std::size_t> rho;
    ModCarrier<std::size_t, std::size_t> rho_alpha;
    LinOp alpha;
};

/// Assembles the deformation for a twisting endomorphism α commuting with G.
/// Throws PreconditionError when α is not multiplicative or fails to commute
/// with some φ.
inline GroupTwist build_group_twist(const StructAlgebra& A, const GroupBialgebra& G, const LinOp& alpha) {
    GroupTwist s{G.carrier(), A.carrier(), {}, automorphism_action(G, A), {}, alpha};
    const CheckReport compat = check_compat(s.H, s.rho, identity_map<std::size_t>(), alpha.as_map());
    if (!compat.passed()) throw PreconditionError("twisting map does not commute with the group", compat);
    s.A_alpha = twist_algebra(s.A, alpha.as_map());
    s.rho_alpha = deform_module_structure(s.rho, alpha.as_map());
    return s;
}

/// Twist by the inner automorphism i_a; `a` must be fixed by every φ in G.
inline GroupTwist build_group_twist(const StructAlgebra& A, const GroupBialgebra& G, const Vec& a) {
    for (std::size_t g = 0; g < G.order(); ++g) {
        const Vec image = G.operators()[g].apply(a);
        if (!(image == a)) {
            CheckReport r{"fixed-element", "phi(a) = a", "group of order " + std::to_string(G.order()), G.order(), 1, {}};
            r.counterexamples.push_back({"", {G.names()[g], A.render(a)}, A.render(image), A.render(a)});
            throw PreconditionError(G.names()[g] + " does not fix " + A.render(a), std::move(r));
        }
    }
    return build_group_twist(A, G, inner_automorphism(A, a));
}

/// Parsed finite-algebra scenario file.
struct FinalgScenario {
    StructAlgebra algebra;
    GroupBialgebra group;
    LinOp twist;
    std::map<std::string, Vec> elements;
};

/// Text format, one directive per line, '#' starts a comment:
///
///   dimension 4
///   labels e11 e12 e21 e22
///   unit 1 0 0 1                     coordinates in the label order
///   product e11 e12 e12 1            e_i e_j gets c * e_k (sparse triples)
///   element a 2 0 0 3                named distinguished element
///   operator phi conjugate d         i_d for a named element d
///   operator psi matrix              followed by `dimension` rows of entries
///   group id phi                     listed operators, closed under composition
///   twist inner a                    α = i_a (a must be fixed by the group)
///   twist operator psi               α given directly
///
/// Coefficients are rationals or Laurent polynomials without spaces
/// ("-1/2", "q^2").  The operator named "id" is predefined as the identity.
inline FinalgScenario parse_finalg_scenario(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> dim;
    std::vector<std::string> labels;
    std::optional<Vec> unit;
    std::vector<std::tuple<std::string, std::string, std::string, QLaurent>> products;
    std::map<std::string, Vec> elements;
    std::vector<std::pair<std::string, std::vector<std::string>>> op_specs;  // name, tokens
    std::map<std::string, std::vector<std::vector<QLaurent>>> matrices;
    std::vector<std::string> group;
    std::vector<std::string> twist;

    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("scenario line " + std::to_string(lineno) + ": " + what);
    };
    auto read_coords = [&](std::istringstream& ls) {
        if (!dim) fail("dimension must come first");
        Vec v;
        std::string tok;
        std::size_t i = 0;
        while (ls >> tok) {
            if (i >= *dim) fail("too many coordinates");
            v.add_term(i++, parse_qlaurent(tok));
        }
        if (i != *dim) fail("expected " + std::to_string(*dim) + " coordinates");
        return v;
    };

    std::string pending_matrix;
    std::vector<std::vector<QLaurent>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string cmd;
        if (!(ls >> cmd)) continue;
        try {
            if (!pending_matrix.empty()) {
                std::vector<QLaurent> row{parse_qlaurent(cmd)};
                std::string tok;
                while (ls >> tok) row.push_back(parse_qlaurent(tok));
                if (row.size() != *dim) fail("matrix row needs " + std::to_string(*dim) + " entries");
                rows.push_back(std::move(row));
                if (rows.size() == *dim) {
                    matrices[pending_matrix] = std::move(rows);
                    rows.clear();
                    pending_matrix.clear();
                }
                continue;
            }
            if (cmd == "dimension") {
                std::size_t n = 0;
                if (!(ls >> n) || n == 0) fail("dimension must be a positive integer");
                dim = n;
            } else if (cmd == "labels") {
                std::string tok;
                while (ls >> tok) labels.push_back(tok);
            } else if (cmd == "unit") {
                unit = read_coords(ls);
            } else if (cmd == "product") {
                std::string i, j, k, c;
                if (!(ls >> i >> j >> k >> c)) fail("product needs: left right result coefficient");
                products.emplace_back(i, j, k, parse_qlaurent(c));
            } else if (cmd == "element") {
                std::string name;
                if (!(ls >> name)) fail("element needs a name");
                elements[name] = read_coords(ls);
            } else if (cmd == "operator") {
                std::string name, kind;
                if (!(ls >> name >> kind)) fail("operator needs a name and a kind");
                std::vector<std::string> toks{kind};
                std::string tok;
                while (ls >> tok) toks.push_back(tok);
                if (kind == "matrix") {
                    if (!dim) fail("dimension must come first");
                    pending_matrix = name;
                } else if (kind != "conjugate" || toks.size() != 2) {
                    fail("operator kind must be 'matrix' or 'conjugate <element>'");
                }
                op_specs.emplace_back(name, std::move(toks));
            } else if (cmd == "group") {
                std::string tok;
                while (ls >> tok) group.push_back(tok);
            } else if (cmd == "twist") {
                std::string tok;
                while (ls >> tok) twist.push_back(tok);
                if (twist.size() != 2 || (twist[0] != "inner" && twist[0] != "operator"))
                    fail("twist must be 'inner <element>' or 'operator <name>'");
            } else {
                fail("unknown directive '" + cmd + "'");
            }
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }
    if (!pending_matrix.empty()) throw std::invalid_argument("scenario: matrix for " + pending_matrix + " is incomplete");
    if (!dim) throw std::invalid_argument("scenario: missing dimension");
    if (labels.empty())
        for (std::size_t i = 0; i < *dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    if (labels.size() != *dim) throw std::invalid_argument("scenario: label count differs from dimension");

    auto index = [&](const std::string& l) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw std::invalid_argument("scenario: unknown basis label '" + l + "'");
        return static_cast<std::size_t>(it - labels.begin());
    };
    std::vector<std::vector<Vec>> table(*dim, std::vector<Vec>(*dim));
    for (const auto& [i, j, k, c] : products) table[index(i)][index(j)].add_term(index(k), c);
    StructAlgebra algebra(labels, std::move(table), unit);

    std::map<std::string, LinOp> ops{{"id", LinOp::identity(*dim)}};
    for (const auto& [name, toks] : op_specs) {
        if (toks[0] == "matrix") {
            const auto& m = matrices.at(name);
            LinOp op(*dim);
            for (std::size_t r = 0; r < *dim; ++r)
                for (std::size_t c = 0; c < *dim; ++c) op.at(r, c) = m[r][c];
            ops.insert_or_assign(name, op);
        } else {
            auto it = elements.find(toks[1]);
            if (it == elements.end()) throw std::invalid_argument("scenario: unknown element '" + toks[1] + "'");
            ops.insert_or_assign(name, inner_automorphism(algebra, it->second));
        }
    }
    if (group.empty()) group.push_back("id");
    std::vector<LinOp> group_ops;
    for (const auto& g : group) {
        auto it = ops.find(g);
        if (it == ops.end()) throw std::invalid_argument("scenario: unknown operator '" + g + "' in group");
        group_ops.push_back(it->second);
    }
    GroupBialgebra G(algebra, group, std::move(group_ops));

    LinOp alpha = LinOp::identity(*dim);
    if (!twist.empty()) {
        if (twist[0] == "inner") {
            auto it = elements.find(twist[1]);
            if (it == elements.end()) throw std::invalid_argument("scenario: unknown element '" + twist[1] + "'");
            for (std::size_t g = 0; g < G.order(); ++g)
                if (!(G.operators()[g].apply(it->second) == it->second))
                    throw PreconditionError("scenario: " + G.names()[g] + " does not fix " + twist[1]);
            alpha = inner_automorphism(algebra, it->second);
        } else {
            auto it = ops.find(twist[1]);
            if (it == ops.end()) throw std::invalid_argument("scenario: unknown operator '" + twist[1] + "'");
            alpha = it->second;
        }
    }
    return {std::move(algebra), std::move(G), std::move(alpha), std::move(elements)};
}

/// 2×2 matrices over the rationals, G = {id, conjugation by diag(1,-1)},
/// twisted by the inner automorphism of a = diag(2,3).
inline constexpr std::string_view m2_example_scenario = R"(# 2x2 matrix algebra, e_ij e_jl = e_il
dimension 4
labels e11 e12 e21 e22
unit 1 0 0 1
product e11 e11 e11 1
product e11 e12 e12 1
product e12 e21 e11 1
product e12 e22 e12 1
product e21 e11 e21 1
product e21 e12 e22 1
product e22 e21 e21 1
product e22 e22 e22 1
element d 1 0 0 -1
element a 2 0 0 3
operator phi conjugate d
group id phi
twist inner a
)";

}  // namespace homalg

#endif
