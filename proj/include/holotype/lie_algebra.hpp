#pragma once

#include "holotype/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace holotype {

/// Lie algebra over Q given by structure constants in a fixed basis e_0..e_{d-1}.
///
/// Indexing convention, used everywhere: [e_i, e_j] = sum_k c(i, j, k) e_k.
/// Constants are stored densely; the nonzero entries with i < j are cached
/// so that brackets cost O(nnz) instead of O(d^3).
class LieAlgebra {
public:
    struct Term {
        std::size_t i, j, k;
        Rat coeff;
    };

    explicit LieAlgebra(std::size_t dim = 0) : dim_(dim), constants_(dim * dim * dim, Rat(0)) {}

    /// Table from entries with i < j only; antisymmetric mirrors are synthesized.
    static LieAlgebra from_upper_terms(std::size_t dim, const std::vector<Term>& terms)
    {
        LieAlgebra L(dim);
        for (const auto& t : terms) {
            if (t.i >= dim || t.j >= dim || t.k >= dim) throw Error("structure constant index out of range");
            if (t.i >= t.j) throw Error("structure constants must be given with i < j");
            L.constants_[L.index(t.i, t.j, t.k)] += t.coeff;
            L.constants_[L.index(t.j, t.i, t.k)] -= t.coeff;
        }
        L.rebuild_terms();
        return L;
    }

    /// Raw dense table, no mirroring. Used to represent invalid input for
    /// validation diagnostics; callers normally go through from_upper_terms.
    static LieAlgebra from_dense(std::size_t dim, std::vector<Rat> constants)
    {
        if (constants.size() != dim * dim * dim) throw Error("dense structure table has wrong size");
        LieAlgebra L(dim);
        L.constants_ = std::move(constants);
        L.rebuild_terms();
        return L;
    }

    std::size_t dim() const { return dim_; }

    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return constants_[index(i, j, k)]; }

    /// Nonzero c(i, j, k) with i < j.
    const std::vector<Term>& upper_terms() const { return upper_; }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.dim_ == b.dim_ && a.constants_ == b.constants_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

    void rebuild_terms()
    {
        upper_.clear();
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!is_zero(c(i, j, k))) upper_.push_back({i, j, k, c(i, j, k)});
    }

    std::size_t dim_;
    std::vector<Rat> constants_;
    std::vector<Term> upper_;
};

/// Bilinear extension of the table. Relies on antisymmetry of the table,
/// which every public constructor guarantees.
inline Vec bracket(const LieAlgebra& L, std::span<const Rat> x, std::span<const Rat> y)
{
    if (x.size() != L.dim() || y.size() != L.dim()) throw Error("bracket: vector length does not match algebra dimension");
    Vec out(L.dim(), Rat(0));
    for (const auto& t : L.upper_terms()) {
        const Rat w = x[t.i] * y[t.j] - x[t.j] * y[t.i];
        if (!is_zero(w)) out[t.k] += w * t.coeff;
    }
    return out;
}

inline Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y)
{
    return bracket(L, std::span<const Rat>(x), std::span<const Rat>(y));
}

inline Vec bracket_basis(const LieAlgebra& L, std::size_t i, std::size_t j)
{
    Vec out(L.dim(), Rat(0));
    for (std::size_t k = 0; k < L.dim(); ++k) out[k] = L.c(i, j, k);
    return out;
}

/// Outcome of validate(). On failure `indices` names the first violation,
/// 1-based: (i, j, k) for antisymmetry, (i, j, k, l) for Jacobi.
struct Validation {
    enum class Kind { ok, antisymmetry, jacobi };
    Kind kind = Kind::ok;
    std::vector<std::size_t> indices;

    explicit operator bool() const { return kind == Kind::ok; }

    std::string describe() const
    {
        if (kind == Kind::ok) return "valid";
        std::string s = kind == Kind::antisymmetry ? "antisymmetry violated at (i,j,k) = (" : "Jacobi identity violated at (i,j,k,l) = (";
        for (std::size_t n = 0; n < indices.size(); ++n) s += (n ? "," : "") + std::to_string(indices[n]);
        return s + ")";
    }
};

inline Validation validate(const LieAlgebra& L)
{
    const std::size_t d = L.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (L.c(i, j, k) != -L.c(j, i, k)) return {Validation::Kind::antisymmetry, {i + 1, j + 1, k + 1}};

    // sum_m c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj = 0
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Rat acc(0);
                    for (std::size_t m = 0; m < d; ++m) {
                        if (!is_zero(L.c(i, j, m))) acc += L.c(i, j, m) * L.c(m, k, l);
                        if (!is_zero(L.c(j, k, m))) acc += L.c(j, k, m) * L.c(m, i, l);
                        if (!is_zero(L.c(k, i, m))) acc += L.c(k, i, m) * L.c(m, j, l);
                    }
                    if (!is_zero(acc)) return {Validation::Kind::jacobi, {i + 1, j + 1, k + 1, l + 1}};
                }
    return {};
}

inline Subspace commutator_ideal(const LieAlgebra& L)
{
    std::vector<Vec> images;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) images.push_back(bracket_basis(L, i, j));
    return span(images, L.dim());
}

/// Block-diagonal table; e_i of `second` becomes e_{dim(first) + i}.
inline LieAlgebra direct_sum(const LieAlgebra& first, const LieAlgebra& second)
{
    const std::size_t shift = first.dim();
    std::vector<LieAlgebra::Term> terms = first.upper_terms();
    for (auto t : second.upper_terms()) terms.push_back({t.i + shift, t.j + shift, t.k + shift, t.coeff});
    return LieAlgebra::from_upper_terms(first.dim() + second.dim(), terms);
}

inline LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

/// Generalized Thurston algebra h_{2n+2}: [e_i, e_{n+1}] = e_{n+1+i} for
/// 1 <= i <= n (1-based), all other basis brackets zero.
inline LieAlgebra thurston(std::size_t n)
{
    if (n == 0) throw Error("thurston: n must be at least 1");
    std::vector<LieAlgebra::Term> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back({i, n, n + 1 + i, Rat(1)});
    return LieAlgebra::from_upper_terms(2 * n + 2, terms);
}

/// Lie algebra of the generalized Heisenberg group H(q, p): block matrices
/// [[0, a, b], [0, 0, c], [0, 0, 0]] with a, b of size p x q and c diagonal.
/// The matrix commutator gives [X, X'] = (0, a c' - a' c, 0), so the only
/// nonzero basis brackets are [A_ab, C_b] = B_ab.
///
/// Basis order: A_ab row-major over (a, b), then B_ab in the same order,
/// then C_1..C_q. dim = 2qp + q.
inline LieAlgebra gen_heisenberg(std::size_t q, std::size_t p)
{
    if (q == 0) throw Error("gen_heisenberg: q must be at least 1");
    const std::size_t block = p * q;
    std::vector<LieAlgebra::Term> terms;
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            const std::size_t A = a * q + b;
            terms.push_back({A, 2 * block + b, block + A, Rat(1)});
        }
    return LieAlgebra::from_upper_terms(2 * block + q, terms);
}

/// Solvable algebra with [e_i, e_{2n}] = e_i for 1 <= i <= 2n - 1.
inline LieAlgebra milnor(std::size_t even_dim)
{
    if (even_dim < 2 || even_dim % 2 != 0) throw Error("milnor: dimension must be even and at least 2");
    std::vector<LieAlgebra::Term> terms;
    for (std::size_t i = 0; i + 1 < even_dim; ++i) terms.push_back({i, even_dim - 1, i, Rat(1)});
    return LieAlgebra::from_upper_terms(even_dim, terms);
}

} // namespace holotype
