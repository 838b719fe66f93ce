#pragma once

#include "holotype/acs.hpp"

#include <cstdint>
#include <vector>

namespace holotype {

/// Left-invariant metric as a Gram matrix in the basis e_i.
class Metric {
public:
    /// Rejects non-symmetric input and anything whose leading principal
    /// minors are not all strictly positive.
    explicit Metric(Mat gram) : gram_(std::move(gram))
    {
        if (!is_symmetric(gram_)) throw Error("metric Gram matrix must be symmetric");
        for (std::size_t k = 1; k <= gram_.rows(); ++k)
            if (sgn(determinant(block(gram_, 0, 0, k, k))) <= 0)
                throw Error("metric Gram matrix must be positive definite");
    }

    static Metric identity(std::size_t dim) { return Metric(Mat::identity(dim)); }

    std::size_t dim() const { return gram_.rows(); }
    const Mat& gram() const { return gram_; }

private:
    Mat gram_;
};

/// Antisymmetric bilinear form, f(i, j) = F(e_i, e_j).
class TwoForm {
public:
    explicit TwoForm(Mat f) : f_(std::move(f))
    {
        if (!is_antisymmetric(f_)) throw Error("two-form matrix must be antisymmetric");
    }

    static TwoForm zero(std::size_t dim) { return TwoForm(Mat(dim, dim)); }

    std::size_t dim() const { return f_.rows(); }
    const Mat& matrix() const { return f_; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return f_(i, j); }

    /// F(v, e_k).
    Rat eval_basis(std::span<const Rat> v, std::size_t k) const
    {
        Rat acc(0);
        for (std::size_t m = 0; m < v.size(); ++m)
            if (!is_zero(v[m])) acc += v[m] * f_(m, k);
        return acc;
    }

    friend bool operator==(const TwoForm&, const TwoForm&) = default;

private:
    Mat f_;
};

/// Alternating trilinear form, stored densely and kept alternating by only
/// exposing writes through set(), which fills all six permutations.
class ThreeForm {
public:
    explicit ThreeForm(std::size_t dim) : dim_(dim), t_(dim * dim * dim, Rat(0)) {}

    std::size_t dim() const { return dim_; }

    const Rat& operator()(std::size_t i, std::size_t j, std::size_t k) const { return t_[(i * dim_ + j) * dim_ + k]; }

    /// Sets t(i, j, k) for i < j < k and its antisymmetric images.
    void set(std::size_t i, std::size_t j, std::size_t k, const Rat& value)
    {
        if (!(i < j && j < k && k < dim_)) throw Error("ThreeForm::set requires i < j < k < dim");
        put(i, j, k, value);
        put(j, k, i, value);
        put(k, i, j, value);
        put(j, i, k, -value);
        put(i, k, j, -value);
        put(k, j, i, -value);
    }

    bool is_zero() const
    {
        return std::all_of(t_.begin(), t_.end(), [](const Rat& x) { return holotype::is_zero(x); });
    }

    friend bool operator==(const ThreeForm&, const ThreeForm&) = default;

private:
    void put(std::size_t i, std::size_t j, std::size_t k, const Rat& v) { t_[(i * dim_ + j) * dim_ + k] = v; }

    std::size_t dim_;
    std::vector<Rat> t_;
};

/// Wedge of 1-forms: (a ^ b)(x, y) = a(x) b(y) - a(y) b(x).
inline TwoForm wedge(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) throw Error("wedge: length mismatch");
    Mat f(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) f(i, j) = a[i] * b[j] - a[j] * b[i];
    return TwoForm(std::move(f));
}

/// Chevalley-Eilenberg differential of a 1-form: d alpha(x, y) = -alpha([x, y]).
/// With the wedge above this gives d alpha_{n+1+i} = alpha_{n+1} ^ alpha_i on
/// the Thurston algebra.
inline TwoForm ce_d1(const LieAlgebra& L, const Vec& alpha)
{
    if (alpha.size() != L.dim()) throw Error("ce_d1: form size does not match algebra");
    Mat f(L.dim(), L.dim());
    for (const auto& t : L.upper_terms()) {
        const Rat v = -alpha[t.k] * t.coeff;
        f(t.i, t.j) += v;
        f(t.j, t.i) -= v;
    }
    return TwoForm(std::move(f));
}

/// dF(x, y, z) = -F([x, y], z) + F([x, z], y) - F([y, z], x).
inline ThreeForm ce_d2(const LieAlgebra& L, const TwoForm& F)
{
    if (F.dim() != L.dim()) throw Error("ce_d2: form size does not match algebra");
    const std::size_t d = L.dim();
    ThreeForm out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Rat v = -F.eval_basis(bracket_basis(L, i, j), k);
                v += F.eval_basis(bracket_basis(L, i, k), j);
                v -= F.eval_basis(bracket_basis(L, j, k), i);
                if (!is_zero(v)) out.set(i, j, k, v);
            }
    return out;
}

/// g(JX, JY) = g(X, Y), i.e. J^T G J = G.
inline bool is_compatible(const Metric& g, const AlmostComplexStructure& J)
{
    if (g.dim() != J.dim()) throw Error("is_compatible: size mismatch");
    return J.matrix().transpose() * g.gram() * J.matrix() == g.gram();
}

/// F(e_i, e_j) = g(J e_i, e_j), i.e. f = J^T G. Antisymmetric exactly when
/// J is compatible with g.
inline TwoForm kaehler_form(const Metric& g, const AlmostComplexStructure& J)
{
    if (g.dim() != J.dim()) throw Error("kaehler_form: size mismatch");
    Mat f = J.matrix().transpose() * g.gram();
    if (!is_antisymmetric(f)) throw Error("kaehler_form: J is not compatible with the metric");
    return TwoForm(std::move(f));
}

/// Compatible, dF = 0, and F nondegenerate. Compatibility already forces
/// det F != 0; it is checked anyway since it is cheap and catches sign slips.
inline bool is_symplectic(const LieAlgebra& L, const Metric& g, const AlmostComplexStructure& J)
{
    if (L.dim() != J.dim() || g.dim() != J.dim()) throw Error("is_symplectic: size mismatch");
    if (!is_compatible(g, J)) return false;
    const auto F = kaehler_form(g, J);
    if (!ce_d2(L, F).is_zero()) return false;
    return !is_zero(determinant(F.matrix()));
}

/// [[O, A], [-A^T, O]] in (n+1) + (n+1) blocks.
inline AlmostComplexStructure block_acs(const Mat& a)
{
    if (!a.is_square()) throw Error("block_acs: A must be square");
    const std::size_t m = a.rows();
    Mat j(2 * m, 2 * m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            j(r, m + c) = a(r, c);
            j(m + r, c) = -a(c, r);
        }
    return AlmostComplexStructure(std::move(j));
}

/// A = I, the standard symplectic structure on h_{2n+2}.
inline AlmostComplexStructure kim_acs(std::size_t n) { return block_acs(Mat::identity(n + 1)); }

/// J = [[O, A], [-A^T, O]] with A orthogonal and the top-left n x n block of
/// A symmetric.
inline bool block_form_check(const AlmostComplexStructure& J, std::size_t n)
{
    if (J.dim() != 2 * n + 2) throw Error("block_form_check: J must have size 2n + 2");
    const std::size_t m = n + 1;
    const Mat& j = J.matrix();
    if (!block(j, 0, 0, m, m).is_zero() || !block(j, m, m, m, m).is_zero()) return false;
    const Mat a = block(j, 0, m, m, m);
    if (block(j, m, 0, m, m) != -a.transpose()) return false;
    if (a.transpose() * a != Mat::identity(m)) return false;
    return is_symmetric(block(a, 0, 0, n, n));
}

/// Coefficient form of dF = 0 on h_{2n+2} for J = (a^i_j), J e_i = sum_j a^i_j e_j
/// (so a^i_j = J(j, i) here), 1-based:
///   a^j_{n+i+1} = a^i_{n+j+1}    for 1 <= i, j <= n
///   a^{n+i+1}_{n+j+1} = 0        for 1 <= i <= n, 1 <= j <= n + 1
inline bool lemma_coefficient_conditions(const AlmostComplexStructure& J, std::size_t n)
{
    if (J.dim() != 2 * n + 2) throw Error("lemma_coefficient_conditions: J must have size 2n + 2");
    auto a = [&](std::size_t upper, std::size_t lower) -> const Rat& { return J.matrix()(lower - 1, upper - 1); };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (a(j, n + i + 1) != a(i, n + j + 1)) return false;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n + 1; ++j)
            if (!is_zero(a(n + i + 1, n + j + 1))) return false;
    return true;
}

/// Q J0 Q^T with Q the Cayley transform of `generator`. Compatible with the
/// identity metric for every antisymmetric generator.
inline AlmostComplexStructure compatible_from_generator(const Mat& generator)
{
    const Mat q = cayley_orthogonal(generator);
    return AlmostComplexStructure(q * standard_pairing(generator.rows()).matrix() * q.transpose());
}

inline AlmostComplexStructure sample_compatible(std::size_t dim, std::uint64_t seed)
{
    if (dim % 2 != 0) throw Error("sample_compatible: dimension must be even");
    RationalSampler rng(seed);
    return compatible_from_generator(rng.antisymmetric(dim));
}

/// Block structure with A = R D R^T, R the Cayley transform of `generator`
/// and D = diag(signs). A is symmetric and orthogonal, so B is symmetric.
inline AlmostComplexStructure lemma_family_from(const Mat& generator, const std::vector<Rat>& signs)
{
    const std::size_t m = generator.rows();
    if (signs.size() != m) throw Error("lemma_family_from: sign count must match generator size");
    Mat d(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (signs[i] != 1 && signs[i] != -1) throw Error("lemma_family_from: signs must be +1 or -1");
        d(i, i) = signs[i];
    }
    const Mat r = cayley_orthogonal(generator);
    return block_acs(r * d * r.transpose());
}

inline AlmostComplexStructure sample_lemma_family(std::size_t n, std::uint64_t seed)
{
    if (n == 0) throw Error("sample_lemma_family: n must be at least 1");
    RationalSampler rng(seed);
    const Mat s = rng.antisymmetric(n + 1);
    std::vector<Rat> signs(n + 1);
    for (auto& x : signs) x = rng.sign();
    return lemma_family_from(s, signs);
}

namespace detail {
/// I_{n-1} (scaled by `sign`) followed by the quarter turn [[0, 1], [-1, 0]]
/// on the last two coordinates. Orthogonal, not symmetric; its top-left
/// n x n block is diag(sign, ..., sign, 0).
inline Mat quarter_turn_tail(std::size_t n, const Rat& sign)
{
    Mat a(n + 1, n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, i) = sign;
    a(n - 1, n) = sign;
    a(n, n - 1) = -sign;
    return a;
}

inline Mat embed_top_left(const Mat& r, std::size_t size)
{
    Mat out = Mat::identity(size);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = r(i, j);
    return out;
}
} // namespace detail

/// Fixed block structures whose A is orthogonal and not symmetric while B is
/// symmetric; all of them lie outside the A = R D R^T family.
inline std::vector<AlmostComplexStructure> handcrafted_lemma_cases(std::size_t n)
{
    if (n == 0) throw Error("handcrafted_lemma_cases: n must be at least 1");
    std::vector<AlmostComplexStructure> out;
    out.push_back(block_acs(detail::quarter_turn_tail(n, Rat(1))));
    out.push_back(block_acs(detail::quarter_turn_tail(n, Rat(-1))));
    if (n >= 2) {
        Mat s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                s(i, j) = make_rat(static_cast<long>(i + j + 1), 2);
                s(j, i) = -s(i, j);
            }
        const Mat r = detail::embed_top_left(cayley_orthogonal(s), n + 1);
        out.push_back(block_acs(r * detail::quarter_turn_tail(n, Rat(1)) * r.transpose()));
    }
    return out;
}

/// Random conjugates diag(R, 1) T diag(R, 1)^T of a signed quarter-turn tail
/// T. B = R diag(..., 0) R^T stays symmetric; A is generically not symmetric.
inline AlmostComplexStructure sample_twisted_lemma_family(std::size_t n, std::uint64_t seed)
{
    if (n == 0) throw Error("sample_twisted_lemma_family: n must be at least 1");
    RationalSampler rng(seed);
    Mat t = detail::quarter_turn_tail(n, Rat(1));
    for (std::size_t i = 0; i + 1 < n; ++i) t(i, i) = rng.sign();
    const Rat turn = rng.sign();
    t(n - 1, n) = turn;
    t(n, n - 1) = -turn;
    const Mat r = detail::embed_top_left(cayley_orthogonal(rng.antisymmetric(n)), n + 1);
    return block_acs(r * t * r.transpose());
}

/// Quarter turn in the first two coordinates: B has an antisymmetric 2 x 2
/// corner, so dF != 0. Requires n >= 2.
inline AlmostComplexStructure rotation_b_case(std::size_t n)
{
    if (n < 2) throw Error("rotation_b_case: n must be at least 2");
    Mat a = Mat::identity(n + 1);
    a(0, 0) = Rat(0);
    a(1, 1) = Rat(0);
    a(0, 1) = Rat(-1);
    a(1, 0) = Rat(1);
    return block_acs(a);
}

/// Random block structure with A = Cayley(S) orthogonal but unconstrained:
/// compatible, generically B is not symmetric.
inline AlmostComplexStructure sample_block_orthogonal(std::size_t n, std::uint64_t seed)
{
    RationalSampler rng(seed);
    return block_acs(cayley_orthogonal(rng.antisymmetric(n + 1)));
}

} // namespace holotype
