#pragma once

#include "holotype/lie_algebra.hpp"
#include "holotype/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace holotype {

/// Endomorphism J of the algebra with J^2 = -Id.
///
/// Matrix convention: column i holds the coordinates of J(e_i), so applying J
/// to a coordinate vector is the ordinary matrix-vector product.
class AlmostComplexStructure {
public:
    explicit AlmostComplexStructure(Mat j) : j_(std::move(j))
    {
        if (!j_.is_square()) throw Error("almost complex structure must be square");
        if (j_ * j_ != -Mat::identity(j_.rows())) throw Error("almost complex structure must satisfy J^2 = -I");
    }

    std::size_t dim() const { return j_.rows(); }
    const Mat& matrix() const { return j_; }

    Vec apply(std::span<const Rat> v) const { return j_ * v; }
    Vec apply(const Vec& v) const { return j_ * v; }

    friend bool operator==(const AlmostComplexStructure&, const AlmostComplexStructure&) = default;

private:
    Mat j_;
};

/// J0 e_{2k-1} = e_{2k}, J0 e_{2k} = -e_{2k-1} (1-based).
inline AlmostComplexStructure standard_pairing(std::size_t dim)
{
    if (dim % 2 != 0) throw Error("standard_pairing: dimension must be even");
    Mat j(dim, dim);
    for (std::size_t k = 0; k < dim; k += 2) {
        j(k + 1, k) = Rat(1);
        j(k, k + 1) = Rat(-1);
    }
    return AlmostComplexStructure(std::move(j));
}

namespace detail {
inline void require_match(const LieAlgebra& L, const AlmostComplexStructure& J)
{
    if (L.dim() != J.dim()) throw Error("almost complex structure size does not match algebra dimension");
}
} // namespace detail

/// N(x, y) = [x, y] + J[Jx, y] + J[x, Jy] - [Jx, Jy].
inline Vec nijenhuis_tensor(const LieAlgebra& L, const AlmostComplexStructure& J, const Vec& x, const Vec& y)
{
    detail::require_match(L, J);
    if (x.size() != L.dim() || y.size() != L.dim()) throw Error("nijenhuis_tensor: vector length mismatch");
    const Vec jx = J.apply(x);
    const Vec jy = J.apply(y);
    Vec out = bracket(L, x, y);
    const Vec mixed = J.apply(add(bracket(L, jx, y), bracket(L, x, jy)));
    const Vec both = bracket(L, jx, jy);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += mixed[k] - both[k];
    return out;
}

/// N(e_i, e_j) for i < j, in lexicographic order. N is bilinear and
/// antisymmetric, so these values span the Nijenhuis space.
inline std::vector<Vec> nijenhuis_values(const LieAlgebra& L, const AlmostComplexStructure& J)
{
    std::vector<Vec> values;
    const std::size_t d = L.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) values.push_back(nijenhuis_tensor(L, J, unit(d, i), unit(d, j)));
    return values;
}

inline Subspace nijenhuis_space(const LieAlgebra& L, const AlmostComplexStructure& J)
{
    return span(nijenhuis_values(L, J), L.dim());
}

inline bool is_integrable(const LieAlgebra& L, const AlmostComplexStructure& J)
{
    return nijenhuis_space(L, J).is_zero();
}

/// [x, y] + J[x, Jy]. Linear in x and in y separately, which is why the
/// IJ-subalgebra condition only has to be checked on basis pairs.
inline Vec ij_product(const LieAlgebra& L, const AlmostComplexStructure& J, const Vec& x, const Vec& y)
{
    return add(bracket(L, x, y), J.apply(bracket(L, x, J.apply(y))));
}

/// h is an IJ-subalgebra when it is a subalgebra, J h = h, it contains the
/// Nijenhuis space, and [x, y] + J[x, Jy] lies in h for x in h, y in g.
/// All four conditions are (bi)linear, so checking basis vectors suffices;
/// J h in h already gives J h = h since J is invertible.
inline bool is_ij_subalgebra(const LieAlgebra& L, const AlmostComplexStructure& J, const Subspace& h)
{
    detail::require_match(L, J);
    if (h.ambient_dim() != L.dim()) throw Error("is_ij_subalgebra: ambient dimension mismatch");
    const auto basis = h.basis_vectors();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!h.contains(bracket(L, basis[a], basis[b]))) return false;
    for (const auto& x : basis)
        if (!h.contains(J.apply(x))) return false;
    for (const auto& n : nijenhuis_values(L, J))
        if (!h.contains(n)) return false;
    for (const auto& x : basis)
        for (std::size_t y = 0; y < L.dim(); ++y)
            if (!h.contains(ij_product(L, J, x, unit(L.dim(), y)))) return false;
    return true;
}

/// Least subspace containing `seeds` that is closed under J, brackets of its
/// own elements, and x -> [x, y] + J[x, Jy] for all y in g.
///
/// Each round spans the current basis together with all three generator
/// families and stops once the canonical subspace no longer changes. The
/// dimension strictly grows until then, so at most dim(g) rounds run. With a
/// shuffle seed the seed list and every round's generator list are permuted
/// before elimination; the canonical result cannot depend on that order.
inline Subspace ij_closure(const LieAlgebra& L, const AlmostComplexStructure& J, std::vector<Vec> seeds,
                           std::optional<std::uint64_t> shuffle_seed = std::nullopt)
{
    detail::require_match(L, J);
    const std::size_t d = L.dim();
    std::optional<RationalSampler> rng;
    if (shuffle_seed) {
        rng.emplace(*shuffle_seed);
        rng->shuffle(seeds);
    }
    Subspace h = span(seeds, d);
    while (true) {
        auto generators = h.basis_vectors();
        const auto basis = generators;
        for (std::size_t a = 0; a < basis.size(); ++a) {
            generators.push_back(J.apply(basis[a]));
            for (std::size_t b = a + 1; b < basis.size(); ++b) generators.push_back(bracket(L, basis[a], basis[b]));
            for (std::size_t y = 0; y < d; ++y) generators.push_back(ij_product(L, J, basis[a], unit(d, y)));
        }
        if (rng) rng->shuffle(generators);
        Subspace next = span(generators, d);
        if (next == h) return h;
        h = std::move(next);
    }
}

/// The intersection of all IJ-subalgebras. Any IJ-subalgebra contains the
/// Nijenhuis space and is closed under the closure generators, so it contains
/// ij_closure(ln); that closure is itself an IJ-subalgebra (it contains ln
/// and satisfies the other conditions by construction). Hence the two agree.
inline Subspace minimal_ij_subalgebra(const LieAlgebra& L, const AlmostComplexStructure& J,
                                      std::optional<std::uint64_t> shuffle_seed = std::nullopt)
{
    return ij_closure(L, J, nijenhuis_values(L, J), shuffle_seed);
}

/// (dim g - d(g, J)) / 2, with d(g, J) the dimension of the minimal
/// IJ-subalgebra. That subspace is J-invariant, hence even-dimensional.
inline std::size_t holomorphic_type(const LieAlgebra& L, const AlmostComplexStructure& J)
{
    if (L.dim() % 2 != 0) throw Error("holomorphic_type: algebra dimension must be even");
    const auto h = minimal_ij_subalgebra(L, J);
    if (h.dim() % 2 != 0) throw Error("holomorphic_type: minimal IJ-subalgebra has odd dimension");
    return (L.dim() - h.dim()) / 2;
}

struct TypeTWitness {
    Subspace subspace;
    bool is_ij_subalgebra = false;
};

/// [g, g] + J[g, g]. It always contains ln and is closed under the IJ
/// generators, and its dimension is at most 2 dim [g, g].
inline TypeTWitness type_t_witness(const LieAlgebra& L, const AlmostComplexStructure& J)
{
    detail::require_match(L, J);
    const auto derived = commutator_ideal(L);
    auto h = subspace_sum(derived, image(J.matrix(), derived));
    const bool ok = is_ij_subalgebra(L, J, h);
    return {std::move(h), ok};
}

/// J = P J0 P^-1 with P a seeded random rational matrix, redrawn until invertible.
inline AlmostComplexStructure random_acs(std::size_t dim, std::uint64_t seed)
{
    if (dim % 2 != 0) throw Error("random_acs: dimension must be even");
    RationalSampler rng(seed);
    const Mat j0 = standard_pairing(dim).matrix();
    while (true) {
        Mat p = rng.matrix(dim, dim);
        if (auto p_inv = inverse(p)) return AlmostComplexStructure(p * j0 * *p_inv);
    }
}

inline AlmostComplexStructure random_acs(const LieAlgebra& L, std::uint64_t seed) { return random_acs(L.dim(), seed); }

} // namespace holotype
