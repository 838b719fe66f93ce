#pragma once

#include "holotype/matrix.hpp"

#include <span>
#include <vector>

namespace holotype {

/// Linear subspace of Q^n held as the nonzero rows of its reduced row echelon
/// form. The representation is canonical, so equal subspaces compare equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim)
    {
        Subspace s(ambient_dim);
        s.basis_ = Mat::identity(ambient_dim);
        s.pivots_.resize(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
        return s;
    }

    /// Row space of an arbitrary matrix.
    static Subspace row_space(const Mat& m)
    {
        auto e = echelon(m);
        Subspace s(m.cols());
        s.basis_ = block(e.reduced, 0, 0, e.rank(), m.cols());
        s.pivots_ = std::move(e.pivots);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }

    const Mat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<Vec> basis_vectors() const
    {
        std::vector<Vec> out;
        out.reserve(dim());
        for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
        return out;
    }

    /// Membership by reduction against the echelon basis; pivot columns of the
    /// basis are unit columns, so v is inside iff v - sum v[p_r] row_r = 0.
    bool contains(std::span<const Rat> v) const
    {
        if (v.size() != ambient_) throw Error("subspace_contains: ambient dimension mismatch");
        Vec residual(v.begin(), v.end());
        for (std::size_t r = 0; r < dim(); ++r) {
            const Rat coeff = residual[pivots_[r]];
            if (holotype::is_zero(coeff)) continue;
            for (std::size_t c = 0; c < ambient_; ++c) residual[c] -= coeff * basis_(r, c);
        }
        return is_zero_vector<Rat>(residual);
    }

    bool contains(const Vec& v) const { return contains(std::span<const Rat>(v)); }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical span; zero vectors and duplicates drop out in elimination.
inline Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim)
{
    for (const auto& v : vectors)
        if (v.size() != ambient_dim) throw Error("span: vector length does not match ambient dimension");
    return Subspace::row_space(Mat::from_rows(vectors, ambient_dim));
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw Error("subspace_sum: ambient dimension mismatch");
    auto vectors = a.basis_vectors();
    for (auto& v : b.basis_vectors()) vectors.push_back(std::move(v));
    return span(vectors, a.ambient_dim());
}

inline bool subspace_contains(const Subspace& a, const Vec& v) { return a.contains(v); }

inline bool subspace_leq(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw Error("subspace_leq: ambient dimension mismatch");
    for (std::size_t r = 0; r < a.dim(); ++r)
        if (!b.contains(a.basis().row(r))) return false;
    return true;
}

/// Intersection by the kernel method: with basis rows A (a x n) and B (b x n),
/// every kernel vector (x, y) of [A; -B]^T gives x A = y B, and the vectors
/// x A over a kernel basis span the intersection.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw Error("subspace_intersection: ambient dimension mismatch");
    const std::size_t n = a.ambient_dim();
    Mat stacked(a.dim() + b.dim(), n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) stacked(r, c) = a.basis()(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) stacked(a.dim() + r, c) = -b.basis()(r, c);
    std::vector<Vec> meets;
    for (const auto& coeffs : kernel(stacked.transpose())) {
        Vec v(n, Rat(0));
        for (std::size_t r = 0; r < a.dim(); ++r)
            if (!is_zero(coeffs[r]))
                for (std::size_t c = 0; c < n; ++c) v[c] += coeffs[r] * a.basis()(r, c);
        meets.push_back(std::move(v));
    }
    return span(meets, n);
}

/// Image of a subspace under a linear map given as a matrix acting on columns.
inline Subspace image(const Mat& map, const Subspace& s)
{
    if (map.cols() != s.ambient_dim()) throw Error("image: shape mismatch");
    std::vector<Vec> out;
    for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(map * s.basis().row(r));
    return span(out, map.rows());
}

} // namespace holotype
