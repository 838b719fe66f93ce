#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace holotype;

namespace {
// Je1 = -e3, Je2 = -e4, Je3 = e1, Je4 = e2 on h_4.
AlmostComplexStructure standard_h4() { return kim_acs(1); }
} // namespace

TEST_CASE("almost complex structures must square to -1", "[acs]")
{
    CHECK_NOTHROW(AlmostComplexStructure(Mat{{0, -1}, {1, 0}}));
    CHECK_THROWS_AS(AlmostComplexStructure(Mat{{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(AlmostComplexStructure(Mat(2, 3)), Error);
    const auto J = standard_h4();
    CHECK(J.apply(unit(4, 0)) == negate(unit(4, 2)));
    CHECK(J.apply(unit(4, 1)) == negate(unit(4, 3)));
    CHECK(J.apply(unit(4, 2)) == unit(4, 0));
    CHECK(J.apply(unit(4, 3)) == unit(4, 1));
    const auto J0 = standard_pairing(4);
    CHECK(J0.apply(unit(4, 0)) == unit(4, 1));
    CHECK(J0.apply(unit(4, 1)) == negate(unit(4, 0)));
    CHECK_THROWS_AS(standard_pairing(3), Error);
}

TEST_CASE("Nijenhuis tensor on h_4", "[acs]")
{
    const auto L = thurston(1);
    const auto J = standard_h4();
    CHECK(nijenhuis_tensor(L, J, unit(4, 0), unit(4, 1)) == unit(4, 2));
    // [e3, e2] + J[e1, e2] + J[e3, -e4] - [e1, -e4] = J e3 = e1
    CHECK(nijenhuis_tensor(L, J, unit(4, 2), unit(4, 1)) == unit(4, 0));
    RationalSampler rng(4);
    const auto x = rng.vector(4);
    CHECK(is_zero_vector(nijenhuis_tensor(L, J, x, x)));
    CHECK_THROWS_AS(nijenhuis_tensor(L, J, unit(3, 0), unit(4, 0)), Error);
    CHECK_THROWS_AS(nijenhuis_tensor(thurston(2), J, unit(6, 0), unit(6, 0)), Error);
}

TEST_CASE("Nijenhuis space and integrability", "[acs]")
{
    const auto L = thurston(1);
    const auto J = standard_h4();
    const auto ln = nijenhuis_space(L, J);
    CHECK(ln == span({unit(4, 0), unit(4, 2)}, 4));
    CHECK_FALSE(is_integrable(L, J));

    CHECK(is_integrable(abelian(4), random_acs(4, 1)));
    CHECK(nijenhuis_space(abelian(6), random_acs(6, 2)).is_zero());
    CHECK(is_integrable(milnor(4), random_acs(4, 3)));
    CHECK(is_integrable(milnor(4), random_acs(4, 4)));

    for (std::size_t n = 1; n <= 4; ++n) {
        const auto Ln = thurston(n);
        const auto Jn = sample_lemma_family(n, 100 + n);
        CHECK(nijenhuis_space(Ln, Jn).dim() == 2 * n);
    }
}

TEST_CASE("IJ-subalgebra predicate", "[acs]")
{
    const auto L = thurston(1);
    const auto J = standard_h4();
    CHECK(is_ij_subalgebra(L, J, Subspace::full(4)));
    CHECK(is_ij_subalgebra(L, J, span({unit(4, 0), unit(4, 2)}, 4)));
    CHECK_FALSE(is_ij_subalgebra(L, J, Subspace::zero(4)));
    // contains ln but is not J-invariant
    CHECK_FALSE(is_ij_subalgebra(L, J, span({unit(4, 0), unit(4, 2), unit(4, 1)}, 4)));
    CHECK_THROWS_AS(is_ij_subalgebra(L, J, Subspace::zero(3)), Error);

    RationalSampler rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const auto A = testing::random_even_algebra(rng);
        CHECK(is_ij_subalgebra(A, random_acs(A.dim(), 50 + trial), Subspace::full(A.dim())));
    }
}

TEST_CASE("IJ-subalgebra edge cases", "[acs]")
{
    const auto L = thurston(1);
    const auto J = standard_h4();
    // J-invariant abelian subalgebra missing ln = <e1, e3>
    CHECK_FALSE(is_ij_subalgebra(L, J, span({unit(4, 1), unit(4, 3)}, 4)));
    // contains ln, not J-invariant
    CHECK_FALSE(is_ij_subalgebra(L, J, span({unit(4, 0), unit(4, 2), unit(4, 1)}, 4)));
    // J0 is integrable on the Milnor algebra, and both J0-invariant coordinate
    // planes close under [x, y] + J[x, Jy]; e.g. x = e4, y = e1 gives -e1 - J e2 = 0.
    const auto M = milnor(4);
    const auto J0 = standard_pairing(4);
    CHECK(is_ij_subalgebra(M, J0, span({unit(4, 0), unit(4, 1)}, 4)));
    CHECK(is_ij_subalgebra(M, J0, span({unit(4, 2), unit(4, 3)}, 4)));
}

TEST_CASE("IJ-subalgebra predicate agrees with a closure oracle", "[acs][property]")
{
    // h is an IJ-subalgebra iff closing ln + h under the generators adds nothing.
    RationalSampler rng(14);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto L = testing::random_even_algebra(rng);
        const auto J = random_acs(L.dim(), 500 + trial);
        std::vector<Vec> gens;
        switch (rng.integer(0, 3)) {
        case 0: gens = minimal_ij_subalgebra(L, J).basis_vectors(); break;
        case 1: gens = type_t_witness(L, J).subspace.basis_vectors(); break;
        default: break;
        }
        const auto extra = rng.integer(0, 2);
        for (long k = 0; k < extra; ++k) {
            const auto v = rng.vector(L.dim());
            gens.push_back(v);
            if (rng.integer(0, 1)) gens.push_back(J.apply(v));
        }
        const auto h = span(gens, L.dim());
        auto seeds = nijenhuis_values(L, J);
        for (auto& v : h.basis_vectors()) seeds.push_back(v);
        const bool oracle = testing::worklist_ij_closure(L, J.matrix(), seeds) == h;
        const bool got = is_ij_subalgebra(L, J, h);
        CHECK(got == oracle);
        (got ? positives : negatives)++;
    }
    CHECK(positives > 0);
    CHECK(negatives > 0);
}

TEST_CASE("minimal IJ-subalgebra examples", "[acs]")
{
    const auto L = thurston(1);
    const auto J = standard_h4();
    CHECK(minimal_ij_subalgebra(L, J) == span({unit(4, 0), unit(4, 2)}, 4));
    CHECK(holomorphic_type(L, J) == 1);

    CHECK(minimal_ij_subalgebra(abelian(6), random_acs(6, 9)).is_zero());
    CHECK(holomorphic_type(abelian(6), random_acs(6, 9)) == 3);
    CHECK(holomorphic_type(milnor(6), random_acs(6, 10)) == 3);

    for (std::size_t n = 1; n <= 3; ++n) {
        const auto Ln = thurston(n);
        const auto Jn = sample_lemma_family(n, 7 * n);
        CHECK(minimal_ij_subalgebra(Ln, Jn).dim() == 2 * n);
        CHECK(holomorphic_type(Ln, Jn) == 1);
    }
    CHECK_THROWS_AS(holomorphic_type(gen_heisenberg(1, 1), AlmostComplexStructure(Mat::identity(3))), Error);
}

TEST_CASE("minimal IJ-subalgebra matches a worklist closure and is least", "[acs][property]")
{
    RationalSampler rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        const auto L = testing::random_even_algebra(rng);
        const auto J = rng.integer(0, 1) ? random_acs(L.dim(), 1000 + trial) : sample_compatible(L.dim(), 2000 + trial);
        const auto minimal = minimal_ij_subalgebra(L, J);
        CHECK(minimal == testing::worklist_ij_closure(L, J.matrix(), nijenhuis_values(L, J)));
        CHECK(is_ij_subalgebra(L, J, minimal));
        CHECK(subspace_leq(nijenhuis_space(L, J), minimal));
        CHECK(minimal.dim() % 2 == 0);
        CHECK(subspace_leq(minimal, Subspace::full(L.dim())));
        const auto witness = type_t_witness(L, J);
        CHECK(witness.is_ij_subalgebra);
        CHECK(subspace_leq(minimal, witness.subspace));
        for (int s = 0; s < 5; ++s) CHECK(minimal_ij_subalgebra(L, J, 77 + s) == minimal);
    }
}

TEST_CASE("Nijenhuis identities", "[acs][property]")
{
    RationalSampler rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto L = testing::random_even_algebra(rng);
        const auto J = random_acs(L.dim(), 300 + trial);
        const auto x = rng.vector(L.dim());
        const auto y = rng.vector(L.dim());
        const auto n_xy = nijenhuis_tensor(L, J, x, y);
        CHECK(n_xy == negate(nijenhuis_tensor(L, J, y, x)));
        CHECK(nijenhuis_tensor(L, J, J.apply(x), y) == negate(J.apply(n_xy)));
        const auto ln = nijenhuis_space(L, J);
        CHECK(ln.dim() % 2 == 0);
        CHECK(image(J.matrix(), ln) == ln);
        CHECK(ln.contains(n_xy));
        if (is_integrable(L, J)) CHECK(holomorphic_type(L, J) == L.dim() / 2);
    }
}

TEST_CASE("type-T witness", "[acs]")
{
    const auto w = type_t_witness(abelian(4), random_acs(4, 5));
    CHECK(w.subspace.is_zero());
    CHECK(w.is_ij_subalgebra);

    for (std::size_t n = 1; n <= 3; ++n) {
        const auto L = thurston(n);
        const auto t = type_t_witness(L, sample_compatible(L.dim(), 40 + n));
        CHECK(t.is_ij_subalgebra);
        CHECK(t.subspace.dim() <= 2 * n);
    }

    const auto W = direct_sum(gen_heisenberg(1, 1), gen_heisenberg(1, 1));
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto J = random_acs(W.dim(), s);
        const auto t = type_t_witness(W, J);
        CHECK(t.is_ij_subalgebra);
        CHECK(t.subspace.dim() <= 4);
        CHECK(holomorphic_type(W, J) >= 1);
    }
}

TEST_CASE("random_acs is seeded and squares to -1", "[acs]")
{
    CHECK(random_acs(6, 42) == random_acs(6, 42));
    CHECK_FALSE(random_acs(6, 42) == random_acs(6, 43));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto J = random_acs(4, s);
        CHECK(J.matrix() * J.matrix() == -Mat::identity(4));
    }
    CHECK_THROWS_AS(random_acs(5, 1), Error);
}
