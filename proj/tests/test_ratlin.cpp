#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace holotype;

namespace {
Vec v(std::initializer_list<long> xs)
{
    Vec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
} // namespace

TEST_CASE("rationals stay in lowest terms and serialize as p/q", "[ratlin]")
{
    const Rat r = make_rat(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK(to_string(make_rat(8, 4)) == "2");
    CHECK_THROWS_AS(parse_rat("10/-5"), Error);
}

TEST_CASE("rational parsing", "[ratlin]")
{
    CHECK(parse_rat("4/6") == make_rat(2, 3));
    CHECK(parse_rat("-7") == make_rat(-7));
    CHECK(parse_rat("+3/9") == make_rat(1, 3));
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("1.5"), Error);
    CHECK_THROWS_AS(parse_rat(""), Error);
    CHECK_THROWS_AS(parse_rat("3/"), Error);
    CHECK_THROWS_AS(make_rat(1, 0), Error);
}

TEST_CASE("rref examples", "[ratlin]")
{
    CHECK(rref(Mat{{2, 4}, {1, 2}}) == Mat{{1, 2}, {0, 0}});
    CHECK(rref(Mat::identity(3)) == Mat::identity(3));
    CHECK(rref(Mat{{0, 1}, {1, 0}}) == Mat{{1, 0}, {0, 1}});
}

TEST_CASE("rref is idempotent and preserves the row space", "[ratlin][property]")
{
    RationalSampler rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 5));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 5));
        Mat m = rng.matrix(rows, cols);
        // force some rank deficiency
        if (rows > 1 && rng.integer(0, 1))
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 3 - m(rows - 2, c);
        const Mat r = rref(m);
        CHECK(rref(r) == r);
        for (std::size_t i = 0; i < rows; ++i) CHECK(testing::in_row_space(r, m.row_vector(i)));
        for (std::size_t i = 0; i < rows; ++i) CHECK(testing::in_row_space(m, r.row_vector(i)));
    }
}

TEST_CASE("kernel, determinant and inverse agree", "[ratlin]")
{
    RationalSampler rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 5));
        Mat m = rng.matrix(n, n + 1);
        for (const auto& k : kernel(m)) CHECK(is_zero_vector(m * k));
        CHECK(kernel(m).size() + rank(m) == n + 1);

        Mat sq = rng.matrix(n, n);
        if (auto inv = inverse(sq)) {
            CHECK(sq * *inv == Mat::identity(n));
            CHECK(determinant(sq) * determinant(*inv) == 1);
        } else {
            CHECK(determinant(sq) == 0);
        }
    }
    CHECK_FALSE(inverse(Mat{{1, 2}, {2, 4}}).has_value());
    CHECK(determinant(Mat{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("span examples", "[ratlin]")
{
    CHECK(span({}, 4).dim() == 0);

    const auto s = span({unit(4, 0), unit(4, 2), add(unit(4, 0), unit(4, 2))}, 4);
    CHECK(s.dim() == 2);
    CHECK(s.basis() == Mat{{1, 0, 0, 0}, {0, 0, 1, 0}});

    // e_3, e_1 in h_4 coordinates
    CHECK(span({unit(4, 2), unit(4, 0)}, 4) == s);

    CHECK(span({v({0, 0, 0})}, 3).is_zero());
    CHECK_THROWS_AS(span({v({1, 0}), v({1, 0, 0})}, 3), Error);
}

TEST_CASE("subspace sum, containment and order", "[ratlin]")
{
    const auto e1 = span({unit(3, 0)}, 3);
    const auto e2 = span({unit(3, 1)}, 3);
    CHECK(subspace_sum(e1, e2) == span({unit(3, 0), unit(3, 1)}, 3));
    CHECK_FALSE(subspace_contains(span({v({1, 1, 0})}, 3), unit(3, 0)));
    CHECK(subspace_contains(span({v({1, 1, 0})}, 3), v({-2, -2, 0})));
    CHECK(subspace_leq(Subspace::zero(3), e1));
    CHECK(subspace_leq(Subspace::zero(3), Subspace::zero(3)));
    CHECK(subspace_leq(e1, Subspace::full(3)));
    CHECK_FALSE(subspace_leq(e1, e2));
    CHECK_THROWS_AS(subspace_sum(e1, Subspace::zero(4)), Error);
    CHECK_THROWS_AS(subspace_leq(e1, Subspace::zero(4)), Error);
    CHECK_THROWS_AS(e1.contains(unit(4, 0)), Error);
}

TEST_CASE("span is insensitive to input order", "[ratlin][property]")
{
    RationalSampler rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.integer(1, 6));
        std::vector<Vec> vs;
        const auto count = rng.integer(0, 6);
        for (long i = 0; i < count; ++i) vs.push_back(rng.vector(dim));
        if (!vs.empty()) vs.push_back(add(vs.front(), vs.back()));
        const auto reference = span(vs, dim);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            rng.shuffle(vs);
            CHECK(span(vs, dim) == reference);
        }
    }
}

TEST_CASE("Grassmann identity for sum and kernel-method intersection", "[ratlin][property]")
{
    RationalSampler rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 6));
        auto draw = [&] {
            std::vector<Vec> vs;
            const auto k = rng.integer(0, static_cast<long>(n));
            for (long i = 0; i < k; ++i) vs.push_back(rng.vector(n));
            return span(vs, n);
        };
        auto a = draw();
        auto b = draw();
        if (rng.integer(0, 2) == 0) b = subspace_sum(b, span({a.is_zero() ? rng.vector(n) : a.basis_vectors().front()}, n));
        const auto s = subspace_sum(a, b);
        const auto meet = subspace_intersection(a, b);
        CHECK(s.dim() + meet.dim() == a.dim() + b.dim());
        CHECK(subspace_leq(meet, a));
        CHECK(subspace_leq(meet, b));
        CHECK(subspace_leq(a, s));
        CHECK(subspace_leq(b, s));
    }
}

TEST_CASE("Cayley transform", "[ratlin]")
{
    CHECK(cayley_orthogonal(Mat(3, 3)) == Mat::identity(3));

    // (I - S)(I + S)^-1 with S = [[0, 1], [-1, 0]] is the quarter turn [[0, -1], [1, 0]].
    const Mat s{{0, 1}, {-1, 0}};
    const Mat q = cayley_orthogonal(s);
    CHECK(q == testing::cayley_2x2_closed_form(Rat(1)));
    CHECK(q == Mat{{0, -1}, {1, 0}});
    CHECK(q.transpose() * q == Mat::identity(2));

    for (const auto& t : {make_rat(1, 2), make_rat(-7, 3), make_rat(9)}) {
        const Mat st{{0, t}, {-t, 0}};
        CHECK(cayley_orthogonal(st) == testing::cayley_2x2_closed_form(t));
    }

    CHECK_THROWS_AS(cayley_orthogonal(Mat{{1, 0}, {0, 0}}), Error);
    CHECK_THROWS_AS(cayley_orthogonal(Mat{{0, 1}, {1, 0}}), Error);
}

TEST_CASE("Cayley output is orthogonal for random antisymmetric input", "[ratlin][property]")
{
    RationalSampler rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 6));
        const Mat q = cayley_orthogonal(rng.antisymmetric(n));
        CHECK(q.transpose() * q == Mat::identity(n));
    }
}

TEST_CASE("sampler is deterministic and within range", "[ratlin]")
{
    RationalSampler a(99), b(99);
    for (int i = 0; i < 200; ++i) {
        const Rat x = a.rational();
        CHECK(x == b.rational());
        CHECK(x.get_den() <= 9);
        CHECK(abs(x.get_num()) <= 9);
    }
    CHECK(sample_stream_seed(1, 2) == sample_stream_seed(1, 2));
    CHECK(sample_stream_seed(1, 2) != sample_stream_seed(1, 3));
    CHECK(sample_stream_seed(1, 2) != sample_stream_seed(2, 2));
}
