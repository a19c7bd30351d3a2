#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enhadhm/errors.hpp"
#include "enhadhm/matrix.hpp"
#include "enhadhm/subspace.hpp"

#include <random>

using namespace enhadhm;

namespace {

/* Independent rank oracle: largest size of a square submatrix with
 * nonzero determinant, determinants by Laplace expansion. Exponential,
 * fine for the tiny instances used here. */
Rational minor_det(const RatMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols)
{
    if (rows.empty())
        return 1;
    Rational det = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m.at(rows[0], cols[k]) == 0)
            continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k)
                sub_cols.push_back(cols[j]);
        Rational cofactor = minor_det(m, sub_rows, sub_cols);
        det += (k % 2 == 0 ? 1 : -1) * m.at(rows[0], cols[k]) * cofactor;
    }
    return det;
}

std::size_t naive_rank(const RatMatrix& m)
{
    std::size_t best = 0;
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<std::size_t> rows(size), cols(size);
        bool found = false;
        // iterate over all row/column subsets of the given size
        std::vector<std::size_t> rsel(size);
        for (std::size_t i = 0; i < size; ++i)
            rsel[i] = i;
        for (;;) {
            std::vector<std::size_t> csel(size);
            for (std::size_t i = 0; i < size; ++i)
                csel[i] = i;
            for (;;) {
                if (minor_det(m, rsel, csel) != 0) {
                    found = true;
                    break;
                }
                std::size_t k = size;
                while (k > 0 && csel[k - 1] == m.cols() - size + k - 1)
                    --k;
                if (k == 0)
                    break;
                ++csel[k - 1];
                for (std::size_t i = k; i < size; ++i)
                    csel[i] = csel[i - 1] + 1;
            }
            if (found)
                break;
            std::size_t k = size;
            while (k > 0 && rsel[k - 1] == m.rows() - size + k - 1)
                --k;
            if (k == 0)
                break;
            ++rsel[k - 1];
            for (std::size_t i = k; i < size; ++i)
                rsel[i] = rsel[i - 1] + 1;
        }
        if (found)
            best = size;
        else
            break;
    }
    return best;
}

RatMatrix random_small(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<long>(rng() % 11) - 5;
    return m;
}

} // namespace

TEST_CASE("rational parsing and formatting")
{
    CHECK(format_rational(parse_rational("3/6")) == "1/2");
    CHECK(format_rational(parse_rational("-4/2")) == "-2");
    CHECK(format_rational(parse_rational("7")) == "7");
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("a/b"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
}

TEST_CASE("rank on the stated instances")
{
    CHECK(rank(RatMatrix(3, 3)) == 0);
    CHECK(rank(RatMatrix::identity(4)) == 4);
    // Vandermonde with nodes 1, 2, 3 is invertible.
    RatMatrix v = RatMatrix::from_ints({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}});
    CHECK(rank(v) == 3);
    CHECK(rank(RatMatrix(0, 0)) == 0);
    CHECK(rank(RatMatrix(3, 0)) == 0);
}

TEST_CASE("kernel on the stated instances")
{
    CHECK(kernel(RatMatrix::identity(3)).dim() == 0);
    CHECK(kernel(RatMatrix(2, 4)) == Subspace::full(4));

    RatMatrix m = RatMatrix::from_ints({{1, 1}, {1, 1}});
    Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span_of(RatMatrix::from_ints({{1}, {-1}})));
}

TEST_CASE("solve_affine on the stated instances")
{
    RatMatrix b = RatMatrix::from_ints({{2}, {-3}});
    auto sol = solve_affine(RatMatrix::identity(2), b);
    REQUIRE(sol);
    CHECK(sol->particular == b);
    CHECK(sol->kernel.dim() == 0);

    CHECK(!solve_affine(RatMatrix(2, 2), b));

    RatMatrix m = RatMatrix::from_ints({{1, 2}, {2, 4}});
    RatMatrix rhs = RatMatrix::from_ints({{1}, {2}});
    auto sol2 = solve_affine(m, rhs);
    REQUIRE(sol2);
    CHECK(m * sol2->particular == rhs);
    CHECK(sol2->kernel == Subspace::span_of(RatMatrix::from_ints({{-2}, {1}})));
}

TEST_CASE("subspace algebra on the stated instances")
{
    Subspace u = Subspace::coordinate_span(4, {0, 1});
    Subspace v = Subspace::coordinate_span(4, {2, 3});
    CHECK(sum_spaces(u, u) == u);
    CHECK(intersect_spaces(u, u) == u);
    CHECK(sum_spaces(u, v).dim() == 4);
    CHECK(intersect_spaces(u, v).dim() == 0);

    // preimage of span(e1) under the first Vandermonde-family F
    RatMatrix f(4, 1);
    f.at(0, 0) = 1;
    Subspace target = Subspace::coordinate_span(4, {0});
    CHECK(preimage(f, target) == Subspace::full(1));

    CHECK_THROWS_AS(sum_spaces(u, Subspace::full(3)), Error);
}

TEST_CASE("canonical form identifies equal subspaces")
{
    RatMatrix g1 = RatMatrix::from_ints({{1, 3}, {2, 4}, {0, 2}});
    RatMatrix g2 = RatMatrix::from_ints({{4, -2}, {6, -2}, {2, -2}});
    // same column space, different generators
    CHECK(Subspace::span_of(g1) == Subspace::span_of(g2));
    CHECK(Subspace::span_of(hstack(g1, g1)) == Subspace::span_of(g1));
}

TEST_CASE("rank properties against the minor-expansion oracle")
{
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t rows = 1 + rng() % 5;
        std::size_t cols = 1 + rng() % 5;
        RatMatrix m = random_small(rng, rows, cols);
        std::size_t r = rank(m);
        CHECK(r == naive_rank(m));
        CHECK(rank(m.transpose()) == r);
        CHECK(r + kernel(m).dim() == cols);
    }
}

TEST_CASE("rank-nullity and solutions on random instances")
{
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 80; ++iter) {
        std::size_t rows = 1 + rng() % 8;
        std::size_t cols = 1 + rng() % 8;
        RatMatrix m = random_small(rng, rows, cols);
        CHECK(rank(m) + kernel(m).dim() == cols);

        RatMatrix x = random_small(rng, cols, 1);
        auto sol = solve_affine(m, m * x); // consistent by construction
        REQUIRE(sol);
        CHECK(m * sol->particular == m * x);
        const RatMatrix& kb = sol->kernel.basis();
        CHECK((m * kb).is_zero());
    }
}

TEST_CASE("dimension formula for sums and intersections")
{
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t amb = 1 + rng() % 6;
        Subspace u = Subspace::span_of(random_small(rng, amb, 1 + rng() % amb));
        Subspace v = Subspace::span_of(random_small(rng, amb, 1 + rng() % amb));
        Subspace s = sum_spaces(u, v);
        Subspace i = intersect_spaces(u, v);
        CHECK(s.dim() + i.dim() == u.dim() + v.dim());
        CHECK(s.contains(u));
        CHECK(u.contains(i));
        // preimage then image lands inside the target
        RatMatrix m = random_small(rng, amb, amb);
        Subspace pre = preimage(m, u);
        CHECK(u.contains(image_space(m, pre)));
    }
}

TEST_CASE("inverse round trip and singular detection")
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 1 + rng() % 5;
        RatMatrix m = random_small(rng, n, n);
        auto inv = inverse(m);
        if (rank(m) == n) {
            REQUIRE(inv);
            CHECK(m * *inv == RatMatrix::identity(n));
        } else {
            CHECK(!inv);
        }
    }
}

TEST_CASE("matrix json round trip and errors")
{
    std::mt19937_64 rng(5);
    RatMatrix m = random_small(rng, 3, 2);
    m.at(0, 0) = parse_rational("7/3");
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    CHECK_THROWS_AS(matrix_from_json("{"), Error);
    CHECK_THROWS_AS(matrix_from_json("{\"rows\":1,\"cols\":1,\"entries\":[[\"1/0\"]]}"), Error);
    CHECK_THROWS_AS(matrix_from_json("{\"rows\":2,\"cols\":1,\"entries\":[[\"1\"]]}"), Error);
    CHECK_THROWS_AS(matrix_from_json("{\"rows\":1,\"cols\":1}"), Error);
}
