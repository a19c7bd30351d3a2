#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enhadhm/errors.hpp"
#include "enhadhm/oracle.hpp"

#include <random>

using namespace enhadhm;

namespace {

FpMatrix random_fp(std::mt19937_64& rng, unsigned p, std::size_t rows, std::size_t cols)
{
    FpMatrix m(p, rows, cols);
    for (auto& e : m.entries)
        e = static_cast<unsigned>(rng() % p);
    return m;
}

FpMatrix shift_matrix(unsigned p, std::size_t n)
{
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m.at(i + 1, i) = 1;
    return m;
}

} // namespace

TEST_CASE("subspace counts match the Gaussian binomial totals")
{
    CHECK(enumerate_subspaces(2, 2).size() == 5);
    CHECK(enumerate_subspaces(2, 3).size() == 16);
    CHECK(enumerate_subspaces(2, 4).size() == 67);
    CHECK(enumerate_subspaces(3, 2).size() == 6);
    CHECK(enumerate_subspaces(3, 3).size() == 28);
}

TEST_CASE("enumerated bases are independent and distinct")
{
    for (unsigned p : {2u, 3u}) {
        auto spaces = enumerate_subspaces(p, 3);
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            CHECK(fp_rank(spaces[i]) == spaces[i].cols);
            for (std::size_t j = i + 1; j < spaces.size(); ++j) {
                bool same = spaces[i].cols == spaces[j].cols
                    && fp_rank(fp_hstack(spaces[i], spaces[j])) == spaces[i].cols;
                CHECK(!same);
            }
        }
    }
}

TEST_CASE("budget limits")
{
    CHECK_THROWS_AS(enumerate_subspaces(2, 5), Error);
    CHECK_THROWS_AS(enumerate_subspaces(5, 2), Error);
}

TEST_CASE("invariant subspace enumeration")
{
    SUBCASE("zero operators leave every subspace invariant")
    {
        FpMatrix zero(2, 2, 2);
        FpMatrix no_constraint(2, 2, 0);
        CHECK(enumerate_invariant_subspaces(zero, zero, no_constraint).size() == 5);
    }

    SUBCASE("the shift matrix forces the full space above e1")
    {
        FpMatrix shift = shift_matrix(2, 3);
        FpMatrix e1(2, 3, 1);
        e1.at(0, 0) = 1;
        auto spaces = enumerate_invariant_subspaces(shift, shift, e1);
        REQUIRE(spaces.size() == 1);
        CHECK(fp_rank(spaces.front()) == 3);
    }
}

TEST_CASE("oracle stability on the stated instances")
{
    FpMatrix shift = shift_matrix(2, 3);
    FpMatrix i(2, 3, 1);
    i.at(0, 0) = 1;
    CHECK(oracle_is_stable(shift, shift, i));
    CHECK(fp_krylov_stable(shift, shift, i));

    FpMatrix no_image(2, 3, 1);
    CHECK(!oracle_is_stable(shift, shift, no_image));
}

TEST_CASE("closure agrees with enumeration on random instances")
{
    std::mt19937_64 rng(2024);
    for (unsigned p : {2u, 3u})
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t c = 1 + rng() % 3;
            std::size_t r = 1 + rng() % 2;
            FpMatrix a = random_fp(rng, p, c, c);
            FpMatrix b = random_fp(rng, p, c, c);
            FpMatrix i = random_fp(rng, p, c, r);
            CHECK(oracle_is_stable(a, b, i) == fp_krylov_stable(a, b, i));

            // the closure is the smallest enumerated invariant subspace
            FpMatrix closure = fp_krylov_closure(a, b, i);
            std::size_t closure_rank = fp_rank(closure);
            std::size_t smallest = c + 1;
            for (const FpMatrix& space : enumerate_invariant_subspaces(a, b, i))
                smallest = std::min(smallest, fp_rank(space));
            CHECK(closure_rank == smallest);
        }
}
