#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enhadhm/constructions.hpp"
#include "enhadhm/deformation.hpp"
#include "enhadhm/errors.hpp"
#include "enhadhm/stability.hpp"

#include <sstream>

using namespace enhadhm;

namespace {

AdhmRep diag_base(std::vector<long> diag, std::size_t r = 1)
{
    AdhmRep base = AdhmRep::zero(r, diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        base.A.at(i, i) = diag[i];
        base.B.at(i, i) = diag[i];
        base.I.at(i, 0) = 1;
    }
    return base;
}

} // namespace

TEST_CASE("quotient of the Vandermonde representation")
{
    EnhancedRep x = vandermonde_rep({1, 2, {1, 2}});
    AdhmRep q = quotient_adhm(x);
    CHECK(q.c == 1);
    CHECK(q.A == RatMatrix::from_ints({{2}}));
    CHECK(q.B == RatMatrix::from_ints({{2}}));
    CHECK(q.I == RatMatrix::from_ints({{1}}));
    CHECK(q.J.is_zero());
    CHECK(q.equation_residual().is_zero());
    CHECK(is_adhm_stable(q));
}

TEST_CASE("quotient errors")
{
    EnhancedRep f_zero = wall_witness_minus({1, 2, 1});
    try {
        quotient_adhm(f_zero);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::quotient_undefined);
    }

    EnhancedRep bad = EnhancedRep::zero({1, 1, 1});
    bad.I.at(0, 0) = 1;
    bad.J.at(0, 0) = 1;
    try {
        quotient_adhm(bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_representation);
    }
}

TEST_CASE("quotient with invertible F is the empty datum")
{
    EnhancedRep x = EnhancedRep::zero({2, 2, 2});
    x.F = RatMatrix::identity(2);
    AdhmRep q = quotient_adhm(x);
    CHECK(q.c == 0);
    CHECK(q.r == 2);
    CHECK(q.equation_residual().is_zero());
    CHECK(is_adhm_stable(q));
}

TEST_CASE("assemble_lift")
{
    AdhmRep base = diag_base({2, 3});

    SUBCASE("zero tilde blocks always satisfy the relations")
    {
        LiftAnsatz ansatz{base, RatMatrix(1, 1), RatMatrix(1, 1), RatMatrix(1, 2),
                          RatMatrix(1, 2), RatMatrix(1, 1)};
        EnhancedRep x = assemble_lift(ansatz);
        CHECK(satisfies_relations(x));
        CHECK(x.dims.c == 3);
        CHECK(x.F == RatMatrix::from_ints({{1}, {0}, {0}}));
    }

    SUBCASE("equal tilde rows over an equal-diagonal base satisfy the equation")
    {
        LiftAnsatz ansatz{base, RatMatrix(1, 1), RatMatrix(1, 1),
                          RatMatrix::from_ints({{1, 2}}), RatMatrix::from_ints({{1, 2}}),
                          RatMatrix(1, 1)};
        CHECK(satisfies_relations(assemble_lift(ansatz)));
    }

    SUBCASE("a violated equation shows up in the upper-right block of R1")
    {
        LiftAnsatz ansatz{base, RatMatrix(1, 1), RatMatrix(1, 1),
                          RatMatrix::from_ints({{1, 0}}), RatMatrix(1, 2), RatMatrix(1, 1)};
        EnhancedRep x = assemble_lift(ansatz);
        RelationResidual res = relation_residuals(x);
        CHECK(!res.r1.is_zero());
        CHECK(res.r1.block(0, 1, 1, 2) == RatMatrix::from_ints({{2, 0}}));
        CHECK(res.r1.block(1, 0, 2, 3).is_zero());
        CHECK(res.r2.is_zero());
        CHECK(res.r3.is_zero());
    }
}

TEST_CASE("lift_solve")
{
    SUBCASE("zero primed pair over a zero base leaves everything free")
    {
        AdhmRep base = AdhmRep::zero(1, 2);
        LiftSolveResult solved = lift_solve(base, RatMatrix(1, 1), RatMatrix(1, 1));
        CHECK(solved.kernel_dim == 5); // 2 + 2 + 1 unknowns, rank 0
        CHECK(satisfies_relations(assemble_lift(solved.particular)));
    }

    SUBCASE("diagonal base with identity primed pair: rank from the hand-derived system")
    {
        // Equation reduces to (a1 - b1, 2(a2 - b2)) = 0: rank 2 in 5 unknowns.
        AdhmRep base = diag_base({2, 3});
        LiftSolveResult solved = lift_solve(base, RatMatrix::identity(1), RatMatrix::identity(1));
        CHECK(solved.kernel_dim == 3);

        // every kernel column assembles to a representation
        for (std::size_t j = 0; j < solved.kernel_dim; ++j) {
            LiftAnsatz ansatz = ansatz_from_vector(base, RatMatrix::identity(1),
                                                   RatMatrix::identity(1), solved.kernel.col(j));
            CHECK(satisfies_relations(assemble_lift(ansatz)));
        }
    }

    SUBCASE("noncommuting primed pair is rejected")
    {
        AdhmRep base = AdhmRep::zero(1, 1);
        RatMatrix a = RatMatrix::from_ints({{0, 1}, {0, 0}});
        RatMatrix b = RatMatrix::from_ints({{0, 0}, {1, 0}});
        CHECK_THROWS_AS(lift_solve(base, a, b), Error);
    }
}

TEST_CASE("quotient recovers the base of a lift")
{
    AdhmRep base = diag_base({2, 3}, 2);
    base.I.at(0, 1) = 1;
    LiftSolveResult solved = lift_solve(base, RatMatrix(1, 1), RatMatrix(1, 1));
    RatMatrix coeffs(solved.kernel_dim, 1);
    for (std::size_t i = 0; i < solved.kernel_dim; ++i)
        coeffs.at(i, 0) = static_cast<long>(i) - 1;
    EnhancedRep x = assemble_lift(
        ansatz_from_vector(base, RatMatrix(1, 1), RatMatrix(1, 1), solved.kernel * coeffs));
    REQUIRE(satisfies_relations(x));
    CHECK(quotient_adhm(x) == base);
}

TEST_CASE("vandermonde representation")
{
    EnhancedRep x = vandermonde_rep({1, 2, {1, 2}});
    CHECK(x.A == RatMatrix::from_ints({{1, 0}, {0, 2}}));
    CHECK(x.B == x.A);
    CHECK(x.I == RatMatrix::from_ints({{1}, {1}}));
    CHECK(x.F == RatMatrix::from_ints({{1}, {0}}));
    CHECK(x.Aprime == RatMatrix::from_ints({{1}}));
    CHECK(x.J.is_zero());

    CHECK_THROWS_AS(vandermonde_rep({1, 2, {1, 1}}), Error);
    CHECK_THROWS_AS(vandermonde_rep({1, 2, {0, 1}}), Error);
    CHECK_THROWS_AS(vandermonde_rep({1, 3, {1, 2}}), Error);

    EnhancedRep wide = vandermonde_rep({3, 2, {1, 2}});
    CHECK(wide.I == RatMatrix::from_ints({{1, 0, 0}, {1, 0, 0}}));
}

TEST_CASE("sample_stable returns verified stable representations")
{
    SUBCASE("(1,3,1) seed 0")
    {
        auto samples = sample_stable({1, 3, 1}, 0, 12);
        CHECK(samples.size() > 2);
        StabilityParam p = make_param(-2, 1, {1, 3, 1});
        for (const EnhancedRep& x : samples) {
            CHECK(satisfies_relations(x));
            CHECK(is_stable_in_chamber(x, p));
        }
    }

    SUBCASE("(2,3,2) seed 0 is nonempty")
    {
        auto samples = sample_stable({2, 3, 2}, 0, 8);
        CHECK(!samples.empty());
        for (const EnhancedRep& x : samples)
            CHECK(is_stable_in_chamber(x, make_param(-2, 1, {2, 3, 2})));
    }

    SUBCASE("(1,1,1) contains the Vandermonde member and the plus witness")
    {
        auto samples = sample_stable({1, 1, 1}, 0, 4);
        EnhancedRep vdm = vandermonde_rep({1, 1, {1}});
        EnhancedRep plus = wall_witness_plus({1, 1, 1});
        bool has_vdm = false;
        bool has_plus = false;
        for (const EnhancedRep& x : samples) {
            has_vdm = has_vdm || x == vdm;
            has_plus = has_plus || x == plus;
        }
        CHECK(has_vdm);
        CHECK(has_plus);
    }

    SUBCASE("deterministic in the seed")
    {
        auto a = sample_stable({1, 3, 2}, 5, 6);
        auto b = sample_stable({1, 3, 2}, 5, 6);
        CHECK(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == b[i]);
    }

    SUBCASE("cprime above c yields nothing")
    {
        CHECK(sample_stable({1, 2, 3}, 0, 5).empty());
    }
}

TEST_CASE("an explicit obstructed representation at (1,3,2)")
{
    // Lift of the length-one base by the square of the maximal ideal:
    // A, B act on V = <x, y, 1> as multiplication by x and y on the fat
    // point; stable, and its second cohomology does not vanish.
    AdhmRep base = AdhmRep::zero(1, 1);
    base.I.at(0, 0) = 1;
    LiftAnsatz ansatz{base, RatMatrix(2, 2), RatMatrix(2, 2),
                      RatMatrix::from_ints({{1}, {0}}), RatMatrix::from_ints({{0}, {1}}),
                      RatMatrix(2, 1)};
    EnhancedRep x = assemble_lift(ansatz);
    REQUIRE(satisfies_relations(x));
    CHECK(is_stable_in_chamber(x, make_param(-2, 1, {1, 3, 2})));

    CohomologyReport coh = cohomology(deformation_complex(x));
    CHECK(coh.h == std::vector<std::size_t>{0, 8, 4, 0});
    CHECK(coh.h[1] - coh.h[2] == 4); // euler pairing with the expected dimension

    // h1 jumps relative to the generic stratum, where h = (0, 6, 2, 0).
    auto generic = sample_stable({1, 3, 2}, 0, 6);
    REQUIRE(!generic.empty());
    CohomologyReport generic_coh = cohomology(deformation_complex(generic.back()));
    CHECK(generic_coh.h[1] < coh.h[1]);
}

TEST_CASE("search_obstructed")
{
    SUBCASE("finds an obstructed point at (1,3,2)")
    {
        auto hit = search_obstructed({1, 3, 2}, 0, 200);
        REQUIRE(hit);
        CHECK(hit->coh.h[2] > 0);
        CHECK(is_stable_in_chamber(hit->rep, make_param(-2, 1, {1, 3, 2})));
    }

    SUBCASE("finds nothing at the smooth case (1,2,1)")
    {
        CHECK(!search_obstructed({1, 2, 1}, 0, 60));
    }

    SUBCASE("zero attempts yield nothing")
    {
        CHECK(!search_obstructed({1, 3, 2}, 0, 0));
    }
}

TEST_CASE("corpus files round trip")
{
    DimVector dims{1, 3, 1};
    auto reps = sample_stable(dims, 1, 5);
    std::ostringstream out;
    write_corpus(out, dims, 1, reps);

    std::istringstream in(out.str());
    auto loaded = read_corpus(in);
    REQUIRE(loaded.size() == reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        CHECK(loaded[i] == reps[i]);

    std::istringstream empty("");
    CHECK_THROWS_AS(read_corpus(empty), Error);
}
