#pragma once

#include "enhadhm/complex.hpp"
#include "enhadhm/quiver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace enhadhm {

/* Block-triangular ansatz over a base ADHM datum of type (r, c - c'):
 *
 *   A = (A'  At)    B = (B'  Bt)    I = (It )   J = (0  J'')   F = (1_{c'})
 *       (0   A'')       (0   B'')       (I'')                      (  0   )
 *
 * The assembled tuple satisfies all five relations exactly when
 * [A',B'] = 0 together with A'Bt + At B'' - B'At - Bt A'' + It J'' = 0. */
struct LiftAnsatz {
    AdhmRep base;      // (A'', B'', I'', J'') of type (r, c - c')
    RatMatrix Aprime;  // c' x c', commuting with Bprime
    RatMatrix Bprime;  // c' x c'
    RatMatrix Atilde;  // c' x (c - c')
    RatMatrix Btilde;  // c' x (c - c')
    RatMatrix Itilde;  // c' x r

    std::size_t cprime() const { return Aprime.rows(); }
    std::size_t c() const { return cprime() + base.c; }
    void validate() const;
};

EnhancedRep assemble_lift(const LiftAnsatz& ansatz);

/* The second lifting equation as a linear system in (At, Bt, It),
 * vectorized block by block, column-major: the standard encoding used
 * for the kernel basis below. */
struct LiftSolveResult {
    LiftAnsatz particular;  // the zero solution, always valid
    std::size_t kernel_dim; // dimension of the solution space
    RatMatrix kernel;       // columns: basis of the vectorized solution space
};

LiftSolveResult lift_solve(const AdhmRep& base, const RatMatrix& aprime, const RatMatrix& bprime);

/* Rebuild an ansatz from a vectorized (At, Bt, It) solution column. */
LiftAnsatz ansatz_from_vector(const AdhmRep& base, const RatMatrix& aprime,
                              const RatMatrix& bprime, const RatMatrix& solution);

/* ADHM datum induced on V'' = V / im(F). The complement of im(F) is the
 * lexicographically first set of coordinate vectors completing a basis,
 * so the output is reproducible; any other complement gives a
 * gauge-equivalent datum. Requires zero residuals and injective F. */
AdhmRep quotient_adhm(const EnhancedRep& x);

struct VandermondeParams {
    std::size_t r = 1;
    std::size_t c = 1;
    std::vector<Rational> lambdas; // c distinct nonzero values

    void validate() const;
};

/* A = B = diag(lambda), I = ones in the first column, J = 0, F = e_1,
 * A' = B' = (lambda_1): stable and unobstructed for every admissible
 * choice of parameters. */
EnhancedRep vandermonde_rep(const VandermondeParams& params);

/* Deterministic generator of representations with zero residuals that
 * are verified stable in the chamber: the plus wall witness, the
 * Vandermonde family when c' = 1, and randomized block-triangular lifts
 * over random commuting data, optionally gauge twisted. May return
 * fewer than `attempts` entries. */
std::vector<EnhancedRep> sample_stable(DimVector dims, std::uint64_t seed, std::size_t attempts);

struct ObstructedHit {
    EnhancedRep rep;
    CohomologyReport coh;
};

/* Random search for a stable representation with nonvanishing second
 * cohomology. Best effort; std::nullopt when none is found within the
 * attempt budget. */
std::optional<ObstructedHit> search_obstructed(DimVector dims, std::uint64_t seed,
                                               std::size_t attempts);

/* JSON-lines corpus: a header line {"dims":.., "seed":.., "generator":..}
 * followed by one representation per line. */
void write_corpus(std::ostream& out, DimVector dims, std::uint64_t seed,
                  const std::vector<EnhancedRep>& reps);
std::vector<EnhancedRep> read_corpus(std::istream& in);

} // namespace enhadhm
