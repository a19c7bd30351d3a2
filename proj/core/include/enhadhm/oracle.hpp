#pragma once

#include <cstddef>
#include <vector>

namespace enhadhm {

/* Matrix over F_p for a small prime p; test-support substrate for
 * brute-force validation of the closure-based stability algorithms.
 * Budget: modulus in {2, 3} and ambient dimension at most 4. */
struct FpMatrix {
    unsigned modulus = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<unsigned> entries; // row-major, reduced mod modulus

    FpMatrix() = default;
    FpMatrix(unsigned p, std::size_t r, std::size_t c)
        : modulus(p), rows(r), cols(c), entries(r * c, 0) {}

    unsigned at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    unsigned& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }

    static FpMatrix identity(unsigned p, std::size_t n);
    bool operator==(const FpMatrix&) const = default;
};

FpMatrix fp_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix fp_hstack(const FpMatrix& a, const FpMatrix& b);
std::size_t fp_rank(const FpMatrix& m);

/* All subspaces of F_p^n, each as a matrix whose columns form a basis
 * (the zero subspace is the n x 0 matrix). Count matches the Gaussian
 * binomial totals. */
std::vector<FpMatrix> enumerate_subspaces(unsigned p, std::size_t n);

/* Exhaustive list of the subspaces invariant under both a and b that
 * contain the column span of `contains`. */
std::vector<FpMatrix> enumerate_invariant_subspaces(const FpMatrix& a, const FpMatrix& b,
                                                    const FpMatrix& contains);

/* Stability by enumeration: the only invariant subspace containing
 * im(I) is the whole space. */
bool oracle_is_stable(const FpMatrix& a, const FpMatrix& b, const FpMatrix& i);

/* Same closure algorithm as over Q, run over F_p; the independent
 * enumeration above must agree with it on every in-budget instance. */
FpMatrix fp_krylov_closure(const FpMatrix& a, const FpMatrix& b, const FpMatrix& seed);
bool fp_krylov_stable(const FpMatrix& a, const FpMatrix& b, const FpMatrix& i);

} // namespace enhadhm
