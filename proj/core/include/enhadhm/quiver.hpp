#pragma once

#include "enhadhm/matrix.hpp"

#include <string>

namespace enhadhm {

/* Dimension vector (r, c, c') of an enhanced representation. cprime = 0
 * is admitted as the degenerate case in which an ordinary ADHM datum is
 * embedded; the stability and deformation operations require cprime >= 1. */
struct DimVector {
    std::size_t r = 1;
    std::size_t c = 1;
    std::size_t cprime = 0;

    void validate() const;
    bool operator==(const DimVector&) const = default;
};

/* The tuple (W, V, V', A, B, I, J, A', B', F) in fixed standard bases:
 * W = Q^r, V = Q^c, V' = Q^{c'}. The framing isomorphism is absorbed
 * into the choice of basis of W and is not stored. */
struct EnhancedRep {
    DimVector dims;
    RatMatrix A;      // c x c
    RatMatrix B;      // c x c
    RatMatrix I;      // c x r
    RatMatrix J;      // r x c
    RatMatrix Aprime; // c' x c'
    RatMatrix Bprime; // c' x c'
    RatMatrix F;      // c x c'

    static EnhancedRep zero(DimVector dims);
    void validate_shapes() const;
    bool operator==(const EnhancedRep&) const = default;
};

/* Ordinary ADHM datum (W, V, A, B, I, J) of type (r, c). c = 0 is valid
 * (the empty datum), as produced by the quotient when F is invertible. */
struct AdhmRep {
    std::size_t r = 1;
    std::size_t c = 0;
    RatMatrix A; // c x c
    RatMatrix B; // c x c
    RatMatrix I; // c x r
    RatMatrix J; // r x c

    static AdhmRep zero(std::size_t r, std::size_t c);
    void validate_shapes() const;
    /* [A,B] + IJ, the ADHM equation residual. */
    RatMatrix equation_residual() const;
    bool operator==(const AdhmRep&) const = default;
};

/* The five relation residuals; X is a representation of the quiver with
 * relations exactly when all five matrices vanish. Returned as matrices
 * rather than booleans so failures can be located. */
struct RelationResidual {
    RatMatrix r1; // [A,B] + IJ          (c x c)
    RatMatrix r2; // AF - FA'            (c x c')
    RatMatrix r3; // BF - FB'            (c x c')
    RatMatrix r4; // JF                  (r x c')
    RatMatrix r5; // [A',B']             (c' x c')

    bool all_zero() const;
};

RelationResidual relation_residuals(const EnhancedRep& x);
bool satisfies_relations(const EnhancedRep& x);

/* Basis change (h, h') of (V, V'):
 * (A,B,A',B',F,I,J) -> (hAh^-1, hBh^-1, h'A'h'^-1, h'B'h'^-1, hFh'^-1, hI, Jh^-1).
 * Throws Errc::singular_gauge when h or hprime is not invertible. */
EnhancedRep gauge_transform(const EnhancedRep& x, const RatMatrix& h, const RatMatrix& hprime);

AdhmRep adhm_part(const EnhancedRep& x);
EnhancedRep embed_adhm(const AdhmRep& a); // cprime = 0

std::string to_json(const EnhancedRep& x, bool pretty = false);
EnhancedRep rep_from_json(const std::string& text);

std::string to_json(const AdhmRep& a, bool pretty = false);
AdhmRep adhm_from_json(const std::string& text);

} // namespace enhadhm
