#pragma once

#include "enhadhm/quiver.hpp"
#include "enhadhm/subspace.hpp"

#include <optional>
#include <string>

namespace enhadhm {

/* Stability parameter (theta, theta', theta_inf) for a fixed dimension
 * vector. theta_inf is always derived from the linear constraint
 * c*theta + c'*theta' + r*theta_inf = 0 and never set directly. */
struct StabilityParam {
    Rational theta;
    Rational theta_prime;
    Rational theta_inf;
    DimVector dims;
};

StabilityParam make_param(const Rational& theta, const Rational& theta_prime, DimVector dims);

enum class Chamber {
    Delta,    // theta' > 0, theta + theta' < 0
    RhoMinus, // theta' = 0, theta < 0
    RhoPlus,  // theta' > 0, theta = -theta'
    Outside,
};

const char* chamber_name(Chamber c);
Chamber chamber_of(const StabilityParam& p);

/* Smallest subspace containing `seed` and invariant under both a and b.
 * Grows by applying a then b each round; stabilizes in at most dim V
 * rounds and the result does not depend on that order. */
Subspace krylov_closure(const RatMatrix& a, const RatMatrix& b, const Subspace& seed);

/* No proper subspace preserved by A and B contains im(I). Decided by
 * comparing the closure of im(I) with the whole space. */
bool is_adhm_stable(const AdhmRep& a);

/* Stability inside the chamber: F injective and the ADHM part stable.
 * Within the chamber this single criterion equals Theta-stability and
 * Theta-semistability for every parameter, so the verdict does not
 * depend on the particular p beyond the chamber membership check. */
bool is_stable_in_chamber(const EnhancedRep& x, const StabilityParam& p);

/* Subrepresentation of numerical type (r*includes_W, dim S, dim S'). */
struct SubrepWitness {
    bool includes_W = false;
    Subspace S;      // subspace of V
    Subspace Sprime; // subspace of V'

    SubrepWitness() : S(0), Sprime(0) {}
    SubrepWitness(bool w, Subspace s, Subspace sp)
        : includes_W(w), S(std::move(s)), Sprime(std::move(sp)) {}
};

/* Smallest subrepresentation containing the seeds, or std::nullopt when
 * none with includes_W = false exists because J does not vanish on the
 * forced closure. */
std::optional<SubrepWitness> subrep_closure(const EnhancedRep& x, bool includes_W,
                                            const Subspace& seed_v, const Subspace& seed_vprime);

/* theta*dim S + theta'*dim S' (+ theta_inf*r when the witness carries W). */
Rational slope_value(const SubrepWitness& w, const StabilityParam& p);

enum class Wall { Minus, Plus };

/* The strictly semistable representations exhibited on the two boundary
 * rays: X- = (Abar, Abar, Ibar, 0, 0, 0, 0) with Abar the lower shift
 * and Ibar the single-entry matrix, and X+ which additionally carries
 * the shift pair on V' and the bottom-block embedding F. */
EnhancedRep wall_witness_minus(DimVector dims);
EnhancedRep wall_witness_plus(DimVector dims); // requires 1 <= cprime <= c

struct WallReport {
    Wall which{};
    DimVector dims;
    bool residuals_zero = false;
    bool closure_full = false; // Krylov closure of im(I) equals V
    bool f_injective = false;  // checked for the plus witness only
    SubrepWitness destabilizer;
    Rational slope;
    bool destabilizer_valid = false; // proper, nonzero, slope exactly 0
    bool strictly_semistable = false;
};

WallReport verify_wall_witness(Wall which, DimVector dims);
std::string to_json(const WallReport& report, bool pretty = false);

} // namespace enhadhm
