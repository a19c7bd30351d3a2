#include "enhadhm/stability.hpp"

#include "enhadhm/errors.hpp"
#include "json_detail.hpp"

namespace enhadhm {

StabilityParam make_param(const Rational& theta, const Rational& theta_prime, DimVector dims)
{
    dims.validate();
    StabilityParam p;
    p.theta = theta;
    p.theta_prime = theta_prime;
    p.dims = dims;
    p.theta_inf = -(Rational(dims.c) * theta + Rational(dims.cprime) * theta_prime) / Rational(dims.r);
    return p;
}

const char* chamber_name(Chamber c)
{
    switch (c) {
    case Chamber::Delta: return "Delta";
    case Chamber::RhoMinus: return "rho-minus";
    case Chamber::RhoPlus: return "rho-plus";
    case Chamber::Outside: return "outside";
    }
    return "unknown";
}

Chamber chamber_of(const StabilityParam& p)
{
    if (p.theta_prime > 0 && p.theta + p.theta_prime < 0)
        return Chamber::Delta;
    if (p.theta_prime == 0 && p.theta < 0)
        return Chamber::RhoMinus;
    if (p.theta_prime > 0 && p.theta == -p.theta_prime)
        return Chamber::RhoPlus;
    return Chamber::Outside;
}

Subspace krylov_closure(const RatMatrix& a, const RatMatrix& b, const Subspace& seed)
{
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        fail(Errc::shape_mismatch, "closure requires square operators of equal size");
    if (seed.ambient_dim() != a.rows())
        fail(Errc::shape_mismatch, "seed ambient dimension mismatch");

    Subspace s = seed;
    for (;;) {
        Subspace next = sum_spaces(s, image_space(a, s));
        next = sum_spaces(next, image_space(b, next));
        if (next.dim() == s.dim())
            return s;
        s = std::move(next);
    }
}

bool is_adhm_stable(const AdhmRep& a)
{
    a.validate_shapes();
    return krylov_closure(a.A, a.B, column_space(a.I)).is_full();
}

bool is_stable_in_chamber(const EnhancedRep& x, const StabilityParam& p)
{
    x.validate_shapes();
    if (x.dims.cprime < 1)
        fail(Errc::cprime_required, "chamber criterion requires cprime >= 1");
    if (!(x.dims == p.dims))
        fail(Errc::shape_mismatch, "parameter dimension vector does not match representation");
    if (chamber_of(p) != Chamber::Delta)
        fail(Errc::outside_chamber, "criterion only valid in chamber Delta");
    if (!satisfies_relations(x))
        fail(Errc::not_representation, "not a representation: relation residuals are nonzero");

    if (rank(x.F) != x.dims.cprime)
        return false; // (S.1) fails
    return is_adhm_stable(adhm_part(x)); // (S.2)
}

std::optional<SubrepWitness> subrep_closure(const EnhancedRep& x, bool includes_W,
                                            const Subspace& seed_v, const Subspace& seed_vprime)
{
    x.validate_shapes();
    if (seed_v.ambient_dim() != x.dims.c || seed_vprime.ambient_dim() != x.dims.cprime)
        fail(Errc::shape_mismatch, "seed ambient dimension mismatch");

    Subspace sprime = krylov_closure(x.Aprime, x.Bprime, seed_vprime);

    Subspace base = sum_spaces(seed_v, image_space(x.F, sprime));
    if (includes_W)
        base = sum_spaces(base, column_space(x.I));
    Subspace s = krylov_closure(x.A, x.B, base);

    if (!includes_W && !image_space(x.J, s).is_zero())
        return std::nullopt;
    return SubrepWitness{includes_W, std::move(s), std::move(sprime)};
}

Rational slope_value(const SubrepWitness& w, const StabilityParam& p)
{
    Rational value = p.theta * Rational(w.S.dim()) + p.theta_prime * Rational(w.Sprime.dim());
    if (w.includes_W)
        value += p.theta_inf * Rational(p.dims.r);
    return value;
}

namespace {

RatMatrix lower_shift(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m.at(i + 1, i) = 1;
    return m;
}

} // namespace

EnhancedRep wall_witness_minus(DimVector dims)
{
    dims.validate();
    EnhancedRep x = EnhancedRep::zero(dims);
    x.A = lower_shift(dims.c);
    x.B = x.A;
    x.I.at(0, 0) = 1;
    return x;
}

EnhancedRep wall_witness_plus(DimVector dims)
{
    dims.validate();
    if (dims.cprime < 1 || dims.cprime > dims.c)
        fail(Errc::bad_dims, "plus witness requires 1 <= cprime <= c");
    EnhancedRep x = wall_witness_minus(dims);
    x.Aprime = lower_shift(dims.cprime);
    x.Bprime = x.Aprime;
    for (std::size_t j = 0; j < dims.cprime; ++j)
        x.F.at(dims.c - dims.cprime + j, j) = 1;
    return x;
}

WallReport verify_wall_witness(Wall which, DimVector dims)
{
    dims.validate();
    if (dims.cprime < 1)
        fail(Errc::bad_dims, "wall verification requires cprime >= 1");

    WallReport rep;
    rep.which = which;
    rep.dims = dims;

    EnhancedRep x = which == Wall::Minus ? wall_witness_minus(dims) : wall_witness_plus(dims);
    rep.residuals_zero = satisfies_relations(x);

    // Semistability evidence. For the minus witness the closure condition
    // says every subrepresentation carrying W has full V; for the plus
    // witness the same closure argument applies and F injectivity handles
    // the subrepresentations without W.
    rep.closure_full = krylov_closure(x.A, x.B, column_space(x.I)).is_full();
    rep.f_injective = which == Wall::Plus ? rank(x.F) == dims.cprime : false;

    StabilityParam wall_param = which == Wall::Minus ? make_param(-1, 0, dims)
                                                     : make_param(-1, 1, dims);

    auto destab = subrep_closure(x, false, Subspace(dims.c), Subspace::full(dims.cprime));
    if (destab) {
        rep.destabilizer = *destab;
        rep.slope = slope_value(*destab, wall_param);
        bool nonzero = destab->S.dim() + destab->Sprime.dim() > 0;
        bool proper = true; // numerical type (0, ., .) differs from (r, c, c') since r >= 1
        rep.destabilizer_valid = nonzero && proper && rep.slope == 0;
    }

    bool evidence = rep.residuals_zero && rep.closure_full
        && (which == Wall::Minus || rep.f_injective);
    rep.strictly_semistable = evidence && rep.destabilizer_valid;
    return rep;
}

std::string to_json(const WallReport& report, bool pretty)
{
    using detail::json;
    json j{
        {"witness", report.which == Wall::Minus ? "minus" : "plus"},
        {"dims",
         json{{"r", report.dims.r}, {"c", report.dims.c}, {"cprime", report.dims.cprime}}},
        {"semistable_evidence",
         json{{"residuals_zero", report.residuals_zero},
              {"closure_full", report.closure_full},
              {"f_injective", report.which == Wall::Plus ? json(report.f_injective) : json(nullptr)}}},
        {"destabilizer",
         json{{"includes_W", report.destabilizer.includes_W},
              {"dimS", report.destabilizer.S.dim()},
              {"dimSprime", report.destabilizer.Sprime.dim()},
              {"slope", format_rational(report.slope)}}},
        {"verdict", report.strictly_semistable ? "strictly-semistable" : "failed"},
    };
    return pretty ? j.dump(2) : j.dump();
}

} // namespace enhadhm
