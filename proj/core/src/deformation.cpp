#include "enhadhm/deformation.hpp"

#include "enhadhm/errors.hpp"
#include "enhadhm/stability.hpp"
#include "enhadhm/subspace.hpp"
#include "json_detail.hpp"
#include "linear_map_detail.hpp"

#include <stdexcept>

namespace enhadhm {

namespace {

using detail::assemble_linear_map;
using detail::Shape;
using detail::total_dim;
using detail::Tuple;

void require_representation(const EnhancedRep& x)
{
    x.validate_shapes();
    if (x.dims.cprime < 1)
        fail(Errc::cprime_required, "deformation complexes require cprime >= 1");
    if (!satisfies_relations(x))
        fail(Errc::not_representation, "not a representation: relation residuals are nonzero");
}

bool use_simplified(const EnhancedRep& x, ComplexMode mode)
{
    return mode == ComplexMode::Auto && x.dims.cprime == 1;
}

/* Shape tables. cx degree two loses the End(V') summand in the
 * simplified mode; the primed complex loses its top term. */
std::vector<std::vector<Shape>> cx_shape_table(const DimVector& d, bool simplified)
{
    std::size_t r = d.r, c = d.c, cp = d.cprime;
    std::vector<std::vector<Shape>> t(4);
    t[0] = {{c, c}, {cp, cp}};
    t[1] = {{c, c}, {c, c}, {c, r}, {r, c}, {cp, cp}, {cp, cp}, {c, cp}};
    if (simplified)
        t[2] = {{c, c}, {c, cp}, {c, cp}, {r, cp}};
    else
        t[2] = {{c, c}, {c, cp}, {c, cp}, {r, cp}, {cp, cp}};
    t[3] = {{c, cp}};
    return t;
}

std::vector<std::vector<Shape>> adhm_shape_table(std::size_t r, std::size_t c)
{
    return {{{c, c}}, {{c, c}, {c, c}, {c, r}, {r, c}}, {{c, c}}};
}

std::vector<std::vector<Shape>> primed_shape_table(std::size_t cp, bool simplified)
{
    if (simplified)
        return {{{cp, cp}}, {{cp, cp}, {cp, cp}}};
    return {{{cp, cp}}, {{cp, cp}, {cp, cp}}, {{cp, cp}}};
}

std::vector<std::vector<Shape>> coupling_shape_table(const DimVector& d)
{
    std::size_t r = d.r, c = d.c, cp = d.cprime;
    return {{{c, cp}}, {{c, cp}, {c, cp}, {r, cp}}, {{c, cp}}};
}

std::vector<std::size_t> degree_dims_of(const std::vector<std::vector<Shape>>& table)
{
    std::vector<std::size_t> dims;
    dims.reserve(table.size());
    for (const auto& shapes : table)
        dims.push_back(total_dim(shapes));
    return dims;
}

} // namespace

ChainComplex deformation_complex(const EnhancedRep& x, ComplexMode mode)
{
    require_representation(x);
    bool simplified = use_simplified(x, mode);
    auto table = cx_shape_table(x.dims, simplified);

    const RatMatrix &A = x.A, &B = x.B, &I = x.I, &J = x.J;
    const RatMatrix &Ap = x.Aprime, &Bp = x.Bprime, &F = x.F;

    RatMatrix d0 = assemble_linear_map(table[0], table[1], [&](const Tuple& v) -> Tuple {
        const RatMatrix &h = v[0], &hp = v[1];
        RatMatrix prime_a = simplified ? RatMatrix(x.dims.cprime, x.dims.cprime)
                                       : commutator(hp, Ap);
        RatMatrix prime_b = simplified ? RatMatrix(x.dims.cprime, x.dims.cprime)
                                       : commutator(hp, Bp);
        return {commutator(h, A), commutator(h, B), h * I, -(J * h),
                std::move(prime_a), std::move(prime_b), h * F - F * hp};
    });

    RatMatrix d1 = assemble_linear_map(table[1], table[2], [&](const Tuple& v) -> Tuple {
        const RatMatrix &a = v[0], &b = v[1], &i = v[2], &j = v[3];
        const RatMatrix &ap = v[4], &bp = v[5], &f = v[6];
        Tuple out;
        out.push_back(commutator(a, B) + commutator(A, b) + I * j + i * J);
        out.push_back(A * f + a * F - F * ap - f * Ap);
        out.push_back(B * f + b * F - F * bp - f * Bp);
        out.push_back(j * F + J * f);
        if (!simplified)
            out.push_back(commutator(ap, Bp) + commutator(Ap, bp));
        return out;
    });

    RatMatrix d2 = assemble_linear_map(table[2], table[3], [&](const Tuple& v) -> Tuple {
        const RatMatrix &c1 = v[0], &c2 = v[1], &c3 = v[2], &c4 = v[3];
        RatMatrix value = c1 * F + B * c2 - c2 * Bp - A * c3 + c3 * Ap - I * c4;
        if (!simplified)
            value = value - F * v[4];
        return {std::move(value)};
    });

    return ChainComplex(degree_dims_of(table), {std::move(d0), std::move(d1), std::move(d2)});
}

ChainComplex adhm_complex(const AdhmRep& adhm)
{
    adhm.validate_shapes();
    if (!adhm.equation_residual().is_zero())
        fail(Errc::not_representation, "not a representation: ADHM equation residual is nonzero");

    auto table = adhm_shape_table(adhm.r, adhm.c);
    const RatMatrix &A = adhm.A, &B = adhm.B, &I = adhm.I, &J = adhm.J;

    RatMatrix d0 = assemble_linear_map(table[0], table[1], [&](const Tuple& v) -> Tuple {
        const RatMatrix& h = v[0];
        return {commutator(h, A), commutator(h, B), h * I, -(J * h)};
    });
    RatMatrix d1 = assemble_linear_map(table[1], table[2], [&](const Tuple& v) -> Tuple {
        const RatMatrix &a = v[0], &b = v[1], &i = v[2], &j = v[3];
        return {commutator(a, B) + commutator(A, b) + I * j + i * J};
    });
    return ChainComplex(degree_dims_of(table), {std::move(d0), std::move(d1)});
}

ChainComplex adhm_complex(const EnhancedRep& x)
{
    return adhm_complex(adhm_part(x));
}

ChainComplex primed_complex(const EnhancedRep& x, ComplexMode mode)
{
    require_representation(x);
    bool simplified = use_simplified(x, mode);
    auto table = primed_shape_table(x.dims.cprime, simplified);
    const RatMatrix &Ap = x.Aprime, &Bp = x.Bprime;

    if (simplified) {
        RatMatrix d0(total_dim(table[1]), total_dim(table[0])); // the zero map
        return ChainComplex(degree_dims_of(table), {std::move(d0)});
    }

    RatMatrix d0 = assemble_linear_map(table[0], table[1], [&](const Tuple& v) -> Tuple {
        return {commutator(v[0], Ap), commutator(v[0], Bp)};
    });
    RatMatrix d1 = assemble_linear_map(table[1], table[2], [&](const Tuple& v) -> Tuple {
        return {commutator(v[0], Bp) + commutator(Ap, v[1])};
    });
    return ChainComplex(degree_dims_of(table), {std::move(d0), std::move(d1)});
}

ChainComplex coupling_complex(const EnhancedRep& x)
{
    require_representation(x);
    auto table = coupling_shape_table(x.dims);
    const RatMatrix &A = x.A, &B = x.B, &I = x.I, &J = x.J;
    const RatMatrix &Ap = x.Aprime, &Bp = x.Bprime;

    RatMatrix d0 = assemble_linear_map(table[0], table[1], [&](const Tuple& v) -> Tuple {
        const RatMatrix& f = v[0];
        return {-(A * f) + f * Ap, -(B * f) + f * Bp, -(J * f)};
    });
    RatMatrix d1 = assemble_linear_map(table[1], table[2], [&](const Tuple& v) -> Tuple {
        const RatMatrix &c2 = v[0], &c3 = v[1], &c4 = v[2];
        return {-(B * c2) + c2 * Bp + A * c3 - c3 * Ap + I * c4};
    });
    return ChainComplex(degree_dims_of(table), {std::move(d0), std::move(d1)});
}

ChainMap coupling_map(const EnhancedRep& x, ComplexMode mode)
{
    require_representation(x);
    bool simplified = use_simplified(x, mode);
    const DimVector& d = x.dims;
    const RatMatrix& F = x.F;

    ChainComplex source = direct_sum(adhm_complex(x), primed_complex(x, mode));
    ChainComplex target = coupling_complex(x);

    std::vector<Shape> src0 = {{d.c, d.c}, {d.cprime, d.cprime}};
    std::vector<Shape> src1 = {{d.c, d.c}, {d.c, d.c},       {d.c, d.r},
                               {d.r, d.c}, {d.cprime, d.cprime}, {d.cprime, d.cprime}};
    std::vector<Shape> dst0 = {{d.c, d.cprime}};
    std::vector<Shape> dst1 = {{d.c, d.cprime}, {d.c, d.cprime}, {d.r, d.cprime}};

    RatMatrix rho0 = assemble_linear_map(src0, dst0, [&](const Tuple& v) -> Tuple {
        return {-(v[0] * F) + F * v[1]};
    });
    RatMatrix rho1 = assemble_linear_map(src1, dst1, [&](const Tuple& v) -> Tuple {
        return {-(v[0] * F) + F * v[4], -(v[1] * F) + F * v[5], -(v[3] * F)};
    });
    RatMatrix rho2;
    if (simplified) {
        rho2 = assemble_linear_map({{d.c, d.c}}, dst0, [&](const Tuple& v) -> Tuple {
            return {-(v[0] * F)};
        });
    } else {
        rho2 = assemble_linear_map(src0, dst0, [&](const Tuple& v) -> Tuple {
            return {-(v[0] * F) + F * v[1]};
        });
    }

    return ChainMap(std::move(source), std::move(target),
                    {std::move(rho0), std::move(rho1), std::move(rho2)});
}

long long expected_dimension(DimVector dims)
{
    dims.validate();
    if (dims.cprime == 0)
        fail(Errc::cprime_required, "expected dimension is defined for cprime >= 1");
    long long r = static_cast<long long>(dims.r);
    long long c = static_cast<long long>(dims.c);
    long long cp = static_cast<long long>(dims.cprime);
    if (cp > 1)
        return r * (2 * c - cp);
    return 2 * r * c - r + 1;
}

ObstructionReport check_perfect_obstruction(const EnhancedRep& x)
{
    StabilityParam p = make_param(-2, 1, x.dims);
    if (!is_stable_in_chamber(x, p))
        fail(Errc::unstable_input, "theorem requires stability");

    ObstructionReport report;
    report.coh = cohomology(deformation_complex(x));
    report.expected = expected_dimension(x.dims);
    report.h0_zero = report.coh.h[0] == 0;
    report.h3_zero = report.coh.h[3] == 0;
    report.pass = report.h0_zero && report.h3_zero;
    return report;
}

std::string to_json(const ObstructionReport& report, bool pretty)
{
    detail::json j{
        {"h", report.coh.h},
        {"euler", report.coh.euler},
        {"expected_dimension", report.expected},
        {"h0_zero", report.h0_zero},
        {"h3_zero", report.h3_zero},
        {"pass", report.pass},
    };
    return pretty ? j.dump(2) : j.dump();
}

namespace {

/* The deformation complex is, term by term, the direct sum of the source
 * of rho and the shifted coupling complex. These tables record which
 * block of which complex each summand comes from; the selection matrices
 * below realize the identification. */
enum class Origin { Source, Coupling };
struct BlockRef {
    Origin origin;
    std::size_t index;
};

std::vector<std::vector<BlockRef>> cx_block_map(bool simplified)
{
    using enum Origin;
    std::vector<std::vector<BlockRef>> map(4);
    map[0] = {{Source, 0}, {Source, 1}};
    map[1] = {{Source, 0}, {Source, 1}, {Source, 2}, {Source, 3},
              {Source, 4}, {Source, 5}, {Coupling, 0}};
    if (simplified)
        map[2] = {{Source, 0}, {Coupling, 0}, {Coupling, 1}, {Coupling, 2}};
    else
        map[2] = {{Source, 0}, {Coupling, 0}, {Coupling, 1}, {Coupling, 2}, {Source, 1}};
    map[3] = {{Coupling, 0}};
    return map;
}

std::vector<std::vector<Shape>> source_shape_table(const DimVector& d, bool simplified)
{
    auto adhm = adhm_shape_table(d.r, d.c);
    auto primed = primed_shape_table(d.cprime, simplified);
    std::vector<std::vector<Shape>> t(std::max(adhm.size(), primed.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i < adhm.size())
            t[i].insert(t[i].end(), adhm[i].begin(), adhm[i].end());
        if (i < primed.size())
            t[i].insert(t[i].end(), primed[i].begin(), primed[i].end());
    }
    return t;
}

std::vector<std::size_t> block_offsets(const std::vector<Shape>& shapes)
{
    std::vector<std::size_t> offsets(shapes.size() + 1, 0);
    for (std::size_t i = 0; i < shapes.size(); ++i)
        offsets[i + 1] = offsets[i] + shapes[i].rows * shapes[i].cols;
    return offsets;
}

struct ConeStructure {
    std::vector<RatMatrix> to_source;      // CX^n -> Source^n projections
    std::vector<RatMatrix> from_coupling;  // E^{n-1} -> CX^n inclusions
};

ConeStructure cone_structure(const DimVector& dims, bool simplified)
{
    auto cx_table = cx_shape_table(dims, simplified);
    auto src_table = source_shape_table(dims, simplified);
    auto coup_table = coupling_shape_table(dims);
    auto blocks = cx_block_map(simplified);

    ConeStructure cs;
    for (std::size_t n = 0; n < 4; ++n) {
        std::size_t cx_dim = total_dim(cx_table[n]);
        std::size_t src_dim = n < src_table.size() ? total_dim(src_table[n]) : 0;
        std::size_t coup_dim = n >= 1 && n - 1 < coup_table.size() ? total_dim(coup_table[n - 1]) : 0;

        RatMatrix pi(src_dim, cx_dim);
        RatMatrix iota(cx_dim, coup_dim);
        auto src_offsets = n < src_table.size() ? block_offsets(src_table[n]) : std::vector<std::size_t>{0};
        auto coup_offsets = n >= 1 && n - 1 < coup_table.size() ? block_offsets(coup_table[n - 1])
                                                                : std::vector<std::size_t>{0};

        std::size_t cx_off = 0;
        for (std::size_t b = 0; b < blocks[n].size(); ++b) {
            std::size_t size = cx_table[n][b].rows * cx_table[n][b].cols;
            const BlockRef& ref = blocks[n][b];
            if (ref.origin == Origin::Source) {
                for (std::size_t k = 0; k < size; ++k)
                    pi.at(src_offsets[ref.index] + k, cx_off + k) = 1;
            } else {
                for (std::size_t k = 0; k < size; ++k)
                    iota.at(cx_off + k, coup_offsets[ref.index] + k) = 1;
            }
            cx_off += size;
        }
        cs.to_source.push_back(std::move(pi));
        cs.from_coupling.push_back(std::move(iota));
    }
    return cs;
}

} // namespace

LesReport check_les_consistency(const EnhancedRep& x, bool deep)
{
    ChainComplex cx = deformation_complex(x);
    ChainComplex adhm = adhm_complex(x);
    ChainComplex primed = primed_complex(x);
    ChainComplex coupling = coupling_complex(x);
    ChainMap rho = coupling_map(x);

    LesReport report;
    report.h_total = cohomology(cx);
    report.h_adhm = cohomology(adhm);
    report.h_primed = cohomology(primed);
    report.h_coupling = cohomology(coupling);

    const auto h_at = [](const CohomologyReport& r, std::size_t i) -> long long {
        return i < r.h.size() ? static_cast<long long>(r.h[i]) : 0;
    };
    long long sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        long long term = h_at(report.h_total, i) - h_at(report.h_adhm, i)
            - h_at(report.h_primed, i) + h_at(report.h_coupling, i);
        sum += (i % 2 == 0 ? 1 : -1) * term;
    }
    report.alternating_sum = sum;
    report.alternating_sum_zero = sum == 0;
    report.h0_bounded = h_at(report.h_total, 0) <= h_at(report.h_adhm, 0) + h_at(report.h_primed, 0);

    if (deep) {
        bool simplified = x.dims.cprime == 1;
        ConeStructure cs = cone_structure(x.dims, simplified);
        const ChainComplex& src = rho.source();
        const ChainComplex& coup = rho.target();

        // Identification of the deformation complex with the shifted cone,
        // at the level of matrices. A failure here is an implementation
        // bug, never a property of the input.
        for (std::size_t n = 0; n + 1 < 4; ++n) {
            RatMatrix lhs = cs.to_source[n + 1] * cx.differential(n);
            RatMatrix rhs = src.differential(n) * cs.to_source[n];
            if (!(lhs == rhs))
                throw std::logic_error("cone identification failed (projection)");
        }
        for (std::size_t n = 1; n + 1 < 4; ++n) {
            RatMatrix lhs = cx.differential(n) * cs.from_coupling[n];
            RatMatrix rhs = cs.from_coupling[n + 1] * coup.differential(n - 1);
            if (!(lhs == (-rhs)))
                throw std::logic_error("cone identification failed (inclusion)");
        }

        const auto cocycles = [](const ChainComplex& c, std::size_t n) {
            if (n + 1 < c.length())
                return kernel(c.differential(n));
            return Subspace::full(c.dim_at(n));
        };
        const auto coboundaries = [](const ChainComplex& c, std::size_t n) {
            if (n == 0)
                return Subspace(c.dim_at(0));
            return column_space(c.differential(n - 1));
        };

        bool exact = true;
        // Nodes H^n of the deformation complex.
        for (std::size_t n = 0; n < 4 && exact; ++n) {
            Subspace incoming = n >= 1 ? image_space(cs.from_coupling[n], cocycles(coup, n - 1))
                                       : Subspace(cx.dim_at(0));
            Subspace lhs = sum_spaces(incoming, coboundaries(cx, n));
            Subspace rhs = intersect_spaces(cocycles(cx, n),
                                            preimage(cs.to_source[n], coboundaries(src, n)));
            exact = lhs == rhs;
        }
        // Nodes H^n of the source of rho.
        for (std::size_t n = 0; n < 3 && exact; ++n) {
            Subspace lhs = sum_spaces(image_space(cs.to_source[n], cocycles(cx, n)),
                                      coboundaries(src, n));
            Subspace rhs = intersect_spaces(cocycles(src, n),
                                            preimage(rho.component(n), coboundaries(coup, n)));
            exact = lhs == rhs;
        }
        // Nodes H^n of the coupling complex.
        for (std::size_t n = 0; n < 3 && exact; ++n) {
            Subspace lhs = sum_spaces(image_space(rho.component(n), cocycles(src, n)),
                                      coboundaries(coup, n));
            Subspace rhs = intersect_spaces(
                cocycles(coup, n), preimage(cs.from_coupling[n + 1], coboundaries(cx, n + 1)));
            exact = lhs == rhs;
        }

        report.deep_checked = true;
        report.deep_exact = exact;
    }

    report.pass = report.alternating_sum_zero && report.h0_bounded
        && (!report.deep_checked || report.deep_exact);
    return report;
}

std::string to_json(const LesReport& report, bool pretty)
{
    detail::json j{
        {"h_total", report.h_total.h},
        {"h_adhm", report.h_adhm.h},
        {"h_primed", report.h_primed.h},
        {"h_coupling", report.h_coupling.h},
        {"alternating_sum", report.alternating_sum},
        {"h0_bounded", report.h0_bounded},
        {"pass", report.pass},
    };
    if (report.deep_checked)
        j["deep_exact"] = report.deep_exact;
    return pretty ? j.dump(2) : j.dump();
}

bool check_H0rho_injective(const EnhancedRep& x)
{
    require_representation(x);
    ChainComplex primed = primed_complex(x);
    Subspace cocycles = kernel(primed.differential(0));

    // rho0 restricted to the End(V') summand is h' -> F h'.
    std::vector<Shape> src = {{x.dims.cprime, x.dims.cprime}};
    std::vector<Shape> dst = {{x.dims.c, x.dims.cprime}};
    RatMatrix m = assemble_linear_map(src, dst, [&](const Tuple& v) -> Tuple {
        return {x.F * v[0]};
    });
    return rank(m * cocycles.basis()) == cocycles.dim();
}

bool check_rho1_surjective_on_cocycles(const EnhancedRep& x)
{
    if (x.dims.cprime != 1)
        fail(Errc::cprime_required, "cocycle lifting check is defined for cprime = 1 only");
    require_representation(x);

    ChainMap rho = coupling_map(x);
    Subspace source_cocycles = kernel(rho.source().differential(1));
    Subspace target_cocycles = kernel(rho.target().differential(1));
    Subspace lifted = image_space(rho.component(1), source_cocycles);
    return lifted.contains(target_cocycles);
}

bool check_d1dual_injective(const EnhancedRep& x)
{
    x.validate_shapes();
    const DimVector& d = x.dims;
    std::vector<Shape> src = {{d.cprime, d.c}};
    std::vector<Shape> dst = {{d.cprime, d.c}, {d.cprime, d.c}, {d.cprime, d.r}};
    RatMatrix m = assemble_linear_map(src, dst, [&](const Tuple& v) -> Tuple {
        const RatMatrix& phi = v[0];
        return {x.Bprime * phi - phi * x.B, -(x.Aprime * phi) + phi * x.A, phi * x.I};
    });
    return rank(m) == d.cprime * d.c;
}

} // namespace enhadhm
