#include "enhadhm/constructions.hpp"

#include "enhadhm/deformation.hpp"
#include "enhadhm/errors.hpp"
#include "enhadhm/stability.hpp"
#include "json_detail.hpp"
#include "linear_map_detail.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <string>

namespace enhadhm {

void LiftAnsatz::validate() const
{
    base.validate_shapes();
    std::size_t cp = Aprime.rows();
    std::size_t m = base.c;
    if (Aprime.cols() != cp || Bprime.rows() != cp || Bprime.cols() != cp)
        fail(Errc::shape_mismatch, "Aprime/Bprime must be square of equal size");
    if (Atilde.rows() != cp || Atilde.cols() != m || Btilde.rows() != cp || Btilde.cols() != m)
        fail(Errc::shape_mismatch, "tilde blocks must be cprime x (c - cprime)");
    if (Itilde.rows() != cp || Itilde.cols() != base.r)
        fail(Errc::shape_mismatch, "Itilde must be cprime x r");
    if (!commutator(Aprime, Bprime).is_zero())
        fail(Errc::noncommuting_pair, "lift ansatz requires [Aprime, Bprime] = 0");
}

EnhancedRep assemble_lift(const LiftAnsatz& ansatz)
{
    ansatz.validate();
    std::size_t cp = ansatz.cprime();
    std::size_t m = ansatz.base.c;
    std::size_t c = cp + m;

    EnhancedRep x = EnhancedRep::zero({ansatz.base.r, c, cp});
    x.A.set_block(0, 0, ansatz.Aprime);
    x.A.set_block(0, cp, ansatz.Atilde);
    x.A.set_block(cp, cp, ansatz.base.A);
    x.B.set_block(0, 0, ansatz.Bprime);
    x.B.set_block(0, cp, ansatz.Btilde);
    x.B.set_block(cp, cp, ansatz.base.B);
    x.I.set_block(0, 0, ansatz.Itilde);
    x.I.set_block(cp, 0, ansatz.base.I);
    x.J.set_block(0, cp, ansatz.base.J);
    x.Aprime = ansatz.Aprime;
    x.Bprime = ansatz.Bprime;
    x.F.set_block(0, 0, RatMatrix::identity(cp));
    return x;
}

LiftSolveResult lift_solve(const AdhmRep& base, const RatMatrix& aprime, const RatMatrix& bprime)
{
    base.validate_shapes();
    std::size_t cp = aprime.rows();
    std::size_t m = base.c;
    std::size_t r = base.r;
    if (aprime.cols() != cp || bprime.rows() != cp || bprime.cols() != cp)
        fail(Errc::shape_mismatch, "Aprime/Bprime must be square of equal size");
    if (!commutator(aprime, bprime).is_zero())
        fail(Errc::noncommuting_pair, "lift system requires [Aprime, Bprime] = 0");

    // A'Bt + At B'' - B'At - Bt A'' + It J'' = 0, linear in (At, Bt, It).
    std::vector<detail::Shape> unknowns = {{cp, m}, {cp, m}, {cp, r}};
    std::vector<detail::Shape> target = {{cp, m}};
    RatMatrix system = detail::assemble_linear_map(
        unknowns, target, [&](const detail::Tuple& v) -> detail::Tuple {
            const RatMatrix &at = v[0], &bt = v[1], &it = v[2];
            return {aprime * bt + at * base.B - bprime * at - bt * base.A + it * base.J};
        });

    LiftSolveResult result{
        LiftAnsatz{base, aprime, bprime, RatMatrix(cp, m), RatMatrix(cp, m), RatMatrix(cp, r)},
        0, kernel_basis(system)};
    result.kernel_dim = result.kernel.cols();
    return result;
}

LiftAnsatz ansatz_from_vector(const AdhmRep& base, const RatMatrix& aprime,
                              const RatMatrix& bprime, const RatMatrix& solution)
{
    std::size_t cp = aprime.rows();
    std::size_t m = base.c;
    std::size_t r = base.r;
    std::size_t expected = cp * m * 2 + cp * r;
    if (solution.rows() != expected || solution.cols() != 1)
        fail(Errc::shape_mismatch, "solution vector has wrong length");

    std::size_t pos = 0;
    const auto read_block = [&](std::size_t rows, std::size_t cols) {
        RatMatrix block(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i)
                block.at(i, j) = solution.at(pos++, 0);
        return block;
    };

    LiftAnsatz ansatz{base, aprime, bprime, RatMatrix(), RatMatrix(), RatMatrix()};
    ansatz.Atilde = read_block(cp, m);
    ansatz.Btilde = read_block(cp, m);
    ansatz.Itilde = read_block(cp, r);
    ansatz.validate();
    return ansatz;
}

AdhmRep quotient_adhm(const EnhancedRep& x)
{
    x.validate_shapes();
    if (!satisfies_relations(x))
        fail(Errc::not_representation, "not a representation: relation residuals are nonzero");
    std::size_t c = x.dims.c;
    std::size_t cp = x.dims.cprime;
    if (rank(x.F) != cp)
        fail(Errc::quotient_undefined, "quotient undefined: F is not injective");

    // Greedy coordinate completion of im(F) to a basis of V.
    Subspace span = column_space(x.F);
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < c && span.dim() < c; ++i) {
        RatMatrix e(c, 1);
        e.at(i, 0) = 1;
        if (!span.contains(e)) {
            complement.push_back(i);
            span = sum_spaces(span, Subspace::span_of(e));
        }
    }

    RatMatrix selection(c, complement.size());
    for (std::size_t j = 0; j < complement.size(); ++j)
        selection.at(complement[j], j) = 1;

    auto basis_inverse = inverse(hstack(x.F, selection));
    if (!basis_inverse)
        fail(Errc::quotient_undefined, "quotient undefined: complement completion failed");
    // Projection V -> V'' in the coordinates of the chosen complement.
    RatMatrix projection = basis_inverse->block(cp, 0, c - cp, c);

    AdhmRep quotient;
    quotient.r = x.dims.r;
    quotient.c = c - cp;
    quotient.A = projection * x.A * selection;
    quotient.B = projection * x.B * selection;
    quotient.I = projection * x.I;
    quotient.J = x.J * selection;
    return quotient;
}

void VandermondeParams::validate() const
{
    if (r < 1 || c < 1)
        fail(Errc::bad_dims, "Vandermonde family requires r >= 1 and c >= 1");
    if (lambdas.size() != c)
        fail(Errc::vandermonde_hypothesis, "Vandermonde hypothesis violated: need c parameters");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] == 0)
            fail(Errc::vandermonde_hypothesis, "Vandermonde hypothesis violated: zero parameter");
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                fail(Errc::vandermonde_hypothesis,
                     "Vandermonde hypothesis violated: repeated parameter");
    }
}

EnhancedRep vandermonde_rep(const VandermondeParams& params)
{
    params.validate();
    EnhancedRep x = EnhancedRep::zero({params.r, params.c, 1});
    x.A = RatMatrix::diagonal(params.lambdas);
    x.B = x.A;
    for (std::size_t i = 0; i < params.c; ++i)
        x.I.at(i, 0) = 1;
    x.F.at(0, 0) = 1;
    x.Aprime.at(0, 0) = params.lambdas[0];
    x.Bprime.at(0, 0) = params.lambdas[0];
    return x;
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long int_in(long lo, long hi)
    {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    bool coin() { return engine_() % 2 == 0; }

private:
    std::mt19937_64 engine_; // fully specified by the standard, so portable
};

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 2)
{
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rng.int_in(-bound, bound);
    return m;
}

RatMatrix random_polynomial_in(Rng& rng, const RatMatrix& a)
{
    std::size_t n = a.rows();
    RatMatrix value(n, n);
    RatMatrix power = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        value = value + Rational(rng.int_in(-2, 2)) * power;
        power = power * a;
    }
    return value;
}

/* Commuting pair: both diagonal, or a random matrix with a polynomial
 * in it. Degenerate members (zero, nilpotent) appear on purpose; the
 * interesting representation-theoretic strata live there. */
void random_commuting_pair(Rng& rng, std::size_t n, RatMatrix& a, RatMatrix& b)
{
    switch (n == 0 ? 0 : rng.index(3)) {
    case 0: {
        std::vector<Rational> da(n), db(n);
        for (std::size_t i = 0; i < n; ++i) {
            da[i] = rng.int_in(-2, 2);
            db[i] = rng.int_in(-2, 2);
        }
        a = RatMatrix::diagonal(da);
        b = RatMatrix::diagonal(db);
        break;
    }
    case 1:
        a = random_matrix(rng, n, n);
        b = random_polynomial_in(rng, a);
        break;
    default: {
        a = RatMatrix(n, n); // nilpotent shift with random subdiagonal
        for (std::size_t i = 0; i + 1 < n; ++i)
            a.at(i + 1, i) = rng.int_in(-2, 2);
        b = random_polynomial_in(rng, a);
        break;
    }
    }
}

RatMatrix random_unimodular(Rng& rng, std::size_t n)
{
    RatMatrix lower = RatMatrix::identity(n);
    RatMatrix upper = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower.at(i, j) = rng.int_in(-2, 2);
            upper.at(j, i) = rng.int_in(-2, 2);
        }
    return lower * upper;
}

std::optional<AdhmRep> random_stable_base(Rng& rng, std::size_t r, std::size_t m)
{
    for (int attempt = 0; attempt < 8; ++attempt) {
        AdhmRep base = AdhmRep::zero(r, m);
        random_commuting_pair(rng, m, base.A, base.B);
        base.I = random_matrix(rng, m, r);
        if (rng.coin())
            for (std::size_t i = 0; i < m; ++i)
                base.I.at(i, 0) = 1;
        if (is_adhm_stable(base))
            return base;
    }
    return std::nullopt;
}

std::optional<EnhancedRep> random_stable_lift(Rng& rng, DimVector dims)
{
    auto base = random_stable_base(rng, dims.r, dims.c - dims.cprime);
    if (!base)
        return std::nullopt;

    RatMatrix aprime, bprime;
    random_commuting_pair(rng, dims.cprime, aprime, bprime);

    LiftSolveResult solved = lift_solve(*base, aprime, bprime);
    RatMatrix coeffs(solved.kernel_dim, 1);
    for (std::size_t i = 0; i < solved.kernel_dim; ++i)
        coeffs.at(i, 0) = rng.int_in(-2, 2);
    EnhancedRep x = assemble_lift(
        ansatz_from_vector(*base, aprime, bprime, solved.kernel * coeffs));

    if (!satisfies_relations(x))
        return std::nullopt;
    if (rng.coin())
        x = gauge_transform(x, random_unimodular(rng, dims.c), random_unimodular(rng, dims.cprime));
    if (!is_stable_in_chamber(x, make_param(-2, 1, dims)))
        return std::nullopt;
    return x;
}

} // namespace

std::vector<EnhancedRep> sample_stable(DimVector dims, std::uint64_t seed, std::size_t attempts)
{
    dims.validate();
    if (dims.cprime < 1)
        fail(Errc::cprime_required, "stable sampling requires cprime >= 1");

    std::vector<EnhancedRep> out;
    if (dims.cprime > dims.c)
        return out; // F can never be injective

    std::set<std::string> seen;
    const auto push = [&](const EnhancedRep& x) {
        if (seen.insert(to_json(x)).second)
            out.push_back(x);
    };

    push(wall_witness_plus(dims));
    if (dims.cprime == 1) {
        VandermondeParams params{dims.r, dims.c, {}};
        for (std::size_t i = 0; i < dims.c; ++i)
            params.lambdas.push_back(Rational(static_cast<long>(i) + 1));
        push(vandermonde_rep(params));
    }

    Rng rng(seed);
    for (std::size_t i = 0; i < attempts; ++i)
        if (auto x = random_stable_lift(rng, dims))
            push(*x);
    return out;
}

std::optional<ObstructedHit> search_obstructed(DimVector dims, std::uint64_t seed,
                                               std::size_t attempts)
{
    dims.validate();
    if (dims.cprime < 1)
        fail(Errc::cprime_required, "obstruction search requires cprime >= 1");
    if (dims.cprime > dims.c)
        return std::nullopt;

    Rng rng(seed);
    for (std::size_t i = 0; i < attempts; ++i) {
        auto x = random_stable_lift(rng, dims);
        if (!x)
            continue;
        CohomologyReport coh = cohomology(deformation_complex(*x));
        if (coh.h[2] > 0)
            return ObstructedHit{std::move(*x), std::move(coh)};
    }
    return std::nullopt;
}

void write_corpus(std::ostream& out, DimVector dims, std::uint64_t seed,
                  const std::vector<EnhancedRep>& reps)
{
    detail::json header{
        {"dims", detail::json{{"r", dims.r}, {"c", dims.c}, {"cprime", dims.cprime}}},
        {"seed", seed},
        {"generator", "enhadhm/0.1.0"},
    };
    out << header.dump() << '\n';
    for (const EnhancedRep& x : reps)
        out << to_json(x) << '\n';
}

std::vector<EnhancedRep> read_corpus(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        fail(Errc::bad_json, "corpus is missing its header line");
    detail::json header = detail::parse_json(line);
    detail::get_field(header, "dims");
    detail::get_field(header, "seed");

    std::vector<EnhancedRep> reps;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        reps.push_back(rep_from_json(line));
    }
    return reps;
}

} // namespace enhadhm
