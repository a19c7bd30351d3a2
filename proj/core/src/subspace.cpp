#include "enhadhm/subspace.hpp"

#include "enhadhm/errors.hpp"

namespace enhadhm {

namespace {

void require_ambient(const Subspace& u, const Subspace& v, const char* op)
{
    if (u.ambient_dim() != v.ambient_dim())
        fail(Errc::shape_mismatch, std::string("ambient dimension mismatch in ") + op);
}

} // namespace

Subspace Subspace::span_of(const RatMatrix& generators)
{
    RrefResult rr = rref(generators.transpose());
    std::size_t k = rr.pivot_cols.size();
    Subspace s(generators.rows());
    s.basis_ = rr.reduced.block(0, 0, k, generators.rows()).transpose();
    return s;
}

Subspace Subspace::coordinate_span(std::size_t ambient_dim, const std::vector<std::size_t>& indices)
{
    RatMatrix g(ambient_dim, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j)
        g.at(indices[j], j) = 1;
    return span_of(g);
}

bool Subspace::contains(const RatMatrix& column_vector) const
{
    if (column_vector.rows() != ambient_ || column_vector.cols() != 1)
        fail(Errc::shape_mismatch, "vector/ambient dimension mismatch");
    return rank(hstack(basis_, column_vector)) == dim();
}

bool Subspace::contains(const Subspace& other) const
{
    require_ambient(*this, other, "containment test");
    return rank(hstack(basis_, other.basis_)) == dim();
}

Subspace sum_spaces(const Subspace& u, const Subspace& v)
{
    require_ambient(u, v, "sum of subspaces");
    return Subspace::span_of(hstack(u.basis(), v.basis()));
}

Subspace intersect_spaces(const Subspace& u, const Subspace& v)
{
    require_ambient(u, v, "intersection of subspaces");
    // x = U a = V b  <=>  (a, b) in ker[U | -V]
    RatMatrix k = kernel_basis(hstack(u.basis(), -v.basis()));
    RatMatrix a_part = k.block(0, 0, u.dim(), k.cols());
    return Subspace::span_of(u.basis() * a_part);
}

Subspace image_space(const RatMatrix& m, const Subspace& u)
{
    if (m.cols() != u.ambient_dim())
        fail(Errc::shape_mismatch, "ambient dimension mismatch in image");
    return Subspace::span_of(m * u.basis());
}

Subspace preimage(const RatMatrix& m, const Subspace& u)
{
    if (m.rows() != u.ambient_dim())
        fail(Errc::shape_mismatch, "ambient dimension mismatch in preimage");
    RatMatrix k = kernel_basis(hstack(m, -u.basis()));
    return Subspace::span_of(k.block(0, 0, m.cols(), k.cols()));
}

std::optional<AffineSolution> solve_affine(const RatMatrix& m, const RatMatrix& b)
{
    if (b.rows() != m.rows() || b.cols() != 1)
        fail(Errc::shape_mismatch, "right-hand side shape mismatch");
    RrefResult rr = rref(hstack(m, b));
    for (std::size_t p : rr.pivot_cols)
        if (p == m.cols())
            return std::nullopt;
    RatMatrix x(m.cols(), 1);
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x.at(rr.pivot_cols[i], 0) = rr.reduced.at(i, m.cols());
    return AffineSolution{std::move(x), kernel(m)};
}

} // namespace enhadhm
